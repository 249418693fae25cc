#include "waring/hilbert.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

CIData::CIData(unsigned n, std::vector<unsigned> degrees)
    : num_vars(n), gen_degrees(std::move(degrees)) {
    if (num_vars == 0) throw std::invalid_argument("complete intersection needs variables");
    if (gen_degrees.empty()) throw std::invalid_argument("complete intersection needs generators");
    if (gen_degrees.size() > num_vars) {
        throw std::invalid_argument("more generators than variables");
    }
    for (unsigned d : gen_degrees) {
        if (d == 0) throw std::invalid_argument("generator degrees must be positive");
    }
}

unsigned CIData::socle_degree() const {
    if (!artinian()) throw std::domain_error("socle degree requires an Artinian quotient");
    unsigned tau = 0;
    for (unsigned d : gen_degrees) tau += d - 1;
    return tau;
}

Integer hilbert_function(const CIData& ci, unsigned i) {
    // prod_j (1 + t + ... + t^{a_j - 1}), truncated beyond degree i.
    std::vector<Integer> series(i + 1, Integer(0));
    series[0] = 1;
    for (unsigned a : ci.gen_degrees) {
        std::vector<Integer> next(i + 1, Integer(0));
        for (unsigned k = 0; k <= i; ++k) {
            if (series[k] == 0) continue;
            for (unsigned j = 0; j < a && k + j <= i; ++j) next[k + j] += series[k];
        }
        series = std::move(next);
    }
    // Remaining free variables contribute (1 - t)^{-m}.
    const unsigned free_vars = ci.num_vars - static_cast<unsigned>(ci.gen_degrees.size());
    for (unsigned v = 0; v < free_vars; ++v) {
        for (unsigned k = 1; k <= i; ++k) series[k] += series[k - 1];
    }
    return series[i];
}

namespace {

Integer count_survivors(const CIData& ci, unsigned var, unsigned remaining) {
    if (var == ci.num_vars) return remaining == 0 ? Integer(1) : Integer(0);
    const unsigned cap =
        var < ci.gen_degrees.size() ? std::min(ci.gen_degrees[var] - 1, remaining) : remaining;
    Integer total(0);
    for (unsigned e = 0; e <= cap; ++e) total += count_survivors(ci, var + 1, remaining - e);
    return total;
}

}  // namespace

Integer hilbert_function_bruteforce(const CIData& ci, unsigned i) {
    return count_survivors(ci, 0, i);
}

unsigned socle_degree(const std::vector<unsigned>& a) {
    if (a.empty()) throw std::invalid_argument("socle degree needs at least one generator degree");
    unsigned tau = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 2) throw std::invalid_argument("generator degrees must be >= 2");
        if (i && a[i - 1] > a[i]) throw std::invalid_argument("generator degrees must be sorted");
        tau += a[i] - 1;
    }
    return tau;
}

Lemma22Result lemma22_check(const std::vector<unsigned>& a) {
    const unsigned tau = socle_degree(a);  // validates the sequence
    const unsigned n = static_cast<unsigned>(a.size()) + 1;

    std::vector<unsigned> gens;
    gens.reserve(a.size() + 1);
    gens.push_back(1);
    gens.insert(gens.end(), a.begin(), a.end());
    const CIData ci(n, std::move(gens));

    Integer lhs(0);
    for (unsigned i = a[0]; i <= tau; ++i) lhs += hilbert_function(ci, i);

    Integer product(1);
    for (unsigned ai : a) product *= ai;
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), a[0] + n - 2, n - 1);
    const Integer rhs = product - binom;

    return Lemma22Result{lhs, rhs, lhs == rhs};
}

}  // namespace waring
