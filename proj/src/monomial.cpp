#include "waring/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace waring {

Monomial::Monomial(Exponents e) : exponents(std::move(e)) {
    if (exponents.empty()) throw std::invalid_argument("monomial needs at least one variable");
    unsigned long long total = 0;
    for (unsigned x : exponents) total += x;
    if (total > (1ull << 31)) throw std::invalid_argument("monomial degree too large");
}

unsigned Monomial::degree() const {
    return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

Monomial parse_monomial(std::string_view text) {
    std::size_t pos = 0;
    const auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    const auto parse_number = [&](const char* what) -> unsigned long {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) {
            throw std::invalid_argument(std::string("expected ") + what + " at position " +
                                        std::to_string(start) + " in monomial expression");
        }
        unsigned long value = 0;
        for (std::size_t i = start; i < pos; ++i) {
            value = value * 10 + static_cast<unsigned long>(text[i] - '0');
            if (value > 1000000) throw std::invalid_argument("number too large in monomial expression");
        }
        return value;
    };

    std::vector<std::pair<unsigned long, unsigned long>> factors;  // (variable, exponent)
    unsigned long max_var = 0;
    while (true) {
        skip_ws();
        if (pos >= text.size() || text[pos] != 'x') {
            throw std::invalid_argument("expected variable 'x<k>' at position " +
                                        std::to_string(pos) + " in monomial expression");
        }
        ++pos;
        const unsigned long var = parse_number("variable index");
        if (var == 0) throw std::invalid_argument("variables are 1-indexed");
        unsigned long exp = 1;
        skip_ws();
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            exp = parse_number("exponent");
        }
        factors.emplace_back(var, exp);
        max_var = std::max(max_var, var);
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] != '*') {
            throw std::invalid_argument("expected '*' at position " + std::to_string(pos) +
                                        " in monomial expression");
        }
        ++pos;
    }

    Exponents exponents(max_var, 0);
    for (const auto& [var, exp] : factors) {
        const unsigned long e = exponents[var - 1] + exp;
        if (e > 1000000) throw std::invalid_argument("exponent too large in monomial expression");
        exponents[var - 1] = static_cast<unsigned>(e);
    }
    return Monomial(std::move(exponents));
}

CanonicalMonomial::CanonicalMonomial(Exponents sorted_exponents,
                                     std::vector<std::size_t> variable_map)
    : exponents_(std::move(sorted_exponents)), variable_map_(std::move(variable_map)) {
    if (exponents_.empty()) throw std::invalid_argument("canonical monomial is empty");
    if (exponents_.size() != variable_map_.size()) {
        throw std::invalid_argument("canonical monomial: variable map size mismatch");
    }
    for (std::size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0) throw std::invalid_argument("canonical exponents must be positive");
        if (i && exponents_[i - 1] > exponents_[i]) {
            throw std::invalid_argument("canonical exponents must be sorted non-decreasing");
        }
    }
    std::set<std::size_t> seen(variable_map_.begin(), variable_map_.end());
    if (seen.size() != variable_map_.size()) {
        throw std::invalid_argument("canonical monomial: variable map is not injective");
    }
}

CanonicalMonomial CanonicalMonomial::from_sorted_exponents(Exponents sorted_exponents) {
    std::vector<std::size_t> identity(sorted_exponents.size());
    std::iota(identity.begin(), identity.end(), std::size_t{0});
    return CanonicalMonomial(std::move(sorted_exponents), std::move(identity));
}

unsigned CanonicalMonomial::degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0u);
}

std::ostream& operator<<(std::ostream& os, const CanonicalMonomial& m) {
    os << "(";
    for (std::size_t i = 0; i < m.exponents_.size(); ++i) {
        if (i) os << ",";
        os << m.exponents_[i];
    }
    return os << ")";
}

CanonicalMonomial normalize(const Monomial& m) {
    if (m.degree() == 0) {
        throw std::domain_error("constant has no Waring decomposition target");
    }
    std::vector<std::pair<unsigned, std::size_t>> kept;  // (exponent, original index)
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
        if (m.exponents[i] > 0) kept.emplace_back(m.exponents[i], i);
    }
    std::stable_sort(kept.begin(), kept.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    Exponents exps;
    std::vector<std::size_t> map;
    exps.reserve(kept.size());
    map.reserve(kept.size());
    for (const auto& [e, idx] : kept) {
        exps.push_back(e);
        map.push_back(idx);
    }
    return CanonicalMonomial(std::move(exps), std::move(map));
}

Integer waring_rank(const CanonicalMonomial& c) {
    Integer rank(1);
    const Exponents& b = c.exponents();
    for (std::size_t i = 1; i < b.size(); ++i) rank *= b[i] + 1;
    return rank;
}

Integer multiplicity_lower_bound(const std::vector<unsigned>& a) {
    if (a.size() < 2) throw std::invalid_argument("multiplicity bound needs n > 1");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 2) throw std::invalid_argument("multiplicity bound needs all degrees >= 2");
        if (i && a[i - 1] > a[i]) {
            throw std::invalid_argument("multiplicity bound needs sorted degrees");
        }
    }
    Integer s(1);
    for (std::size_t i = 1; i < a.size(); ++i) s *= a[i];
    return s;
}

Integer ci_multiplicity(const std::vector<unsigned>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("complete intersection needs generators");
    Integer m(1);
    for (unsigned d : degrees) m *= d;
    return m;
}

RankBounds coprime_rank_bounds(const std::vector<Monomial>& monomials) {
    if (monomials.empty()) throw std::invalid_argument("coprime bounds need at least one monomial");
    std::size_t ambient = 0;
    for (const Monomial& m : monomials) ambient = std::max(ambient, m.num_vars());

    const unsigned degree = monomials.front().degree();
    Exponents product(ambient, 0);
    Integer lower(0);
    for (const Monomial& m : monomials) {
        if (m.degree() != degree) {
            throw std::invalid_argument("coprime bounds need monomials of equal degree");
        }
        for (std::size_t v = 0; v < m.exponents.size(); ++v) {
            if (m.exponents[v] == 0) continue;
            if (product[v] != 0) {
                throw std::invalid_argument("monomials share variable x" + std::to_string(v + 1) +
                                            "; supports must be disjoint");
            }
            product[v] = m.exponents[v];
        }
        lower = std::max(lower, waring_rank(normalize(m)));
    }
    return RankBounds{lower, waring_rank(normalize(Monomial(std::move(product))))};
}

Integer generic_rank_naive(unsigned num_vars, unsigned degree) {
    if (num_vars == 0) throw std::invalid_argument("generic rank needs at least one variable");
    if (degree == 0) throw std::invalid_argument("generic rank needs degree >= 1");
    Integer binom;
    mpz_bin_uiui(binom.get_mpz_t(), degree + num_vars - 1, degree);
    return (binom + num_vars - 1) / num_vars;  // exact ceiling
}

ExtremalRank extremal_rank_ternary(unsigned d) {
    if (d < 3) throw std::invalid_argument("ternary extremal rank needs degree >= 3");
    if (d % 2 == 1) {
        const unsigned h = (d - 1) / 2;
        Integer value((d + 1) / 2);
        value *= (d + 1) / 2;
        return ExtremalRank{value, CanonicalMonomial::from_sorted_exponents({1, h, h})};
    }
    Integer value(d / 2);
    value *= d / 2 + 1;
    return ExtremalRank{value, CanonicalMonomial::from_sorted_exponents({1, d / 2 - 1, d / 2})};
}

namespace {

// Partitions of d into exactly n parts, each >= min_part, non-decreasing.
void foreach_partition(unsigned d, unsigned n, unsigned min_part, Exponents& prefix,
                       const std::function<void(const Exponents&)>& fn) {
    if (n == 1) {
        if (d >= min_part) {
            prefix.push_back(d);
            fn(prefix);
            prefix.pop_back();
        }
        return;
    }
    for (unsigned p = min_part; p * n <= d; ++p) {
        prefix.push_back(p);
        foreach_partition(d - p, n - 1, p, prefix, fn);
        prefix.pop_back();
    }
}

}  // namespace

ExtremalRank extremal_rank_bruteforce(unsigned n, unsigned d) {
    if (n == 0) throw std::invalid_argument("extremal rank needs at least one variable");
    if (d < n) {
        throw std::invalid_argument("no partition of " + std::to_string(d) + " into " +
                                    std::to_string(n) + " positive parts");
    }
    Integer best(0);
    Exponents best_exps;
    Exponents prefix;
    foreach_partition(d, n, 1, prefix, [&](const Exponents& parts) {
        const Integer rank = waring_rank(CanonicalMonomial::from_sorted_exponents(parts));
        if (rank > best || (rank == best && parts < best_exps)) {
            best = rank;
            best_exps = parts;
        }
    });
    return ExtremalRank{best, CanonicalMonomial::from_sorted_exponents(std::move(best_exps))};
}

Partition::Partition(std::vector<unsigned> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("partition needs at least one part");
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] == 0) throw std::invalid_argument("partition parts must be positive");
        if (i && parts[i - 1] > parts[i]) {
            throw std::invalid_argument("partition parts must be non-decreasing");
        }
    }
}

unsigned Partition::total() const {
    return std::accumulate(parts.begin(), parts.end(), 0u);
}

Integer secant_bound(const Partition& lambda, unsigned n) {
    if (lambda.parts.size() != n) {
        throw std::invalid_argument("partition has " + std::to_string(lambda.parts.size()) +
                                    " parts, expected " + std::to_string(n));
    }
    Integer r(1);
    for (std::size_t i = 1; i < lambda.parts.size(); ++i) r *= lambda.parts[i] + 1;
    return r;
}

namespace {

bool divides(const Exponents& divisor, const Exponents& multiple) {
    for (std::size_t i = 0; i < divisor.size(); ++i) {
        if (divisor[i] > multiple[i]) return false;
    }
    return true;
}

std::vector<Exponents> minimalize(std::vector<Exponents> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponents> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < gens.size() && !dominated; ++j) {
            if (i != j && divides(gens[j], gens[i])) {
                // equal generators were deduplicated, so j strictly divides i
                dominated = true;
            }
        }
        if (!dominated) minimal.push_back(gens[i]);
    }
    return minimal;
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t num_vars, std::vector<Exponents> generators)
    : num_vars_(num_vars) {
    for (const Exponents& g : generators) {
        if (g.size() != num_vars) {
            throw std::invalid_argument("generator does not match the ambient variable count");
        }
    }
    generators_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Exponents& monomial) const {
    if (monomial.size() != num_vars_) {
        throw std::invalid_argument("monomial does not match the ambient variable count");
    }
    for (const Exponents& g : generators_) {
        if (divides(g, monomial)) return true;
    }
    return false;
}

namespace {

MonomialIdeal perp_of_exponents(const Exponents& b) {
    std::vector<Exponents> gens;
    gens.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        Exponents g(b.size(), 0);
        g[i] = b[i] + 1;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(b.size(), std::move(gens));
}

}  // namespace

MonomialIdeal perp_generators(const CanonicalMonomial& c) {
    return perp_of_exponents(c.exponents());
}

MonomialIdeal perp_generators(const Monomial& m) {
    return perp_of_exponents(m.exponents);
}

MonomialIdeal ideal_intersect(const std::vector<MonomialIdeal>& ideals) {
    if (ideals.empty()) throw std::invalid_argument("intersection needs at least one ideal");
    MonomialIdeal result = ideals.front();
    for (std::size_t k = 1; k < ideals.size(); ++k) {
        if (ideals[k].num_vars() != result.num_vars()) {
            throw std::invalid_argument("ideals do not share the ambient variable count");
        }
        std::vector<Exponents> lcms;
        lcms.reserve(result.generators().size() * ideals[k].generators().size());
        for (const Exponents& g : result.generators()) {
            for (const Exponents& h : ideals[k].generators()) {
                Exponents lcm(g.size());
                for (std::size_t i = 0; i < g.size(); ++i) lcm[i] = std::max(g[i], h[i]);
                lcms.push_back(std::move(lcm));
            }
        }
        result = MonomialIdeal(result.num_vars(), std::move(lcms));
    }
    return result;
}

Integer catalecticant_rank(const CanonicalMonomial& c, unsigned a) {
    const unsigned d = c.degree();
    if (a > d) {
        throw std::invalid_argument("catalecticant degree " + std::to_string(a) +
                                    " out of range 0.." + std::to_string(d));
    }
    // Coefficient of t^a in prod_i (1 + t + ... + t^{b_i}).
    std::vector<Integer> series(a + 1, Integer(0));
    series[0] = 1;
    for (unsigned b : c.exponents()) {
        std::vector<Integer> next(a + 1, Integer(0));
        for (unsigned i = 0; i <= a; ++i) {
            if (series[i] == 0) continue;
            for (unsigned j = 0; j <= b && i + j <= a; ++j) next[i + j] += series[i];
        }
        series = std::move(next);
    }
    return series[a];
}

}  // namespace waring
