#include "waring/decompose.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <utility>

namespace waring {

namespace {

std::mutex g_fact_mutex;
std::vector<Integer> g_factorials = {Integer(1)};

// fact[0..n] snapshot; table grows monotonically under the lock.
std::vector<Integer> factorial_table(unsigned n) {
    std::lock_guard<std::mutex> lock(g_fact_mutex);
    while (g_factorials.size() <= n) {
        g_factorials.push_back(g_factorials.back() * static_cast<unsigned long>(g_factorials.size()));
    }
    return std::vector<Integer>(g_factorials.begin(), g_factorials.begin() + n + 1);
}

constexpr unsigned kMaxOrder = 1u << 20;

unsigned cyclotomic_order_of(const Exponents& b) {
    unsigned long long order = 1;
    for (std::size_t i = 1; i < b.size(); ++i) {
        order = std::lcm(order, static_cast<unsigned long long>(b[i]) + 1);
        if (order > kMaxOrder) {
            throw std::overflow_error("cyclotomic order exceeds the supported range");
        }
    }
    return static_cast<unsigned>(order);
}

// All digit tuples (k_2, ..., k_n) with 0 <= k_i <= b_i, index 2 slowest.
std::vector<Exponents> enumerate_digit_tuples(const Exponents& b) {
    std::vector<Exponents> tuples(1, Exponents{});
    for (std::size_t i = 1; i < b.size(); ++i) {
        std::vector<Exponents> extended;
        extended.reserve(tuples.size() * (b[i] + 1));
        for (const Exponents& t : tuples) {
            for (unsigned k = 0; k <= b[i]; ++k) {
                Exponents next = t;
                next.push_back(k);
                extended.push_back(std::move(next));
            }
        }
        tuples = std::move(extended);
    }
    return tuples;
}

// Exponent sequences alpha of total degree d in n variables, with their
// multinomial coefficients d!/prod(alpha_i!).
struct ExpandedMonomial {
    Exponents alpha;
    Integer multinomial;
};

void enumerate_compositions(unsigned n, unsigned remaining, Exponents& prefix,
                            std::vector<ExpandedMonomial>& out) {
    if (prefix.size() + 1 == n) {
        prefix.push_back(remaining);
        out.push_back({prefix, Integer(0)});
        prefix.pop_back();
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        prefix.push_back(e);
        enumerate_compositions(n, remaining - e, prefix, out);
        prefix.pop_back();
    }
}

std::mutex g_monomials_mutex;
std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const std::vector<ExpandedMonomial>>>
    g_monomials_table;

// Memoized per (n, d): the expansion loop over terms shares one table.
std::shared_ptr<const std::vector<ExpandedMonomial>> monomials_of_degree(unsigned n, unsigned d) {
    {
        std::lock_guard<std::mutex> lock(g_monomials_mutex);
        auto it = g_monomials_table.find({n, d});
        if (it != g_monomials_table.end()) return it->second;
    }
    auto out = std::make_shared<std::vector<ExpandedMonomial>>();
    Exponents prefix;
    enumerate_compositions(n, d, prefix, *out);
    const std::vector<Integer> fact = factorial_table(d);
    for (ExpandedMonomial& m : *out) {
        Integer denom(1);
        for (unsigned e : m.alpha) denom *= fact[e];
        m.multinomial = fact[d] / denom;
    }
    std::lock_guard<std::mutex> lock(g_monomials_mutex);
    return g_monomials_table.emplace(std::make_pair(n, d), std::move(out)).first->second;
}

std::vector<CyclotomicNumber> zeta_power_table(unsigned order) {
    std::vector<CyclotomicNumber> table;
    table.reserve(order);
    for (unsigned k = 0; k < order; ++k) table.push_back(zeta_power(order, k));
    return table;
}

void accumulate(MultiCycloPoly& poly, const Exponents& key, const CyclotomicNumber& value) {
    auto it = poly.find(key);
    if (it == poly.end()) {
        poly.emplace(key, value);
    } else {
        it->second += value;
    }
}

void prune_zeros(MultiCycloPoly& poly) {
    for (auto it = poly.begin(); it != poly.end();) {
        it = it->second.is_zero() ? poly.erase(it) : std::next(it);
    }
}

}  // namespace

std::vector<Exponents> decomposition_points(const CanonicalMonomial& c) {
    const Exponents& b = c.exponents();
    const unsigned order = cyclotomic_order_of(b);
    std::vector<Exponents> points;
    for (const Exponents& digits : enumerate_digit_tuples(b)) {
        Exponents point(b.size(), 0);
        for (std::size_t i = 1; i < b.size(); ++i) {
            point[i] = digits[i - 1] * (order / (b[i] + 1));
        }
        points.push_back(std::move(point));
    }
    return points;
}

GammaValue gamma_closed_form(const CanonicalMonomial& c, const Exponents& point) {
    const Exponents& b = c.exponents();
    const unsigned order = cyclotomic_order_of(b);
    if (point.size() != b.size() || point[0] != 0) {
        throw std::domain_error("malformed decomposition point");
    }
    for (std::size_t i = 1; i < b.size(); ++i) {
        if (point[i] >= order || point[i] % (order / (b[i] + 1)) != 0) {
            throw std::domain_error("malformed decomposition point");
        }
    }

    const unsigned d = c.degree();
    const std::vector<Integer> fact = factorial_table(d);
    Integer numerator(1);
    for (unsigned e : b) numerator *= fact[e];
    const Integer denominator = waring_rank(c) * fact[d];

    unsigned long long weighted = 0;
    for (std::size_t i = 1; i < b.size(); ++i) {
        weighted = (weighted + static_cast<unsigned long long>(b[i]) * point[i]) % order;
    }
    const unsigned zeta_exp = static_cast<unsigned>((order - weighted % order) % order);
    return GammaValue{Rational(numerator, denominator), zeta_exp};
}

std::vector<CyclotomicNumber> solve_gamma_system(const CanonicalMonomial& c,
                                                 const std::vector<Exponents>& points) {
    const Exponents& b = c.exponents();
    const unsigned order = cyclotomic_order_of(b);
    const unsigned d = c.degree();
    const std::size_t rank = points.size();
    if (Integer(static_cast<unsigned long>(rank)) != waring_rank(c)) {
        throw std::invalid_argument("point count does not match the rank");
    }

    const std::vector<CyclotomicNumber> zeta = zeta_power_table(order);
    const std::vector<Integer> fact = factorial_table(d);
    const std::vector<Exponents> betas = enumerate_digit_tuples(b);

    // Row per exponent pattern beta, column per point; the coefficient of
    // x1^{d-|beta|} x2^{beta_2} ... in gamma_k L_k^d must match [beta == b].
    std::vector<std::vector<CyclotomicNumber>> matrix(
        rank, std::vector<CyclotomicNumber>(rank, CyclotomicNumber::zero(order)));
    std::vector<CyclotomicNumber> rhs(rank, CyclotomicNumber::zero(order));

    for (std::size_t r = 0; r < rank; ++r) {
        const Exponents& beta = betas[r];
        for (std::size_t k = 0; k < rank; ++k) {
            unsigned long long weighted = 0;
            for (std::size_t i = 0; i < beta.size(); ++i) {
                weighted =
                    (weighted + static_cast<unsigned long long>(beta[i]) * points[k][i + 1]) % order;
            }
            matrix[r][k] = zeta[static_cast<unsigned>(weighted)];
        }
        bool is_target = true;
        unsigned beta_total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            beta_total += beta[i];
            if (beta[i] != b[i + 1]) is_target = false;
        }
        if (is_target) {
            Integer denom = fact[d - beta_total];
            for (unsigned e : beta) denom *= fact[e];
            rhs[r] = CyclotomicNumber::from_rational(order, Rational(denom, fact[d]));
        }
    }

    // Gauss-Jordan over Q(zeta_N).
    for (std::size_t col = 0; col < rank; ++col) {
        std::size_t pivot = col;
        while (pivot < rank && matrix[pivot][col].is_zero()) ++pivot;
        if (pivot == rank) {
            throw std::logic_error("gamma system is singular; Vandermonde structure violated");
        }
        std::swap(matrix[pivot], matrix[col]);
        std::swap(rhs[pivot], rhs[col]);
        const CyclotomicNumber inv = matrix[col][col].inverse();
        for (std::size_t j = col; j < rank; ++j) matrix[col][j] *= inv;
        rhs[col] *= inv;
        for (std::size_t r = 0; r < rank; ++r) {
            if (r == col || matrix[r][col].is_zero()) continue;
            const CyclotomicNumber factor = matrix[r][col];
            for (std::size_t j = col; j < rank; ++j) {
                matrix[r][j] -= factor * matrix[col][j];
            }
            rhs[r] -= factor * rhs[col];
        }
    }
    return rhs;
}

Decomposition decompose(const Monomial& m) {
    CanonicalMonomial canonical = normalize(m);
    const unsigned order = cyclotomic_order_of(canonical.exponents());
    std::vector<DecompositionTerm> terms;
    for (Exponents& point : decomposition_points(canonical)) {
        GammaValue gamma = gamma_closed_form(canonical, point);
        terms.push_back(DecompositionTerm{std::move(gamma.rational), gamma.zeta_exp,
                                          std::move(point)});
    }
    return Decomposition{std::move(canonical), order, std::move(terms)};
}

namespace {

MultiCycloPoly expand_term_range(const Decomposition& dec,
                                 const std::vector<ExpandedMonomial>& alphas,
                                 const std::vector<CyclotomicNumber>& zeta, std::size_t first,
                                 std::size_t last) {
    const unsigned order = dec.cyclotomic_order;
    MultiCycloPoly acc;
    for (std::size_t t = first; t < last; ++t) {
        const DecompositionTerm& term = dec.terms[t];
        for (const ExpandedMonomial& m : alphas) {
            unsigned long long zexp = term.gamma_zeta_exp;
            for (std::size_t i = 0; i < m.alpha.size(); ++i) {
                zexp = (zexp + static_cast<unsigned long long>(m.alpha[i]) *
                                   term.form_exponents[i]) %
                       order;
            }
            const Rational scale = term.gamma_rational * Rational(m.multinomial);
            accumulate(acc, m.alpha, zeta[static_cast<unsigned>(zexp)] * scale);
        }
    }
    return acc;
}

}  // namespace

MultiCycloPoly expand_power_sum(const Decomposition& dec, unsigned jobs) {
    const std::size_t n = dec.monomial.num_vars();
    const auto alphas_ptr = monomials_of_degree(static_cast<unsigned>(n), dec.degree());
    const std::vector<ExpandedMonomial>& alphas = *alphas_ptr;
    const std::vector<CyclotomicNumber> zeta = zeta_power_table(dec.cyclotomic_order);

    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(jobs, dec.terms.size()));
    if (workers == 1) {
        MultiCycloPoly result = expand_term_range(dec, alphas, zeta, 0, dec.terms.size());
        prune_zeros(result);
        return result;
    }

    std::vector<MultiCycloPoly> partial(workers);
    std::vector<std::thread> threads;
    const std::size_t chunk = (dec.terms.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
        const std::size_t first = w * chunk;
        const std::size_t last = std::min(first + chunk, dec.terms.size());
        threads.emplace_back([&, w, first, last] {
            partial[w] = expand_term_range(dec, alphas, zeta, first, last);
        });
    }
    for (std::thread& t : threads) t.join();

    MultiCycloPoly result = std::move(partial[0]);
    for (std::size_t w = 1; w < workers; ++w) {
        for (auto& [key, value] : partial[w]) accumulate(result, key, value);
    }
    prune_zeros(result);
    return result;
}

bool verify(const Decomposition& dec, unsigned jobs) {
    const MultiCycloPoly expansion = expand_power_sum(dec, jobs);
    if (expansion.size() != 1) return false;
    const auto& [key, value] = *expansion.begin();
    return key == dec.monomial.exponents() &&
           value == CyclotomicNumber::one(dec.cyclotomic_order);
}

DifferentialResult apply_differential(const Exponents& alpha, const Exponents& target) {
    if (alpha.size() != target.size()) {
        throw std::invalid_argument("differential operator and target variable counts differ");
    }
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] > target[i]) return DifferentialResult{Integer(0), {}};
    }
    Integer coefficient(1);
    Exponents remaining(target.size());
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        for (unsigned k = 0; k < alpha[i]; ++k) coefficient *= target[i] - k;
        remaining[i] = target[i] - alpha[i];
    }
    return DifferentialResult{std::move(coefficient), std::move(remaining)};
}

namespace {

// Rank of a rational matrix by fraction-free (Bareiss) elimination after
// clearing denominators row by row.
std::size_t rational_matrix_rank(std::vector<std::vector<Rational>> rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::vector<std::vector<Integer>> m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        Integer scale(1);
        for (const Rational& c : row) scale = lcm(scale, c.denominator());
        std::vector<Integer> cleared(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            cleared[j] = row[j].numerator() * (scale / row[j].denominator());
        }
        m.push_back(std::move(cleared));
    }

    std::size_t rank = 0;
    Integer prev(1);
    for (std::size_t col = 0; col < cols && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = rank + 1; r < m.size(); ++r) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                m[r][j] = (m[rank][col] * m[r][j] - m[r][col] * m[rank][j]) / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace

LinearProductCertificate decompose_linear_product(const std::vector<LinearForm>& forms,
                                                  const Exponents& b) {
    if (forms.empty()) throw std::invalid_argument("need at least one linear form");
    if (forms.size() != b.size()) {
        throw std::invalid_argument("form count does not match the exponent count");
    }
    const std::size_t ambient = forms.front().coefficients.size();
    if (ambient == 0) throw std::invalid_argument("linear forms need at least one variable");
    std::vector<std::vector<Rational>> rows;
    for (const LinearForm& f : forms) {
        if (f.coefficients.size() != ambient) {
            throw std::invalid_argument("linear forms have differing variable counts");
        }
        rows.push_back(f.coefficients);
    }
    for (unsigned e : b) {
        if (e == 0) throw std::invalid_argument("exponents must be positive");
    }
    if (rational_matrix_rank(std::move(rows)) != forms.size()) {
        throw std::invalid_argument("linear forms are not linearly independent");
    }

    const Decomposition dec = decompose(Monomial(b));
    const std::vector<std::size_t>& which_form = dec.monomial.variable_map();
    const unsigned order = dec.cyclotomic_order;
    const std::vector<CyclotomicNumber> zeta = zeta_power_table(order);

    LinearProductCertificate cert;
    cert.forms = forms;
    cert.exponents = b;
    cert.degree = dec.degree();
    cert.cyclotomic_order = order;
    for (const DecompositionTerm& term : dec.terms) {
        LinearProductTerm out{term.gamma_rational, term.gamma_zeta_exp,
                              std::vector<CyclotomicNumber>(ambient, CyclotomicNumber::zero(order))};
        for (std::size_t i = 0; i < term.form_exponents.size(); ++i) {
            const LinearForm& form = forms[which_form[i]];
            const CyclotomicNumber& root = zeta[term.form_exponents[i]];
            for (std::size_t w = 0; w < ambient; ++w) {
                if (form.coefficients[w].is_zero()) continue;
                out.form_coefficients[w] += root * form.coefficients[w];
            }
        }
        cert.terms.push_back(std::move(out));
    }
    return cert;
}

bool verify_linear_product(const LinearProductCertificate& cert) {
    const std::size_t ambient = cert.forms.front().coefficients.size();
    const unsigned d = cert.degree;
    const unsigned order = cert.cyclotomic_order;

    // Exact expansion of prod L_i^{b_i} over Q.
    std::map<Exponents, Rational> target;
    target.emplace(Exponents(ambient, 0), Rational(1));
    for (std::size_t i = 0; i < cert.forms.size(); ++i) {
        for (unsigned rep = 0; rep < cert.exponents[i]; ++rep) {
            std::map<Exponents, Rational> next;
            for (const auto& [key, value] : target) {
                for (std::size_t w = 0; w < ambient; ++w) {
                    const Rational& cw = cert.forms[i].coefficients[w];
                    if (cw.is_zero()) continue;
                    Exponents bumped = key;
                    ++bumped[w];
                    auto [it, inserted] = next.emplace(bumped, value * cw);
                    if (!inserted) it->second += value * cw;
                }
            }
            target = std::move(next);
        }
    }

    // Expansion of the power sum with general cyclotomic coefficients.
    const auto alphas_ptr = monomials_of_degree(static_cast<unsigned>(ambient), d);
    const std::vector<ExpandedMonomial>& alphas = *alphas_ptr;
    MultiCycloPoly expansion;
    for (const LinearProductTerm& term : cert.terms) {
        std::vector<std::vector<CyclotomicNumber>> powers(ambient);
        for (std::size_t w = 0; w < ambient; ++w) {
            powers[w].reserve(d + 1);
            powers[w].push_back(CyclotomicNumber::one(order));
            for (unsigned k = 1; k <= d; ++k) {
                powers[w].push_back(powers[w].back() * term.form_coefficients[w]);
            }
        }
        const CyclotomicNumber gamma =
            zeta_power(order, term.gamma_zeta_exp) * term.gamma_rational;
        for (const ExpandedMonomial& m : alphas) {
            CyclotomicNumber value = gamma * Rational(m.multinomial);
            for (std::size_t w = 0; w < ambient && !value.is_zero(); ++w) {
                if (m.alpha[w] > 0) value *= powers[w][m.alpha[w]];
            }
            accumulate(expansion, m.alpha, value);
        }
    }
    prune_zeros(expansion);

    std::map<Exponents, Rational> pruned_target;
    for (const auto& [key, value] : target) {
        if (!value.is_zero()) pruned_target.emplace(key, value);
    }
    if (expansion.size() != pruned_target.size()) return false;
    for (const auto& [key, value] : pruned_target) {
        auto it = expansion.find(key);
        if (it == expansion.end()) return false;
        if (!(it->second == CyclotomicNumber::from_rational(order, value))) return false;
    }
    return true;
}

}  // namespace waring
