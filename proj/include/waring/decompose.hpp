#ifndef WARING_DECOMPOSE_HPP
#define WARING_DECOMPOSE_HPP

#include <map>
#include <vector>

#include "waring/cyclotomic.hpp"
#include "waring/monomial.hpp"
#include "waring/rational.hpp"

namespace waring {

/// One summand gamma * (x1 + eps_2 x2 + ... + eps_n xn)^d. The gamma is a
/// rational times zeta_N^gamma_zeta_exp; form_exponents[i] is the zeta_N
/// exponent of the coefficient on canonical variable i, form_exponents[0]
/// always 0 (points are normalized to leading coordinate 1).
struct DecompositionTerm {
    Rational gamma_rational;
    unsigned gamma_zeta_exp = 0;
    Exponents form_exponents;

    friend bool operator==(const DecompositionTerm& a, const DecompositionTerm& b) {
        return a.gamma_rational == b.gamma_rational && a.gamma_zeta_exp == b.gamma_zeta_exp &&
               a.form_exponents == b.form_exponents;
    }
};

/// Certified sum-of-powers decomposition of a monomial. Terms live in the
/// canonical variable order; variable_map of the monomial renders them back
/// in the user's order. Term count equals the Waring rank.
struct Decomposition {
    CanonicalMonomial monomial;
    unsigned cyclotomic_order = 1;  // lcm over i >= 2 of (b_i + 1)
    std::vector<DecompositionTerm> terms;

    unsigned degree() const { return monomial.degree(); }
    std::size_t rank() const { return terms.size(); }
};

/// Exact multivariate polynomial with cyclotomic coefficients, keyed by
/// exponent sequences of a common total degree. Zero coefficients are pruned.
using MultiCycloPoly = std::map<Exponents, CyclotomicNumber>;

/// All prod_{i>=2} (b_i + 1) root-of-unity point tuples for the monomial:
/// entry 1 is exponent 0, entry i runs over multiples of N/(b_i+1) mod N.
/// Mixed-radix enumeration, index 2 slowest. For n = 1 the single point (0).
std::vector<Exponents> decomposition_points(const CanonicalMonomial& c);

struct GammaValue {
    Rational rational;
    unsigned zeta_exp = 0;

    CyclotomicNumber as_cyclotomic(unsigned order) const {
        return zeta_power(order, zeta_exp) * rational;
    }
    friend bool operator==(const GammaValue& a, const GammaValue& b) {
        return a.rational == b.rational && a.zeta_exp == b.zeta_exp;
    }
};

/// Closed-form coefficient for one decomposition point: the root-of-unity
/// part zeta_N^{-sum b_i e_i} and the rational part (prod b_i!)/(R * d!).
/// Validated against solve_gamma_system and the expansion verifier.
GammaValue gamma_closed_form(const CanonicalMonomial& c, const Exponents& point);

/// Determines the gammas by solving the exact R x R linear system over
/// Q(zeta_N) built from the tensor product of per-variable Vandermonde
/// systems on the roots of unity; returns them in point order.
std::vector<CyclotomicNumber> solve_gamma_system(const CanonicalMonomial& c,
                                                 const std::vector<Exponents>& points);

/// Builds the certified decomposition: normalize, generate points, attach
/// closed-form gammas. Deterministic. Throws std::domain_error on degree 0.
Decomposition decompose(const Monomial& m);

/// Sum of gamma_j * L_j^d expanded exactly by the multinomial theorem.
/// jobs > 1 splits the terms across threads; the result is identical.
MultiCycloPoly expand_power_sum(const Decomposition& dec, unsigned jobs = 1);

/// True iff the expansion is exactly the target monomial with coefficient 1.
bool verify(const Decomposition& dec, unsigned jobs = 1);

/// Result of applying the differential operator y^alpha to x^target:
/// coefficient 0 means annihilated, otherwise coefficient prod b_i!/(b_i-a_i)!
/// with the remaining exponents.
struct DifferentialResult {
    Integer coefficient;
    Exponents exponents;

    bool is_zero() const { return coefficient == 0; }
};

DifferentialResult apply_differential(const Exponents& alpha, const Exponents& target);

/// Linear form with exact rational coefficients.
struct LinearForm {
    std::vector<Rational> coefficients;
};

/// One summand of a product-of-linear-forms decomposition: the substituted
/// linear form has general cyclotomic coefficients over the ambient
/// variables.
struct LinearProductTerm {
    Rational gamma_rational;
    unsigned gamma_zeta_exp = 0;
    std::vector<CyclotomicNumber> form_coefficients;
};

/// Certificate that prod L_i^{b_i} is the stated sum of d-th powers.
struct LinearProductCertificate {
    std::vector<LinearForm> forms;
    Exponents exponents;  // b, in the order of forms
    unsigned degree = 0;
    unsigned cyclotomic_order = 1;
    std::vector<LinearProductTerm> terms;

    std::size_t rank() const { return terms.size(); }
};

/// Decomposition of a product of pairwise linearly independent linear forms,
/// by substituting them into the decomposition of the matching monomial.
/// Throws std::invalid_argument when the forms are dependent.
LinearProductCertificate decompose_linear_product(const std::vector<LinearForm>& forms,
                                                  const Exponents& b);

/// Expands the certificate and compares against the exact expansion of
/// prod L_i^{b_i}.
bool verify_linear_product(const LinearProductCertificate& cert);

}  // namespace waring

#endif
