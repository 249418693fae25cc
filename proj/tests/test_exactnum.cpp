#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "waring/cyclotomic.hpp"
#include "waring/intpoly.hpp"
#include "waring/io.hpp"
#include "waring/rational.hpp"

using namespace waring;

namespace {

// Euler phi by trial-division factorization; independent of the polynomial
// route whose degree it checks.
unsigned euler_phi(unsigned n) {
    unsigned result = n;
    unsigned m = n;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

// Naive oracle: remainder of x^k modulo a monic integer polynomial, done on
// plain rational vectors without CyclotomicNumber.
std::vector<Rational> naive_power_mod(unsigned k, const IntegerPolynomial& modulus) {
    const std::size_t deg = static_cast<std::size_t>(modulus.degree());
    std::vector<Rational> rem(deg, Rational());
    // start with 1, multiply by x k times, reducing on overflow
    std::vector<Rational> cur(deg, Rational());
    cur[0] = Rational(1);
    for (unsigned step = 0; step < k; ++step) {
        std::vector<Rational> shifted(deg + 1, Rational());
        for (std::size_t i = 0; i < deg; ++i) shifted[i + 1] = cur[i];
        const Rational lead = shifted[deg];
        if (!lead.is_zero()) {
            for (std::size_t i = 0; i < deg; ++i) {
                shifted[i] -= lead * Rational(modulus.coefficient(i));
            }
        }
        shifted.pop_back();
        cur = std::move(shifted);
    }
    rem = cur;
    return rem;
}

CyclotomicNumber random_element(unsigned order, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-4, 4);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> coeffs;
    const unsigned deg = static_cast<unsigned>(cyclotomic_polynomial(order).degree());
    for (unsigned i = 0; i < deg; ++i) coeffs.emplace_back(num(rng), den(rng));
    return CyclotomicNumber::from_coefficients(order, std::move(coeffs));
}

}  // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4).numerator() == -1);
    CHECK(Rational(2, -4).denominator() == 2);
    CHECK(Rational(0, 7).fraction_string() == "0/1");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(-1, 3).fraction_string() == "-1/3");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
    CHECK(Rational(1, 3) / Rational(2, 3) == Rational(1, 2));
    CHECK(-Rational(1, 3) == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    CHECK(Rational::from_string("3/4") == Rational(3, 4));
    CHECK(Rational::from_string("-6/4") == Rational(-3, 2));
    CHECK(Rational::from_string("17") == Rational(17));
    CHECK_THROWS_AS(Rational::from_string("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::from_string("a/2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
}

TEST_CASE("integer polynomial basics") {
    const IntegerPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.degree() == -1);
    CHECK(IntegerPolynomial({Integer(1), Integer(0)}).degree() == 0);  // trailing zero trimmed

    const IntegerPolynomial a({Integer(-1), Integer(1)});  // x - 1
    const IntegerPolynomial b({Integer(1), Integer(1)});   // x + 1
    CHECK(a * b == IntegerPolynomial({Integer(-1), Integer(0), Integer(1)}));
    CHECK((a * b).divide_exact(a) == b);
    CHECK_THROWS_AS(b.divide_exact(zero), std::domain_error);
    CHECK_THROWS_AS(IntegerPolynomial({Integer(1), Integer(1), Integer(1)}).divide_exact(a),
                    std::domain_error);
}

TEST_CASE("cyclotomic polynomial examples") {
    CHECK(cyclotomic_polynomial(1) == IntegerPolynomial({Integer(-1), Integer(1)}));
    CHECK(cyclotomic_polynomial(2) == IntegerPolynomial({Integer(1), Integer(1)}));
    // derived by dividing x^6 - 1 by Phi_1 * Phi_2 * Phi_3: x^2 - x + 1
    CHECK(cyclotomic_polynomial(6) == IntegerPolynomial({Integer(1), Integer(-1), Integer(1)}));
    CHECK_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("cyclotomic polynomial degree and divisibility up to 200") {
    for (unsigned n = 1; n <= 200; ++n) {
        const IntegerPolynomial& phi = cyclotomic_polynomial(n);
        CHECK(phi.is_monic());
        CHECK(phi.degree() == static_cast<int>(euler_phi(n)));
        const IntegerPolynomial xn_minus_1 =
            IntegerPolynomial::monomial(n) - IntegerPolynomial({Integer(1)});
        // exact division succeeding is the zero-remainder check
        const IntegerPolynomial cofactor = xn_minus_1.divide_exact(phi);
        CHECK(cofactor * phi == xn_minus_1);
    }
}

TEST_CASE("zeta powers") {
    const CyclotomicNumber i2 = zeta_power(4, 2);
    CHECK(i2.coefficients() == std::vector<Rational>{Rational(-1), Rational(0)});
    CHECK(zeta_power(3, 3) == CyclotomicNumber::one(3));
    CHECK(zeta_power(5, -1) == zeta_power(5, 4));

    // reduced residue of x^4 mod Phi_6 equals -zeta_6; checked against the
    // naive polynomial remainder oracle as well
    const CyclotomicNumber z = zeta_power(6, 4);
    CHECK(z == -zeta_power(6, 1));
    CHECK(z.coefficients() == naive_power_mod(4, cyclotomic_polynomial(6)));
    for (unsigned n : {2u, 3u, 4u, 6u, 8u, 12u}) {
        for (unsigned k = 0; k < 2 * n; ++k) {
            CHECK(zeta_power(n, k).coefficients() ==
                  naive_power_mod(k, cyclotomic_polynomial(n)));
        }
    }
}

TEST_CASE("field operations") {
    CHECK(zeta_power(3, 1) + zeta_power(3, 2) == CyclotomicNumber::from_rational(3, Rational(-1)));
    CHECK((CyclotomicNumber::one(2) + zeta_power(2, 1)).is_zero());
    for (unsigned n : {3u, 5u, 8u, 12u}) {
        CHECK(zeta_power(n, 1).inverse() == zeta_power(n, static_cast<long>(n) - 1));
    }
    CHECK_THROWS_AS(CyclotomicNumber::zero(5).inverse(), std::domain_error);
    CHECK_THROWS_AS(zeta_power(3, 1) + zeta_power(4, 1), std::invalid_argument);
}

TEST_CASE("root orbit sums vanish") {
    for (unsigned n = 2; n <= 50; ++n) {
        CyclotomicNumber sum = CyclotomicNumber::zero(n);
        for (unsigned k = 0; k < n; ++k) sum += zeta_power(n, k);
        CHECK(sum.is_zero());
        CHECK(zeta_power(n, n) == CyclotomicNumber::one(n));
    }
}

TEST_CASE("inverse is exact on random elements") {
    std::mt19937 rng(20240811);
    for (unsigned order : {2u, 3u, 4u, 6u, 10u, 12u}) {
        for (int trial = 0; trial < 20; ++trial) {
            const CyclotomicNumber a = random_element(order, rng);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == CyclotomicNumber::one(order));
        }
    }
}

TEST_CASE("embedding into a larger order") {
    CHECK(embed_order(zeta_power(2, 1), 6) == zeta_power(6, 3));
    CHECK(embed_order(CyclotomicNumber::one(1), 5) == CyclotomicNumber::one(5));
    CHECK(embed_order(zeta_power(3, 1), 12) == zeta_power(12, 4));
    CHECK_THROWS_AS(embed_order(zeta_power(3, 1), 10), std::domain_error);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const CyclotomicNumber a = random_element(6, rng);
        const CyclotomicNumber b = random_element(6, rng);
        CHECK(embed_order(a * b, 12) == embed_order(a, 12) * embed_order(b, 12));
        CHECK(embed_order(a + b, 12) == embed_order(a, 12) + embed_order(b, 12));
    }
}

TEST_CASE("rationality detection") {
    CHECK(CyclotomicNumber::from_rational(5, Rational(7, 2)).is_rational());
    CHECK(CyclotomicNumber::from_rational(5, Rational(7, 2)).rational_value() == Rational(7, 2));
    CHECK(!zeta_power(5, 1).is_rational());
    CHECK(zeta_power(2, 1).is_rational());  // order 2 collapses to Q
    CHECK_THROWS_AS(zeta_power(5, 1).rational_value(), std::domain_error);
}

TEST_CASE("cyclotomic JSON forms") {
    CHECK(cyclotomic_to_json(zeta_power(6, 1) * Rational(3, 2)) ==
          R"({"rational":"3/2","zeta_exp":1})");
    CHECK(cyclotomic_to_json(CyclotomicNumber::zero(6)) ==
          R"({"rational":"0/1","zeta_exp":0})");
    // zeta_3 + zeta_3^2 reduces to the rational -1
    CHECK(cyclotomic_to_json(zeta_power(3, 1) + zeta_power(3, 2)) ==
          R"({"rational":"-1/1","zeta_exp":0})");
    const CyclotomicNumber mixed = CyclotomicNumber::one(5) + zeta_power(5, 1);
    CHECK(cyclotomic_to_json(mixed) ==
          R"({"order":5,"coeffs":["1/1","1/1","0/1","0/1"]})");
}
