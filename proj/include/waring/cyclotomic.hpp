#ifndef WARING_CYCLOTOMIC_HPP
#define WARING_CYCLOTOMIC_HPP

#include <ostream>
#include <vector>

#include "waring/intpoly.hpp"
#include "waring/rational.hpp"

namespace waring {

/// N-th cyclotomic polynomial, monic of degree phi(N). Computed by exact
/// division of x^N - 1 by the product of the proper-divisor cyclotomics;
/// memoized per process behind a mutex.
const IntegerPolynomial& cyclotomic_polynomial(unsigned order);

/// Element of Q(zeta_N) as the unique residue modulo Phi_N. Coefficient i
/// multiplies zeta_N^i, i < phi(N). Immutable value type; equality of the
/// reduced coefficient vectors is field equality.
class CyclotomicNumber {
  public:
    static CyclotomicNumber zero(unsigned order);
    static CyclotomicNumber one(unsigned order);
    static CyclotomicNumber from_rational(unsigned order, const Rational& value);
    /// Reduces an arbitrary coefficient vector (any length) mod Phi_N.
    static CyclotomicNumber from_coefficients(unsigned order, std::vector<Rational> coeffs);

    unsigned order() const { return order_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    /// True when the reduced representation lies in Q.
    bool is_rational() const;
    /// Value as a rational; throws std::domain_error unless is_rational().
    Rational rational_value() const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& o);
    CyclotomicNumber& operator-=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const CyclotomicNumber& o);
    CyclotomicNumber& operator*=(const Rational& s);

    friend CyclotomicNumber operator+(CyclotomicNumber a, const CyclotomicNumber& b) { return a += b; }
    friend CyclotomicNumber operator-(CyclotomicNumber a, const CyclotomicNumber& b) { return a -= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const CyclotomicNumber& b) { return a *= b; }
    friend CyclotomicNumber operator*(CyclotomicNumber a, const Rational& s) { return a *= s; }
    friend CyclotomicNumber operator*(const Rational& s, CyclotomicNumber a) { return a *= s; }

    /// Multiplicative inverse via extended Euclid with Phi_N; throws
    /// std::domain_error on zero.
    CyclotomicNumber inverse() const;
    friend CyclotomicNumber operator/(CyclotomicNumber a, const CyclotomicNumber& b) {
        return a *= b.inverse();
    }

    friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    friend std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& v);

  private:
    CyclotomicNumber(unsigned order, std::vector<Rational> reduced)
        : order_(order), coeffs_(std::move(reduced)) {}
    unsigned order_;
    std::vector<Rational> coeffs_;
};

/// zeta_N^k, reduced; k may be negative (taken mod N).
CyclotomicNumber zeta_power(unsigned order, long exponent);

/// The same field element expressed in Q(zeta_M); requires order | M.
CyclotomicNumber embed_order(const CyclotomicNumber& value, unsigned new_order);

}  // namespace waring

#endif
