#ifndef WARING_INTPOLY_HPP
#define WARING_INTPOLY_HPP

#include <cstddef>
#include <ostream>
#include <vector>

#include "waring/rational.hpp"

namespace waring {

/// Dense univariate polynomial over Z. Coefficient i belongs to x^i;
/// no trailing zero coefficient is stored, the zero polynomial is empty.
class IntegerPolynomial {
  public:
    IntegerPolynomial() = default;
    explicit IntegerPolynomial(std::vector<Integer> coeffs);

    /// coeff * x^degree
    static IntegerPolynomial monomial(std::size_t degree, Integer coeff = Integer(1));

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coefficients() const { return coeffs_; }
    Integer coefficient(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : Integer(0);
    }
    bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    friend IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b);
    friend bool operator==(const IntegerPolynomial& a, const IntegerPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    /// Quotient of an exact division; throws std::domain_error when the
    /// divisor is zero or the division leaves a remainder.
    IntegerPolynomial divide_exact(const IntegerPolynomial& divisor) const;

    friend std::ostream& operator<<(std::ostream& os, const IntegerPolynomial& p);

  private:
    void trim();
    std::vector<Integer> coeffs_;
};

}  // namespace waring

#endif
