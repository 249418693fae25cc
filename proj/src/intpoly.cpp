#include "waring/intpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace waring {

IntegerPolynomial::IntegerPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntegerPolynomial IntegerPolynomial::monomial(std::size_t degree, Integer coeff) {
    if (coeff == 0) return IntegerPolynomial();
    std::vector<Integer> c(degree + 1, Integer(0));
    c[degree] = std::move(coeff);
    return IntegerPolynomial(std::move(c));
}

void IntegerPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntegerPolynomial operator+(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator-(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    std::vector<Integer> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial operator*(const IntegerPolynomial& a, const IntegerPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntegerPolynomial();
    std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntegerPolynomial(std::move(c));
}

IntegerPolynomial IntegerPolynomial::divide_exact(const IntegerPolynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    if (is_zero()) return IntegerPolynomial();
    if (degree() < divisor.degree()) throw std::domain_error("inexact polynomial division");

    std::vector<Integer> rem = coeffs_;
    const std::vector<Integer>& d = divisor.coeffs_;
    const Integer& lead = d.back();
    std::vector<Integer> quot(rem.size() - d.size() + 1, Integer(0));
    for (std::size_t shift = quot.size(); shift-- > 0;) {
        const std::size_t i = shift + d.size() - 1;
        if (rem[i] == 0) continue;
        if (!mpz_divisible_p(rem[i].get_mpz_t(), lead.get_mpz_t())) {
            throw std::domain_error("inexact polynomial division");
        }
        Integer q = rem[i] / lead;
        quot[shift] = q;
        for (std::size_t j = 0; j < d.size(); ++j) rem[shift + j] -= q * d[j];
    }
    for (const Integer& r : rem) {
        if (r != 0) throw std::domain_error("inexact polynomial division");
    }
    return IntegerPolynomial(std::move(quot));
}

std::ostream& operator<<(std::ostream& os, const IntegerPolynomial& p) {
    if (p.is_zero()) return os << "0";
    bool first = true;
    for (std::size_t i = p.coeffs_.size(); i-- > 0;) {
        const Integer& c = p.coeffs_[i];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        Integer a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    return os;
}

}  // namespace waring
