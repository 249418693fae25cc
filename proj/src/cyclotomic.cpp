#include "waring/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace waring {

namespace {

std::mutex g_phi_mutex;
std::map<unsigned, IntegerPolynomial> g_phi_table;

IntegerPolynomial compute_cyclotomic(unsigned n);

const IntegerPolynomial& cyclotomic_locked(unsigned n) {
    auto it = g_phi_table.find(n);
    if (it == g_phi_table.end()) {
        it = g_phi_table.emplace(n, compute_cyclotomic(n)).first;
    }
    return it->second;
}

IntegerPolynomial compute_cyclotomic(unsigned n) {
    if (n == 1) {
        return IntegerPolynomial({Integer(-1), Integer(1)});  // x - 1
    }
    // (x^n - 1) / prod of Phi_d over proper divisors d | n
    IntegerPolynomial quotient =
        IntegerPolynomial::monomial(n) - IntegerPolynomial({Integer(1)});
    for (unsigned d = 1; d < n; ++d) {
        if (n % d == 0) quotient = quotient.divide_exact(cyclotomic_locked(d));
    }
    return quotient;
}

// Remainder of an arbitrary coefficient vector modulo the monic Phi_N.
std::vector<Rational> reduce_mod_phi(std::vector<Rational> coeffs, const IntegerPolynomial& phi) {
    const std::size_t deg = static_cast<std::size_t>(phi.degree());
    for (std::size_t i = coeffs.size(); i-- > deg;) {
        if (coeffs[i].is_zero()) continue;
        const Rational c = coeffs[i];
        coeffs[i] = Rational();
        for (std::size_t j = 0; j < deg; ++j) {
            coeffs[i - deg + j] -= c * Rational(phi.coefficient(j));
        }
    }
    coeffs.resize(deg, Rational());
    return coeffs;
}

// Polynomials over Q for the extended Euclid used by inversion.
using RatPoly = std::vector<Rational>;  // coefficient i -> x^i, trailing zeros trimmed

void rp_trim(RatPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

RatPoly rp_sub_scaled(RatPoly a, const RatPoly& b, const Rational& s, std::size_t shift) {
    // a - s * x^shift * b
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, Rational());
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
    rp_trim(a);
    return a;
}

// Returns (quotient, remainder) of a / b, b nonzero.
std::pair<RatPoly, RatPoly> rp_divmod(RatPoly a, const RatPoly& b) {
    RatPoly q;
    if (a.size() >= b.size()) q.resize(a.size() - b.size() + 1, Rational());
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        const std::size_t shift = a.size() - b.size();
        Rational c = a.back() / lead;
        q[shift] += c;
        a = rp_sub_scaled(std::move(a), b, c, shift);
    }
    rp_trim(q);
    return {std::move(q), std::move(a)};
}

RatPoly rp_mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly c(a.size() + b.size() - 1, Rational());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    rp_trim(c);
    return c;
}

RatPoly rp_sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational());
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    rp_trim(a);
    return a;
}

}  // namespace

const IntegerPolynomial& cyclotomic_polynomial(unsigned order) {
    if (order == 0) throw std::invalid_argument("cyclotomic polynomial needs order >= 1");
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    return cyclotomic_locked(order);
}

CyclotomicNumber CyclotomicNumber::zero(unsigned order) {
    const auto& phi = cyclotomic_polynomial(order);
    return CyclotomicNumber(order, std::vector<Rational>(phi.degree(), Rational()));
}

CyclotomicNumber CyclotomicNumber::one(unsigned order) {
    return from_rational(order, Rational(1));
}

CyclotomicNumber CyclotomicNumber::from_rational(unsigned order, const Rational& value) {
    CyclotomicNumber r = zero(order);
    r.coeffs_[0] = value;
    return r;
}

CyclotomicNumber CyclotomicNumber::from_coefficients(unsigned order, std::vector<Rational> coeffs) {
    const auto& phi = cyclotomic_polynomial(order);
    const std::size_t deg = static_cast<std::size_t>(phi.degree());
    if (coeffs.size() <= deg) {
        coeffs.resize(deg, Rational());
        return CyclotomicNumber(order, std::move(coeffs));
    }
    return CyclotomicNumber(order, reduce_mod_phi(std::move(coeffs), phi));
}

bool CyclotomicNumber::is_zero() const {
    for (const Rational& c : coeffs_) {
        if (!c.is_zero()) return false;
    }
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return false;
    }
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r = *this;
    for (Rational& c : r.coeffs_) c = -c;
    return r;
}

namespace {
void require_same_order(unsigned a, unsigned b) {
    if (a != b) {
        throw std::invalid_argument("cyclotomic orders differ (" + std::to_string(a) + " vs " +
                                    std::to_string(b) + "); embed to a common order first");
    }
}
}  // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& o) {
    require_same_order(order_, o.order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& o) {
    require_same_order(order_, o.order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& o) {
    require_same_order(order_, o.order_);
    if (coeffs_.empty()) return *this;
    std::vector<Rational> prod(2 * coeffs_.size() - 1, Rational());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
            prod[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    coeffs_ = reduce_mod_phi(std::move(prod), cyclotomic_polynomial(order_));
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& s) {
    for (Rational& c : coeffs_) c *= s;
    return *this;
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::domain_error("inversion of zero cyclotomic number");
    // Extended Euclid on (a, Phi_N) over Q[x]; Phi_N is irreducible, so the
    // last nonzero remainder is a unit and u*a = gcd mod Phi_N.
    RatPoly r0(coeffs_.begin(), coeffs_.end());
    rp_trim(r0);
    const auto& phi = cyclotomic_polynomial(order_);
    RatPoly r1;
    r1.reserve(phi.degree() + 1);
    for (int i = 0; i <= phi.degree(); ++i) r1.push_back(Rational(phi.coefficient(i)));

    RatPoly u0 = {Rational(1)};
    RatPoly u1;  // zero
    while (!r1.empty()) {
        auto [q, r2] = rp_divmod(r0, r1);
        RatPoly u2 = rp_sub(u0, rp_mul(q, u1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
    }
    if (r0.size() != 1) throw std::domain_error("inversion failed: reducible modulus");
    const Rational scale = Rational(1) / r0[0];
    std::vector<Rational> result(u0.begin(), u0.end());
    for (Rational& c : result) c *= scale;
    return from_coefficients(order_, std::move(result));
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& v) {
    os << "(";
    for (std::size_t i = 0; i < v.coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << v.coeffs_[i];
    }
    return os << ") mod Phi_" << v.order_;
}

CyclotomicNumber zeta_power(unsigned order, long exponent) {
    if (order == 0) throw std::invalid_argument("zeta power needs order >= 1");
    long k = exponent % static_cast<long>(order);
    if (k < 0) k += order;
    std::vector<Rational> coeffs(static_cast<std::size_t>(k) + 1, Rational());
    coeffs.back() = Rational(1);
    return CyclotomicNumber::from_coefficients(order, std::move(coeffs));
}

CyclotomicNumber embed_order(const CyclotomicNumber& value, unsigned new_order) {
    if (new_order == 0 || new_order % value.order() != 0) {
        throw std::domain_error("embedding order " + std::to_string(new_order) +
                                " is not a multiple of " + std::to_string(value.order()));
    }
    const unsigned stride = new_order / value.order();  // zeta_N = zeta_M^stride
    const auto& coeffs = value.coefficients();
    std::vector<Rational> lifted(coeffs.size() * stride + 1, Rational());
    for (std::size_t i = 0; i < coeffs.size(); ++i) lifted[i * stride] = coeffs[i];
    return CyclotomicNumber::from_coefficients(new_order, std::move(lifted));
}

}  // namespace waring
