#pragma once

// Dense univariate polynomials in q over arbitrary-precision integers.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stringy {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Degree reported for the zero polynomial.
inline constexpr std::ptrdiff_t kDegreeOfZero = std::numeric_limits<std::ptrdiff_t>::min();

class PolynomialError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public PolynomialError {
 public:
  DivisionByZero() : PolynomialError("polynomial division by zero") {}
};

class NonMonicDivisor : public PolynomialError {
 public:
  NonMonicDivisor() : PolynomialError("divisor is not monic up to sign and integer division failed") {}
};

/// Coefficients are stored in ascending degree: coeffs()[i] multiplies q^i.
/// The stored sequence never ends in a zero; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  Polynomial(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial constant(BigInt c) { return Polynomial(std::vector<BigInt>{std::move(c)}); }

  /// c * q^degree
  static Polynomial monomial(BigInt c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// q^m - 1
  static Polynomial power_minus_one(std::size_t m) {
    std::vector<BigInt> v(m + 1);
    v[0] = -1;
    v[m] += 1;
    return Polynomial(std::move(v));
  }

  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

  /// Coefficient of q^i; zero beyond the degree.
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  std::ptrdiff_t degree() const noexcept {
    return coeffs_.empty() ? kDegreeOfZero : static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }

  const BigInt& leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  bool is_monic_up_to_sign() const { return !coeffs_.empty() && abs(coeffs_.back()) == 1; }

  /// Largest v with q^v dividing this polynomial. Zero for the zero polynomial.
  std::size_t valuation() const noexcept {
    std::size_t v = 0;
    while (v < coeffs_.size() && coeffs_[v] == 0) ++v;
    return coeffs_.empty() ? 0 : v;
  }

  /// Multiply by q^k.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<BigInt> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  /// Divide by q^k; the low k coefficients must vanish.
  Polynomial unshifted(std::size_t k) const {
    if (k > valuation() && !is_zero()) throw std::logic_error("unshift past the q-adic valuation");
    if (k >= coeffs_.size()) return {};
    return Polynomial(std::vector<BigInt>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
  }

  std::size_t term_count() const {
    return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; }));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const BigInt& s, Polynomial p) {
    if (s == 0) return {};
    for (auto& c : p.coeffs_) c *= s;
    return p;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigInt> coeffs_;
};

inline Polynomial add(const Polynomial& a, const Polynomial& b) { return a + b; }
inline Polynomial mul(const Polynomial& a, const Polynomial& b) { return a * b; }

inline Polynomial pow(Polynomial base, unsigned e) {
  Polynomial r{1};
  while (e) {
    if (e & 1U) r *= base;
    e >>= 1U;
    if (e) base *= base;
  }
  return r;
}

struct DivRem {
  Polynomial quotient;
  Polynomial remainder;
};

/// Long division over the integers. Exact whenever b is monic up to sign;
/// for other divisors each step must divide evenly or NonMonicDivisor is thrown.
inline DivRem div_rem(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {Polynomial{}, a};

  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t bdeg = bc.size() - 1;
  const BigInt& lead = bc.back();
  const bool unit_lead = abs(lead) == 1;
  std::vector<BigInt> quot(rem.size() - bdeg);

  for (std::size_t top = rem.size(); top-- > bdeg;) {
    if (rem[top] == 0) continue;
    BigInt factor;
    if (unit_lead) {
      factor = lead == 1 ? rem[top] : BigInt(-rem[top]);
    } else {
      if (rem[top] % lead != 0) throw NonMonicDivisor();
      factor = rem[top] / lead;
    }
    const std::size_t shift = top - bdeg;
    quot[shift] = factor;
    for (std::size_t j = 0; j <= bdeg; ++j) rem[shift + j] -= factor * bc[j];
  }
  rem.resize(bdeg);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

class NotDivisible : public PolynomialError {
 public:
  explicit NotDivisible(Polynomial remainder)
      : PolynomialError("polynomial is not divisible"), remainder_(std::move(remainder)) {}

  const Polynomial& remainder() const noexcept { return remainder_; }

 private:
  Polynomial remainder_;
};

inline Polynomial div_exact(const Polynomial& a, const Polynomial& b) {
  auto [quot, rem] = div_rem(a, b);
  if (!rem.is_zero()) throw NotDivisible(std::move(rem));
  return std::move(quot);
}

inline bool divides(const Polynomial& b, const Polynomial& a) { return div_rem(a, b).remainder.is_zero(); }

/// Horner evaluation at an exact rational point.
inline BigRational eval(const Polynomial& p, const BigRational& x) {
  BigRational acc = 0;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + BigRational(c[i]);
  return acc;
}

inline BigInt eval(const Polynomial& p, const BigInt& x) {
  BigInt acc = 0;
  const auto c = p.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

/// Rewrites p(q) as p(t^l).
inline Polynomial substitute_power(const Polynomial& p, unsigned l) {
  if (l == 0) throw std::invalid_argument("substitute_power: exponent must be positive");
  if (p.is_zero() || l == 1) return p;
  const auto c = p.coeffs();
  std::vector<BigInt> out((c.size() - 1) * l + 1);
  for (std::size_t i = 0; i < c.size(); ++i) out[i * l] = c[i];
  return Polynomial(std::move(out));
}

}  // namespace stringy
