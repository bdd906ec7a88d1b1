#pragma once

// Gaussian binomial coefficients, built two independent ways.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "stringy/cyclotomic.hpp"
#include "stringy/polynomial.hpp"

namespace stringy {

/// The Grassmannian Gr(k, n) with 1 <= k <= n-1.
class GrassmannianSpec {
 public:
  GrassmannianSpec(std::uint32_t k, std::uint32_t n) : k_(k), n_(n) {
    if (k < 1 || n < 2 || k > n - 1) {
      throw std::invalid_argument("Grassmannian Gr(" + std::to_string(k) + "," + std::to_string(n) +
                                  ") needs 1 <= k <= n-1");
    }
  }

  std::uint32_t k() const noexcept { return k_; }
  std::uint32_t n() const noexcept { return n_; }

  /// The cone is singular exactly when 1 < k < n-1.
  bool singular_cone() const noexcept { return k_ > 1 && k_ + 1 < n_; }

  std::uint32_t gcd() const noexcept { return std::gcd(k_, n_); }

  friend auto operator<=>(const GrassmannianSpec&, const GrassmannianSpec&) = default;

 private:
  std::uint32_t k_;
  std::uint32_t n_;
};

inline BigInt binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint32_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// [m]_q = 1 + q + ... + q^(m-1)
inline Polynomial q_integer(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("q_integer: m must be positive");
  return Polynomial(std::vector<BigInt>(m, BigInt(1)));
}

/// Product formula prod_{i<k} (1 - q^(n-i)) / prod_{i<=k} (1 - q^i), divided out
/// one factor at a time. Every partial quotient is itself [n choose i]_q, so
/// each division is exact.
inline Polynomial gaussian_binomial(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
  Polynomial acc{1};
  for (std::uint32_t i = 0; i < k; ++i) {
    acc *= -Polynomial::power_minus_one(n - i);
    try {
      acc = div_exact(acc, -Polynomial::power_minus_one(i + 1));
    } catch (const NotDivisible&) {
      throw std::logic_error("gaussian_binomial: product formula failed to divide");
    }
  }
  return acc;
}

/// Product of Phi_d over every d whose floor multiplicity in [n choose k]_q is one.
inline Polynomial gaussian_binomial_cyclotomic(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw std::invalid_argument("gaussian_binomial_cyclotomic: need 0 <= k <= n");
  Polynomial acc{1};
  for (std::uint32_t d = 2; d <= n; ++d) {
    const CyclotomicIndex idx(d);
    if (cyclo_divides_qbinom(idx, k, n)) acc *= cyclotomic(idx);
  }
  return acc;
}

}  // namespace stringy
