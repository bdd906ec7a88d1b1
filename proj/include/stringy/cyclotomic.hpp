#pragma once

// Cyclotomic polynomials and the factorization q^m - 1 = prod_{d | m} Phi_d.

#include <compare>
#include <cstdint>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "stringy/polynomial.hpp"

namespace stringy {

class CyclotomicIndex {
 public:
  explicit CyclotomicIndex(std::uint32_t d) : d_(d) {
    if (d == 0) throw std::invalid_argument("cyclotomic index must be positive");
  }

  std::uint32_t value() const noexcept { return d_; }

  friend auto operator<=>(const CyclotomicIndex&, const CyclotomicIndex&) = default;

 private:
  std::uint32_t d_;
};

/// Divisors of m in increasing order, by trial division.
inline std::vector<std::uint32_t> divisors(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("divisors of zero");
  std::vector<std::uint32_t> low, high;
  for (std::uint32_t d = 1; static_cast<std::uint64_t>(d) * d <= m; ++d) {
    if (m % d != 0) continue;
    low.push_back(d);
    if (d != m / d) high.push_back(m / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

namespace detail {

class CyclotomicCache {
 public:
  static CyclotomicCache& instance() {
    static CyclotomicCache cache;
    return cache;
  }

  // References stay valid: unordered_map never relocates its nodes.
  const Polynomial& get(std::uint32_t d) {
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(d); it != table_.end()) return it->second;
    }
    Polynomial phi = compute(d);
    std::unique_lock lock(mutex_);
    return table_.try_emplace(d, std::move(phi)).first->second;
  }

 private:
  Polynomial compute(std::uint32_t d) {
    Polynomial p = Polynomial::power_minus_one(d);
    for (std::uint32_t e : divisors(d)) {
      if (e == d) break;
      p = div_exact(p, get(e));
    }
    return p;
  }

  std::shared_mutex mutex_;
  std::unordered_map<std::uint32_t, Polynomial> table_;
};

}  // namespace detail

/// Phi_d, obtained by dividing q^d - 1 by Phi_e for every proper divisor e of d.
/// Results are memoized process-wide; the cache is safe to use from several threads.
inline const Polynomial& cyclotomic(CyclotomicIndex d) { return detail::CyclotomicCache::instance().get(d.value()); }

/// Indices d with Phi_d dividing q^m - 1; each occurs exactly once.
inline std::vector<CyclotomicIndex> factor_power_minus_one(std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("factor_power_minus_one: m must be positive");
  std::vector<CyclotomicIndex> out;
  for (std::uint32_t d : divisors(m)) out.emplace_back(d);
  return out;
}

/// Multiplicity of Phi_d in the Gaussian binomial [n choose k]_q:
/// floor(n/d) - floor(k/d) - floor((n-k)/d), which is always 0 or 1.
inline unsigned cyclotomic_multiplicity_in_qbinom(CyclotomicIndex d, std::uint32_t k, std::uint32_t n) {
  if (k > n) throw std::invalid_argument("cyclotomic multiplicity: need 0 <= k <= n");
  const std::uint32_t dv = d.value();
  return n / dv - k / dv - (n - k) / dv;
}

inline bool cyclo_divides_qbinom(CyclotomicIndex d, std::uint32_t k, std::uint32_t n) {
  return cyclotomic_multiplicity_in_qbinom(d, k, n) >= 1;
}

}  // namespace stringy
