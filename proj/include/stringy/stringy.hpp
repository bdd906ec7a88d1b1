#pragma once

// Stringy E-functions restricted to the diagonal q = uv.
//
// Results are kept as a numerator polynomial over a product of cyclotomic
// factors Phi_d^e_d. After normalization no stored Phi_d divides the
// numerator, so a result is a polynomial exactly when its denominator is empty.

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stringy/cyclotomic.hpp"
#include "stringy/polynomial.hpp"
#include "stringy/qbinomial.hpp"

namespace stringy {

class StringyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingEmptySubset : public StringyError {
 public:
  MissingEmptySubset() : StringyError("snc data has no stratum for the empty subset") {}
};

class InvalidSncData : public StringyError {
 public:
  using StringyError::StringyError;
};

class PoleAtOne : public StringyError {
 public:
  PoleAtOne() : StringyError("stringy E-function has a pole at q = 1") {}
};

using CyclotomicMultiset = std::map<CyclotomicIndex, unsigned>;

class FactoredRationalFunction {
 public:
  FactoredRationalFunction() = default;

  /// `scale` > 1 means the variable is t with q = t^scale.
  FactoredRationalFunction(Polynomial numerator, CyclotomicMultiset denominator, unsigned scale = 1)
      : numerator_(std::move(numerator)), denominator_(std::move(denominator)), scale_(scale) {
    if (scale_ == 0) throw std::invalid_argument("variable scale must be positive");
    std::erase_if(denominator_, [](const auto& kv) { return kv.second == 0; });
  }

  const Polynomial& numerator() const noexcept { return numerator_; }
  const CyclotomicMultiset& denominator() const noexcept { return denominator_; }
  unsigned scale() const noexcept { return scale_; }

  bool is_polynomial() const noexcept { return denominator_.empty(); }

  friend bool operator==(const FactoredRationalFunction&, const FactoredRationalFunction&) = default;

 private:
  Polynomial numerator_;
  CyclotomicMultiset denominator_;
  unsigned scale_ = 1;
};

namespace detail {

inline Polynomial cancel_cyclotomics(Polynomial num, CyclotomicMultiset& den) {
  for (auto& [d, mult] : den) {
    const Polynomial& phi = cyclotomic(d);
    while (mult > 0) {
      auto [quot, rem] = div_rem(num, phi);
      if (!rem.is_zero()) break;
      num = std::move(quot);
      --mult;
    }
  }
  return num;
}

}  // namespace detail

/// Cancels cyclotomic factors of prod (q^m - 1) over `den_factors` against `num`.
inline FactoredRationalFunction normalize(Polynomial num, const std::vector<std::uint32_t>& den_factors,
                                          unsigned scale = 1) {
  if (num.is_zero()) return {Polynomial{}, {}, scale};
  CyclotomicMultiset den;
  for (std::uint32_t m : den_factors) {
    for (CyclotomicIndex d : factor_power_minus_one(m)) ++den[d];
  }
  num = detail::cancel_cyclotomics(std::move(num), den);
  return {std::move(num), std::move(den), scale};
}

/// Re-normalizes an existing result; a no-op on normalized input.
inline FactoredRationalFunction normalize(const FactoredRationalFunction& f) {
  if (f.numerator().is_zero()) return {Polynomial{}, {}, f.scale()};
  CyclotomicMultiset den = f.denominator();
  Polynomial num = detail::cancel_cyclotomics(f.numerator(), den);
  return {std::move(num), std::move(den), f.scale()};
}

/// Cone over a Fano variety V with omega_V = L^(-n), taken with respect to L.
/// The zero section of the total space of L resolves it with discrepancy n-1, giving
/// E(V) (q-1) q^n / (q^n - 1).
inline FactoredRationalFunction stringy_cone_fano(const Polynomial& e_v, std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("stringy_cone_fano: n must be positive");
  if (e_v.is_zero()) throw std::invalid_argument("stringy_cone_fano: E(V) must be nonzero");
  return normalize((e_v * Polynomial{-1, 1}).shifted(n), {n});
}

/// Affine cone over Gr(k, n) in its Pluecker embedding, where omega = O(-n).
inline FactoredRationalFunction stringy_cone_grassmannian(const GrassmannianSpec& spec) {
  return stringy_cone_fano(gaussian_binomial(spec.n(), spec.k()), spec.n());
}

struct Divisor {
  std::string label;
  std::uint32_t discrepancy = 0;

  friend bool operator==(const Divisor&, const Divisor&) = default;
};

using Stratum = std::set<std::string>;

/// Exceptional divisors of a log resolution with E-polynomials of the open strata D_J°.
/// Subsets absent from `strata` are empty strata.
class SncData {
 public:
  SncData(std::vector<Divisor> divisors, std::map<Stratum, Polynomial> strata)
      : divisors_(std::move(divisors)), strata_(std::move(strata)) {
    std::set<std::string> labels;
    for (const auto& d : divisors_) {
      if (!labels.insert(d.label).second) throw InvalidSncData("duplicate divisor label '" + d.label + "'");
    }
    for (const auto& [subset, poly] : strata_) {
      for (const auto& label : subset) {
        if (!labels.contains(label)) throw InvalidSncData("stratum refers to unknown divisor '" + label + "'");
      }
    }
  }

  const std::vector<Divisor>& divisors() const noexcept { return divisors_; }
  const std::map<Stratum, Polynomial>& strata() const noexcept { return strata_; }

  std::uint32_t discrepancy(const std::string& label) const {
    for (const auto& d : divisors_) {
      if (d.label == label) return d.discrepancy;
    }
    throw InvalidSncData("unknown divisor '" + label + "'");
  }

 private:
  std::vector<Divisor> divisors_;
  std::map<Stratum, Polynomial> strata_;
};

/// Sum over strata of E(D_J°) prod_{j in J} (q-1)/(q^(a_j+1) - 1), over the common
/// denominator prod_j (q^(a_j+1) - 1).
inline FactoredRationalFunction stringy_snc(const SncData& data) {
  if (!data.strata().contains(Stratum{})) throw MissingEmptySubset();

  std::vector<std::uint32_t> den;
  den.reserve(data.divisors().size());
  for (const auto& d : data.divisors()) den.push_back(d.discrepancy + 1);

  const Polynomial q_minus_one{-1, 1};
  Polynomial total;
  for (const auto& [subset, e_poly] : data.strata()) {
    Polynomial term = e_poly * pow(q_minus_one, static_cast<unsigned>(subset.size()));
    for (const auto& d : data.divisors()) {
      if (!subset.contains(d.label)) term *= Polynomial::power_minus_one(d.discrepancy + 1);
    }
    total += term;
  }
  return normalize(std::move(total), den);
}

/// Cone over V with omega_V^(-l) = L^k: discrepancy k/l - 1, computed in t = q^(1/l).
struct QGorensteinSpec {
  Polynomial e_v;
  std::uint32_t k = 1;
  std::uint32_t l = 1;
};

inline FactoredRationalFunction stringy_qgorenstein_cone(const QGorensteinSpec& spec) {
  if (spec.k == 0 || spec.l == 0) throw std::invalid_argument("stringy_qgorenstein_cone: k and l must be positive");
  if (spec.e_v.is_zero()) throw std::invalid_argument("stringy_qgorenstein_cone: E(V) must be nonzero");
  Polynomial num = (substitute_power(spec.e_v, spec.l) * Polynomial::power_minus_one(spec.l)).shifted(spec.k);
  return normalize(std::move(num), {spec.k}, spec.l);
}

inline bool is_polynomial(const FactoredRationalFunction& f) { return f.is_polynomial(); }

inline bool predict_polynomial_gcd(const GrassmannianSpec& spec) { return spec.gcd() == 1; }

/// Limit as q -> 1. Phi_d(1) is p when d is a power of the prime p and 1 otherwise;
/// here each stored Phi_d is simply evaluated.
inline BigRational stringy_euler(const FactoredRationalFunction& f) {
  if (f.numerator().is_zero()) return 0;
  const CyclotomicIndex one(1);
  unsigned pole = 0;
  if (auto it = f.denominator().find(one); it != f.denominator().end()) pole = it->second;

  Polynomial num = f.numerator();
  for (unsigned i = 0; i < pole; ++i) {
    auto [quot, rem] = div_rem(num, cyclotomic(one));
    if (!rem.is_zero()) throw PoleAtOne();
    num = std::move(quot);
  }

  BigRational value = eval(num, BigRational(1));
  for (const auto& [d, mult] : f.denominator()) {
    if (d == one) continue;
    const BigInt at_one = eval(cyclotomic(d), BigInt(1));
    for (unsigned i = 0; i < mult; ++i) value /= BigRational(at_one);
  }
  return value;
}

}  // namespace stringy
