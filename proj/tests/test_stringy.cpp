#include <gtest/gtest.h>

#include "stringy/qbinomial.hpp"
#include "stringy/stringy.hpp"

namespace stringy {
namespace {

const Polynomial kQMinusOne{-1, 1};

CyclotomicMultiset phis(std::initializer_list<std::pair<std::uint32_t, unsigned>> entries) {
  CyclotomicMultiset m;
  for (auto [d, e] : entries) m[CyclotomicIndex(d)] = e;
  return m;
}

/// Value of f at a rational point, straight from its stored factors.
BigRational value_at(const FactoredRationalFunction& f, const BigRational& x) {
  BigRational v = eval(f.numerator(), x);
  for (const auto& [d, e] : f.denominator()) {
    for (unsigned i = 0; i < e; ++i) v /= eval(cyclotomic(d), x);
  }
  return v;
}

/// E(V)(x) (x-1) x^n / (x^n - 1) evaluated directly, without any cancellation.
BigRational fano_cone_at(const Polynomial& e_v, std::uint32_t n, const BigRational& x) {
  BigRational xn = 1;
  for (std::uint32_t i = 0; i < n; ++i) xn *= x;
  return eval(e_v, x) * (x - 1) * xn / (xn - 1);
}

SncData one_divisor_cone(std::uint32_t k, std::uint32_t n) {
  const Polynomial qb = gaussian_binomial(n, k);
  return SncData({{"D", n - 1}}, {{Stratum{}, kQMinusOne * qb}, {Stratum{"D"}, qb}});
}

TEST(Normalize, Examples) {
  EXPECT_EQ(normalize(Polynomial{-1, 0, 1}, {2}), FactoredRationalFunction(Polynomial{1}, {}));

  const Polynomial num = (gaussian_binomial(4, 2) * kQMinusOne).shifted(4);
  const auto f = normalize(num, {4});
  EXPECT_EQ(f.numerator(), (Polynomial{1, 1, 1}).shifted(4));
  EXPECT_EQ(f.denominator(), phis({{2, 1}}));

  const Polynomial p{3, 0, 2};
  EXPECT_EQ(normalize(p, {}), FactoredRationalFunction(p, {}));
  EXPECT_EQ(normalize(Polynomial{}, {5, 6}), FactoredRationalFunction());
}

TEST(Normalize, Idempotent) {
  for (std::uint32_t n = 3; n <= 12; ++n) {
    for (std::uint32_t k = 1; k < n; ++k) {
      const auto f = stringy_cone_grassmannian(GrassmannianSpec(k, n));
      EXPECT_EQ(normalize(f), f);
      for (const auto& [d, e] : f.denominator()) EXPECT_FALSE(divides(cyclotomic(d), f.numerator()));
    }
  }
}

TEST(StringyConeFano, Examples) {
  for (std::uint32_t n = 1; n <= 10; ++n) {
    EXPECT_EQ(stringy_cone_fano(q_integer(n), n), FactoredRationalFunction(Polynomial::monomial(1, n), {}));
  }
  EXPECT_EQ(stringy_cone_fano(gaussian_binomial(5, 2), 5),
            FactoredRationalFunction(Polynomial{0, 0, 0, 0, 0, 1, 0, 1}, {}));
  const auto f = stringy_cone_fano(gaussian_binomial(4, 2), 4);
  EXPECT_EQ(f.numerator(), (Polynomial{0, 0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(f.denominator(), phis({{2, 1}}));
  EXPECT_THROW(stringy_cone_fano(Polynomial{}, 3), std::invalid_argument);
  EXPECT_THROW(stringy_cone_fano(Polynomial{1}, 0), std::invalid_argument);
}

TEST(StringyConeFano, AgreesWithUncancelledFormula) {
  const BigRational points[] = {BigRational(2), BigRational(-3), BigRational(1, 2), BigRational(5, 3)};
  for (std::uint32_t n = 4; n <= 14; ++n) {
    for (std::uint32_t k = 2; k + 1 < n; ++k) {
      const auto f = stringy_cone_grassmannian(GrassmannianSpec(k, n));
      for (const auto& x : points) EXPECT_EQ(value_at(f, x), fano_cone_at(gaussian_binomial(n, k), n, x));
    }
  }
}

TEST(StringyConeGrassmannian, Examples) {
  EXPECT_EQ(stringy_cone_grassmannian(GrassmannianSpec(2, 5)),
            FactoredRationalFunction(Polynomial{0, 0, 0, 0, 0, 1, 0, 1}, {}));
  const auto f24 = stringy_cone_grassmannian(GrassmannianSpec(2, 4));
  EXPECT_EQ(f24.numerator(), (Polynomial{1, 1, 1}).shifted(4));
  EXPECT_EQ(f24.denominator(), phis({{2, 1}}));
  for (std::uint32_t n = 2; n <= 20; ++n) {
    EXPECT_EQ(stringy_cone_grassmannian(GrassmannianSpec(1, n)),
              FactoredRationalFunction(Polynomial::monomial(1, n), {}));
  }
  // Gr(3,6): Phi_2 cancels against the q-binomial, Phi_3 survives.
  const auto f36 = stringy_cone_grassmannian(GrassmannianSpec(3, 6));
  EXPECT_EQ(f36.numerator(), (Polynomial{1, 0, 1} * Polynomial{1, 1, 1, 1, 1}).shifted(6));
  EXPECT_EQ(f36.denominator(), phis({{3, 1}}));
}

TEST(StringySnc, Examples) {
  EXPECT_EQ(stringy_snc(one_divisor_cone(2, 5)), stringy_cone_grassmannian(GrassmannianSpec(2, 5)));

  const Polynomial p{2, 0, 5, 1};
  EXPECT_EQ(stringy_snc(SncData({}, {{Stratum{}, p}})), FactoredRationalFunction(p, {}));

  const SncData crepant({{"E", 0}}, {{Stratum{}, kQMinusOne}, {Stratum{"E"}, Polynomial{1}}});
  EXPECT_EQ(stringy_snc(crepant), FactoredRationalFunction(Polynomial{0, 1}, {}));
}

TEST(StringySnc, ReducesToClosedForm) {
  for (std::uint32_t n = 4; n <= 12; ++n) {
    for (std::uint32_t k = 2; k + 1 < n; ++k) {
      EXPECT_EQ(stringy_snc(one_divisor_cone(k, n)), stringy_cone_grassmannian(GrassmannianSpec(k, n)));
    }
  }
}

TEST(StringySnc, TwoDivisorsAgainstDirectSum) {
  // Stratum sum evaluated term by term at rational points, without a common denominator.
  const Polynomial e_open{-1, 0, 0, 1}, e_a{0, 0, 1}, e_b{0, -1, 1}, e_ab{1, 1};
  const SncData data({{"A", 2}, {"B", 1}},
                     {{Stratum{}, e_open}, {Stratum{"A"}, e_a}, {Stratum{"B"}, e_b}, {Stratum{"A", "B"}, e_ab}});
  const auto f = stringy_snc(data);
  for (const BigRational& x : {BigRational(3), BigRational(-2), BigRational(2, 5)}) {
    const BigRational wa = (x - 1) / (x * x * x - 1);
    const BigRational wb = (x - 1) / (x * x - 1);
    const BigRational direct = eval(e_open, x) + eval(e_a, x) * wa + eval(e_b, x) * wb + eval(e_ab, x) * wa * wb;
    EXPECT_EQ(value_at(f, x), direct);
  }
  EXPECT_EQ(normalize(f), f);
}

TEST(StringySnc, Errors) {
  EXPECT_THROW(stringy_snc(SncData({{"D", 1}}, {{Stratum{"D"}, Polynomial{1}}})), MissingEmptySubset);
  EXPECT_THROW(SncData({{"D", 1}, {"D", 2}}, {{Stratum{}, Polynomial{1}}}), InvalidSncData);
  EXPECT_THROW(SncData({{"D", 1}}, {{Stratum{}, Polynomial{1}}, {Stratum{"X"}, Polynomial{1}}}), InvalidSncData);
}

TEST(StringySnc, AbsentSubsetsAreEmptyStrata) {
  const Polynomial qb = gaussian_binomial(5, 2);
  SncData with_zero({{"D", 4}, {"F", 3}},
                    {{Stratum{}, kQMinusOne * qb}, {Stratum{"D"}, qb}, {Stratum{"F"}, Polynomial{}}});
  SncData without({{"D", 4}, {"F", 3}}, {{Stratum{}, kQMinusOne * qb}, {Stratum{"D"}, qb}});
  EXPECT_EQ(stringy_snc(with_zero), stringy_snc(without));
  EXPECT_EQ(stringy_snc(without), stringy_cone_grassmannian(GrassmannianSpec(2, 5)));
}

TEST(StringyQGorenstein, Examples) {
  const auto f = stringy_qgorenstein_cone({Polynomial{1, 1}, 2, 3});
  EXPECT_EQ(f, FactoredRationalFunction(Polynomial{0, 0, 1, 0, 1, 0, 1}, {}, 3));
  EXPECT_EQ(stringy_euler(f), BigRational(3));

  EXPECT_EQ(stringy_qgorenstein_cone({Polynomial{1}, 1, 1}), FactoredRationalFunction(Polynomial{0, 1}, {}));

  for (std::uint32_t n = 1; n <= 8; ++n) {
    const Polynomial e_v = gaussian_binomial(n + 1, 2);
    EXPECT_EQ(stringy_qgorenstein_cone({e_v, n, 1}), stringy_cone_fano(e_v, n));
    for (std::uint32_t l = 2; l <= 3; ++l) {
      const auto fano = stringy_cone_fano(e_v, n);
      const auto sub = stringy_qgorenstein_cone({e_v, l * n, l});
      EXPECT_EQ(value_at(sub, BigRational(2)), value_at(fano, BigRational(1 << l)));
      EXPECT_EQ(sub.numerator(), substitute_power(fano.numerator(), l));
      EXPECT_EQ(sub.scale(), l);
    }
  }
  EXPECT_THROW(stringy_qgorenstein_cone({Polynomial{1}, 0, 1}), std::invalid_argument);
}

TEST(Polynomiality, Examples) {
  EXPECT_TRUE(is_polynomial(stringy_cone_grassmannian(GrassmannianSpec(2, 5))));
  EXPECT_FALSE(is_polynomial(stringy_cone_grassmannian(GrassmannianSpec(2, 4))));
  EXPECT_TRUE(is_polynomial(FactoredRationalFunction(Polynomial{1, 2}, {})));
  EXPECT_TRUE(predict_polynomial_gcd(GrassmannianSpec(2, 5)));
  EXPECT_FALSE(predict_polynomial_gcd(GrassmannianSpec(2, 4)));
  EXPECT_FALSE(predict_polynomial_gcd(GrassmannianSpec(3, 6)));
}

TEST(Polynomiality, MatchesGcdCriterion) {
  for (std::uint32_t n = 4; n <= 20; ++n) {
    for (std::uint32_t k = 2; k + 1 < n; ++k) {
      const GrassmannianSpec spec(k, n);
      EXPECT_EQ(is_polynomial(stringy_cone_grassmannian(spec)), predict_polynomial_gcd(spec)) << k << " " << n;
    }
  }
}

TEST(StringyEuler, Examples) {
  EXPECT_EQ(stringy_euler(stringy_cone_grassmannian(GrassmannianSpec(2, 5))), BigRational(2));
  EXPECT_EQ(stringy_euler(stringy_cone_grassmannian(GrassmannianSpec(2, 4))), BigRational(3, 2));
  EXPECT_EQ(stringy_euler(stringy_cone_grassmannian(GrassmannianSpec(1, 7))), BigRational(1));
  EXPECT_EQ(stringy_euler(FactoredRationalFunction()), BigRational(0));
}

TEST(StringyEuler, BinomialOverN) {
  for (std::uint32_t n = 2; n <= 20; ++n) {
    for (std::uint32_t k = 1; k < n; ++k) {
      EXPECT_EQ(stringy_euler(stringy_cone_grassmannian(GrassmannianSpec(k, n))), BigRational(binomial(n, k), n));
    }
  }
}

TEST(StringyEuler, PoleAtOne) {
  EXPECT_THROW(stringy_euler(FactoredRationalFunction(Polynomial{1, 1}, phis({{1, 1}}))), PoleAtOne);
  // A removable Phi_1 left in by hand is still handled.
  EXPECT_EQ(stringy_euler(FactoredRationalFunction(Polynomial{-1, 0, 1}, phis({{1, 1}, {3, 1}}))),
            BigRational(2, 3));
}

}  // namespace
}  // namespace stringy
