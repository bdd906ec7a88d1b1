#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "stringy/cyclotomic.hpp"
#include "stringy/qbinomial.hpp"

namespace stringy {
namespace {

std::vector<std::uint32_t> values(const std::vector<CyclotomicIndex>& idx) {
  std::vector<std::uint32_t> out;
  for (auto d : idx) out.push_back(d.value());
  return out;
}

TEST(Cyclotomic, SmallIndices) {
  EXPECT_EQ(cyclotomic(CyclotomicIndex(1)), (Polynomial{-1, 1}));
  EXPECT_EQ(cyclotomic(CyclotomicIndex(4)), (Polynomial{1, 0, 1}));
  EXPECT_EQ(cyclotomic(CyclotomicIndex(6)), (Polynomial{1, -1, 1}));
  EXPECT_THROW(CyclotomicIndex(0), std::invalid_argument);
}

TEST(Cyclotomic, MatchesMobiusProduct) {
  for (std::uint32_t d = 1; d <= 120; ++d) {
    EXPECT_EQ(cyclotomic(CyclotomicIndex(d)), oracle::cyclotomic_mobius(d)) << "d=" << d;
  }
}

TEST(Cyclotomic, FirstNonUnitCoefficient) {
  // Phi_105 is the smallest cyclotomic polynomial with a coefficient of absolute value 2.
  const Polynomial& phi = cyclotomic(CyclotomicIndex(105));
  EXPECT_EQ(phi.degree(), 48);
  EXPECT_EQ(phi.coeff(7), -2);
}

TEST(FactorPowerMinusOne, DivisorSets) {
  EXPECT_EQ(values(factor_power_minus_one(1)), (std::vector<std::uint32_t>{1}));
  EXPECT_EQ(values(factor_power_minus_one(6)), (std::vector<std::uint32_t>{1, 2, 3, 6}));
  EXPECT_EQ(values(factor_power_minus_one(12)), (std::vector<std::uint32_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_THROW(factor_power_minus_one(0), std::invalid_argument);
}

TEST(FactorPowerMinusOne, ProductAndDegreeIdentities) {
  for (std::uint32_t m = 1; m <= 200; ++m) {
    Polynomial prod{1};
    std::ptrdiff_t degree_sum = 0;
    for (auto d : factor_power_minus_one(m)) {
      prod *= cyclotomic(d);
      degree_sum += cyclotomic(d).degree();
    }
    EXPECT_EQ(prod, Polynomial::power_minus_one(m)) << "m=" << m;
    EXPECT_EQ(degree_sum, static_cast<std::ptrdiff_t>(m));
  }
}

TEST(CycloDividesQbinom, Examples) {
  EXPECT_TRUE(cyclo_divides_qbinom(CyclotomicIndex(4), 2, 4));
  EXPECT_FALSE(cyclo_divides_qbinom(CyclotomicIndex(2), 2, 4));
  for (std::uint32_t n = 2; n <= 12; ++n) {
    for (std::uint32_t k = 1; k < n; ++k) EXPECT_FALSE(cyclo_divides_qbinom(CyclotomicIndex(1), k, n));
  }
  EXPECT_THROW(cyclo_divides_qbinom(CyclotomicIndex(2), 5, 4), std::invalid_argument);
}

TEST(CycloDividesQbinom, FloorFormulaAgreesWithDivision) {
  for (std::uint32_t n = 1; n <= 30; ++n) {
    for (std::uint32_t k = 0; k <= n; ++k) {
      const Polynomial qb = gaussian_binomial(n, k);
      for (std::uint32_t d : divisors(n)) {
        const CyclotomicIndex idx(d);
        const bool by_division = divides(cyclotomic(idx), qb);
        EXPECT_EQ(cyclo_divides_qbinom(idx, k, n), by_division) << "d=" << d << " k=" << k << " n=" << n;
        if (d > 1) {
          EXPECT_EQ(cyclo_divides_qbinom(idx, k, n), k % d != 0);
        }
      }
    }
  }
}

TEST(CyclotomicCache, ConcurrentAccessAgrees) {
  std::vector<std::thread> threads;
  std::vector<std::vector<Polynomial>> seen(4);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([t, &seen] {
      for (std::uint32_t d = 300; d >= 200; --d) seen[t].push_back(cyclotomic(CyclotomicIndex(d)));
    });
  }
  for (auto& th : threads) th.join();
  for (int t = 1; t < 4; ++t) EXPECT_EQ(seen[t], seen[0]);
  EXPECT_EQ(seen[0].front(), oracle::cyclotomic_mobius(300));
}

}  // namespace
}  // namespace stringy
