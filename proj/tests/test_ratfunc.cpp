#include "affpoin/ratfunc.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace affpoin;

namespace {

Polynomial P(std::vector<long> c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return Polynomial(std::move(r));
}

TEST(Polynomial, Arithmetic) {
  EXPECT_EQ(P({1, 1}) * P({1, -1}), P({1, 0, -1}));
  EXPECT_EQ(P({1, 2, 1}) - P({1, 2, 1}), Polynomial());
  EXPECT_EQ(P({0, 0, 3}).degree(), 2);
  EXPECT_EQ(Polynomial::one_minus_q_pow(3), P({1, 0, 0, -1}));
  const auto [q, r] = Polynomial::divmod(P({-1, 0, 0, 1}), P({-1, 1}));
  EXPECT_EQ(q, P({1, 1, 1}));
  EXPECT_TRUE(r.is_zero());
}

TEST(Polynomial, GcdIsMonicCommonFactor) {
  const auto g = Polynomial::gcd(P({1, 0, -1}) * P({2, 3}), P({1, -1}) * P({5, 0, 1}));
  EXPECT_EQ(g, P({-1, 1}));
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    auto rand_poly = [&](int deg) {
      std::vector<long> c(static_cast<std::size_t>(deg) + 1);
      for (auto& x : c) x = coef(rng);
      c.back() = c.back() == 0 ? 1 : c.back();
      return P(c);
    };
    const auto common = rand_poly(2), a = rand_poly(3), b = rand_poly(2);
    const auto g2 = Polynomial::gcd(a * common, b * common);
    EXPECT_TRUE(Polynomial::divmod(a * common, g2).second.is_zero());
    EXPECT_TRUE(Polynomial::divmod(b * common, g2).second.is_zero());
    EXPECT_TRUE(Polynomial::divmod(g2, common.monic()).second.is_zero());
  }
}

TEST(RationalFunction, ReducesAndNormalizes) {
  const RationalFunction f(P({1, 0, -1}), P({2, -2}));  // (1-q)(1+q) / 2(1-q)
  EXPECT_EQ(f.num(), Polynomial(std::vector<Rational>{Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(f.den(), P({1}));
  const RationalFunction g(P({0, 2}), P({0, 0, 4}));  // 2q / 4q^2 = 1/(2q)
  EXPECT_EQ(g.den(), P({0, 1}));
  EXPECT_EQ(g.num(), Polynomial(std::vector<Rational>{Rational(1, 2)}));
}

TEST(RationalFunction, SeriesAndIdentities) {
  const RationalFunction geo(P({1}), P({1, -1}));
  EXPECT_EQ(geo.series(4), (std::vector<Rational>{1, 1, 1, 1, 1}));
  const RationalFunction a1(P({1, 1}), P({1, -1}));
  EXPECT_EQ(a1.series(3), (std::vector<Rational>{1, 2, 2, 2}));
  EXPECT_EQ(a1 - geo, RationalFunction(P({0, 1}), P({1, -1})));
  EXPECT_EQ(geo * RationalFunction(P({1, -1})), RationalFunction(1));
  EXPECT_EQ((a1 / geo), RationalFunction(P({1, 1})));
  EXPECT_EQ(geo.times_q_pow(-1).times_q_pow(1), geo);
}

TEST(Cyclotomic, ProductOverDivisorsIsQnMinusOne) {
  for (long n = 1; n <= 30; ++n) {
    zpoly::ZPoly prod{BigInt(1)};
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) prod = zpoly::mul(prod, cyclotomic(d));
    zpoly::ZPoly want(static_cast<std::size_t>(n) + 1, BigInt(0));
    want.front() = -1;
    want.back() = 1;
    EXPECT_EQ(prod, want) << n;
  }
}

TEST(FactoredRational, SumMatchesRationalArithmetic) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> coef(-3, 3), dd(1, 6), len(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    CyclotomicSum sum;
    RationalFunction want;
    for (int t = 0; t < 4; ++t) {
      zpoly::ZPoly num;
      std::vector<Rational> rnum;
      for (int i = 0; i < 3; ++i) {
        num.emplace_back(coef(rng));
        rnum.emplace_back(num.back());
      }
      std::vector<long> ds;
      Polynomial den = P({1});
      for (long k = len(rng); k > 0; --k) {
        ds.push_back(dd(rng));
        den *= Polynomial::one_minus_q_pow(static_cast<std::size_t>(ds.back()));
      }
      const long shift = static_cast<long>(dd(rng)) - 3;
      zpoly::trim(num);
      sum.add(FactoredRational::over_one_minus_q_pows(num, ds).times_q_pow(shift));
      want = want + RationalFunction(Polynomial(rnum), den).times_q_pow(shift);
    }
    EXPECT_EQ(sum.result().to_rational_function(), want);
  }
}

}  // namespace
