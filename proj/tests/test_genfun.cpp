#include "oracles.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace affpoin;

namespace {

Polynomial P(std::vector<long> c) {
  std::vector<Rational> r;
  for (long v : c) r.emplace_back(v);
  return Polynomial(std::move(r));
}

TEST(MVector, Examples) {
  const WeylGroup a1(build_root_system("A1"));
  EXPECT_EQ(m_vector(a1.root_system(), a1.identity()), (IntVec{0}));
  EXPECT_EQ(m_vector(a1.root_system(), a1.elements()[1]), (IntVec{1}));
  for (const char* t : {"A2", "C2", "G2", "B3"}) {
    const WeylGroup w(build_root_system(t));
    for (const auto& u : w.elements())
      for (Int m : m_vector(w.root_system(), u)) EXPECT_GE(m, 0);
    for (Int m : m_vector(w.root_system(), w.identity())) EXPECT_EQ(m, 0);
  }
}

TEST(BuildSystem, Examples) {
  const WeylGroup a1(build_root_system("A1"));
  const auto& rs = a1.root_system();
  const auto empty = build_system(a1, a1.identity(), a1.identity(), normalize(rs, {}));
  EXPECT_TRUE(empty.upper_matrix.empty());
  EXPECT_EQ(empty.lower_matrix, (IntMatrix{{2}}));
  const auto sys = build_system(a1, a1.identity(), a1.identity(), normalize(rs, {{{1}, 0}}));
  EXPECT_EQ(sys.upper_matrix, (IntMatrix{{2}}));
  EXPECT_EQ(sys.upper_rhs, (IntVec{0}));
  EXPECT_EQ(oracle::lattice_counts(sys, 10), (std::vector<Int>{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(solve_genfun(sys), RationalFunction(1));
}

TEST(BuildSystem, WeightIsTwo) {
  for (const char* t : {"A2", "C2", "G2", "F4"}) {
    const auto rs = build_root_system(t);
    for (std::size_t j = 0; j < rs.rank(); ++j)
      EXPECT_EQ(rs.form(rs.coroot(rs.simple_root(j)), rs.rho()) * 2, 2) << t;
    EXPECT_EQ(translation_system(rs, weyl::identity(rs)).weight, IntVec(rs.rank(), 2));
  }
}

// Solutions e of the A = empty system at u give translations alpha = u^{-1} delta
// with u t_alpha mapping the alcove into the dominant chamber.
TEST(BuildSystem, TranslationPiecesPartitionTranslations) {
  for (const char* t : {"A1", "A2", "C2", "G2"}) {
    const AffineWeylGroup aff(build_root_system(t));
    const auto& w = aff.finite();
    const auto& rs = aff.root_system();
    const oracle::AlcoveModel model(rs);
    std::vector<Int> total(21, 0);
    for (const auto& u : w.elements()) {
      const auto sys = translation_system(rs, u);
      const auto counts = oracle::lattice_counts(sys, 20);
      for (std::size_t d = 0; d < counts.size(); ++d) total[d] += counts[d];
      // every small solution satisfies the alcove-vertex test
      for (Int e1 = 0; e1 <= 3; ++e1) {
        IntVec e(rs.rank(), 0);
        e[0] = e1;
        if (!sys.satisfied_by(e)) continue;
        const IntVec alpha = weyl::act_coroot(rs, w.inverse(u), e);
        const auto ut = aff.compose(aff.from_finite(u), aff.translation(alpha));
        EXPECT_EQ(aff.min_right_rep_part(ut), w.identity());
        EXPECT_EQ(aff.length(aff.translation(alpha)), 2 * e1);
      }
    }
    EXPECT_EQ(total, model.translation_counts(20)) << t;
  }
}

TEST(AssembleWA, A1Examples) {
  const AffineWeylGroup aff(build_root_system("A1"));
  const auto& rs = aff.root_system();
  EXPECT_EQ(assemble_WA(aff, normalize(rs, {})), RationalFunction(P({1, 1}), P({1, -1})));
  EXPECT_EQ(assemble_WA(aff, normalize(rs, {{{1}, 0}})), RationalFunction(P({1}), P({1, -1})));
  EXPECT_EQ(assemble_WA(aff, normalize(rs, parse_shorthand(aff, "s0,s1"))), RationalFunction(1));
}

class Battery : public ::testing::TestWithParam<const char*> {};

TEST_P(Battery, AssemblyMatchesEnumeration) {
  const AffineWeylGroup aff(build_root_system(GetParam()));
  const oracle::AlcoveModel model(aff.root_system());
  for (const auto& raw : oracle::battery(aff)) {
    const auto f = assemble_WA(aff, normalize(aff.root_system(), raw), 2);
    EXPECT_TRUE(oracle::series_equal(f, model.series(raw, 14)));
  }
}

TEST_P(Battery, ParabolicIdentity) {
  const AffineWeylGroup aff(build_root_system(GetParam()));
  const auto& rs = aff.root_system();
  std::vector<AffineRoot> finite;
  for (std::size_t i = 1; i <= rs.rank(); ++i) finite.push_back(aff.simple_affine_root(i));
  EXPECT_EQ(assemble_WA(aff, normalize(rs, finite)) * finite_poincare(aff.finite()),
            assemble_WA(aff, normalize(rs, {})));
}

TEST_P(Battery, TranslationsMatchBall) {
  const AffineWeylGroup aff(build_root_system(GetParam()));
  const oracle::AlcoveModel model(aff.root_system());
  const auto f = translations_series(aff);
  EXPECT_TRUE(oracle::series_equal(f, model.translation_counts(16)));
  EXPECT_EQ(f.series(1), (std::vector<Rational>{1, 0}));
}

TEST_P(Battery, DescentPolynomialSpecializations) {
  const AffineWeylGroup aff(build_root_system(GetParam()));
  const oracle::AlcoveModel model(aff.root_system());
  const auto& rs = aff.root_system();
  const auto whole = assemble_WA(aff, normalize(rs, {}));
  for (const auto& raw : oracle::battery(aff)) {
    const auto A = normalize(rs, raw);
    const auto coeff = descent_polynomial(aff, A);
    EXPECT_EQ(coeff.size(), A.raw.size() + 1);
    EXPECT_EQ(evaluate_t(coeff, 0), assemble_WA(aff, A));
    EXPECT_EQ(evaluate_t(coeff, 1), whole);
    const auto stat = model.descent_statistic(A.raw, 10);
    for (std::size_t d = 0; d < coeff.size(); ++d) EXPECT_TRUE(oracle::series_equal(coeff[d], stat[d]));
  }
}

INSTANTIATE_TEST_SUITE_P(Types, Battery, ::testing::Values("A1", "A2", "C2", "G2"));

TEST(Translations, A1ClosedForm) {
  const AffineWeylGroup aff(build_root_system("A1"));
  EXPECT_EQ(translations_series(aff), RationalFunction(P({1, 0, 1}), P({1, 0, -1})));
}

TEST(DescentPolynomial, A1FullSimpleSet) {
  const AffineWeylGroup aff(build_root_system("A1"));
  const auto coeff = descent_polynomial(aff, normalize(aff.root_system(), parse_shorthand(aff, "s0,s1")));
  // 1 + 2tq/(1-q)
  ASSERT_EQ(coeff.size(), 3u);
  EXPECT_EQ(coeff[0], RationalFunction(1));
  EXPECT_EQ(coeff[1], RationalFunction(P({0, 2}), P({1, -1})));
  EXPECT_TRUE(coeff[2].is_zero());
}

TEST(DescentPolynomial, SizeGuard) {
  const AffineWeylGroup aff(build_root_system("A2"));
  std::vector<AffineRoot> many;
  for (Int k = 0; k < 7; ++k) many.push_back({{1, 0}, k});
  EXPECT_THROW(descent_polynomial(aff, normalize(aff.root_system(), many)), ValidationError);
}

TEST(AssembleWA, ThreadCountDoesNotMatter) {
  const AffineWeylGroup aff(build_root_system("C2"));
  const auto A = normalize(aff.root_system(), {{{1, 1}, 1}, {{0, 1}, 0}});
  EXPECT_EQ(assemble_WA(aff, A, 1), assemble_WA(aff, A, 4));
}

TEST(AssembleWA, LargerRank) {
  const AffineWeylGroup aff(build_root_system("A3"));
  const oracle::AlcoveModel model(aff.root_system());
  const std::vector<AffineRoot> raw{aff.simple_affine_root(0), {{1, 1, 0}, 1}};
  EXPECT_TRUE(oracle::series_equal(assemble_WA(aff, normalize(aff.root_system(), raw)), model.series(raw, 7)));
}

}  // namespace
