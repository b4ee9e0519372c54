#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace affpoin;

namespace {

TEST(Weyl, OrdersAndLengthDistribution) {
  const std::map<std::string, std::size_t> orders{{"A1", 2}, {"A2", 6},  {"A3", 24},  {"B2", 8},
                                                  {"C3", 48}, {"G2", 12}, {"D4", 192}, {"F4", 1152}};
  for (const auto& [t, n] : orders) {
    const WeylGroup w(build_root_system(t));
    EXPECT_EQ(w.order(), n) << t;
    EXPECT_EQ(w.poincare_coefficients(), oracle::weyl_word_bfs(w.root_system().cartan().matrix)) << t;
  }
}

TEST(Weyl, SimpleReflectionExamples) {
  const auto a1 = build_root_system("A1");
  EXPECT_EQ(weyl::simple_reflection(a1, 1).matrix, (IntMatrix{{-1}}));
  const auto a2 = build_root_system("A2");
  const auto s1 = weyl::simple_reflection(a2, 1);
  EXPECT_EQ(weyl::act(s1, IntVec{1, 0}), (IntVec{-1, 0}));
  EXPECT_EQ(weyl::act(s1, IntVec{0, 1}), (IntVec{1, 1}));
  EXPECT_EQ(weyl::multiply(a2, s1, s1).matrix, identity_matrix(2));
  EXPECT_THROW(weyl::simple_reflection(a2, 0), std::out_of_range);
  EXPECT_THROW(weyl::simple_reflection(a2, 3), std::out_of_range);
}

TEST(Weyl, LongestElement) {
  for (const char* t : {"A2", "B3", "G2", "D4"}) {
    const WeylGroup w(build_root_system(t));
    const auto np = static_cast<Int>(w.root_system().positive_roots().size());
    EXPECT_EQ(w.longest().length, np) << t;
    EXPECT_EQ(std::count_if(w.elements().begin(), w.elements().end(),
                            [&](const WeylElement& e) { return e.length == np; }),
              1);
  }
  const WeylGroup a2(build_root_system("A2"));
  const IntVec theta = a2.root_system().highest_root();
  EXPECT_EQ(weyl::act(a2.longest(), theta), (IntVec{-1, -1}));
}

TEST(Weyl, LengthProperties) {
  for (const char* t : {"A3", "B3", "G2", "C2"}) {
    const WeylGroup w(build_root_system(t));
    const auto& rs = w.root_system();
    for (const auto& e : w.elements()) {
      EXPECT_EQ(e.length, weyl::length(rs, e));
      EXPECT_EQ(w.inverse(e).length, e.length);
      EXPECT_EQ(w.multiply(e, w.inverse(e)), w.identity());
      for (std::size_t i = 1; i <= rs.rank(); ++i) {
        const Int d = w.multiply(e, weyl::simple_reflection(rs, i)).length - e.length;
        EXPECT_TRUE(d == 1 || d == -1);
      }
      for (const auto& r : rs.roots()) {
        EXPECT_TRUE(rs.is_root(weyl::act(e, r)));
        EXPECT_EQ(rs.form(weyl::act(e, r), weyl::act(e, r)), rs.form(r, r));
      }
    }
  }
}

TEST(Weyl, ActionExamples) {
  const auto a1 = build_root_system("A1");
  const auto s1 = weyl::simple_reflection(a1, 1);
  Vector rho_minus = a1.rho();
  rho_minus[0] -= 1;
  EXPECT_EQ(weyl::act(s1, a1.rho()), rho_minus);
  const auto a2 = build_root_system("A2");
  const auto w = weyl::multiply(a2, weyl::simple_reflection(a2, 1), weyl::simple_reflection(a2, 2));
  EXPECT_EQ(w.length, 2);
}

TEST(Weyl, ReflectionOfRoot) {
  const WeylGroup w(build_root_system("B3"));
  const auto& rs = w.root_system();
  for (const auto& b : rs.positive_roots()) {
    const auto s = weyl::reflection(rs, b);
    EXPECT_EQ(weyl::act(s, b), [&] {
      IntVec n = b;
      for (auto& c : n) c = -c;
      return n;
    }());
    EXPECT_EQ(s.length % 2, 1);
    EXPECT_EQ(w.multiply(s, s), w.identity());
  }
}

}  // namespace
