#pragma once

// The affine Weyl group W x| T(coroot lattice).
//
// An element is a pair (x, alpha) standing for sigma = x t_alpha.  On the
// linear reflection representation V + R delta it acts by
//   sigma(beta + k delta) = x beta + (k - (alpha, beta)) delta,
// and on points of V by the affine map p -> x(p + alpha).

#include "affpoin/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

namespace affpoin {

// beta + k delta with beta a finite root (simple-root coordinates).
struct AffineRoot {
  IntVec beta;
  Int k = 0;

  // beta > 0 and k >= 0, or beta < 0 and k >= 1.
  bool is_positive() const { return RootSystem::is_positive(beta) ? k >= 0 : k >= 1; }

  AffineRoot negated() const {
    AffineRoot r{beta, checked::neg(k)};
    for (auto& c : r.beta) c = checked::neg(c);
    return r;
  }

  friend bool operator==(const AffineRoot& a, const AffineRoot& b) {
    return a.k == b.k && a.beta == b.beta;
  }
  friend bool operator<(const AffineRoot& a, const AffineRoot& b) {
    return std::tie(a.beta, a.k) < std::tie(b.beta, b.k);
  }
};

struct AffineElement {
  WeylElement x;
  IntVec alpha;  // simple-coroot coordinates

  friend bool operator==(const AffineElement& a, const AffineElement& b) {
    return a.x == b.x && a.alpha == b.alpha;
  }
  // Dedup order: row-major x matrix, then alpha.
  friend bool operator<(const AffineElement& a, const AffineElement& b) {
    return std::tie(a.x.matrix, a.alpha) < std::tie(b.x.matrix, b.alpha);
  }
};

struct BallEntry {
  AffineElement element;
  Int length = 0;
};

class AffineWeylGroup {
public:
  explicit AffineWeylGroup(RootSystem rs) : w_(std::move(rs)) {
    const auto& r = root_system();
    generators_.push_back(reflection_element(simple_affine_root(0)));
    for (std::size_t i = 1; i <= r.rank(); ++i) generators_.push_back(reflection_element(simple_affine_root(i)));
  }

  const RootSystem& root_system() const { return w_.root_system(); }
  const WeylGroup& finite() const { return w_; }
  std::size_t rank() const { return root_system().rank(); }

  // alpha_0 = delta - highest root, alpha_i = alpha_i + 0 delta.
  AffineRoot simple_affine_root(std::size_t i) const {
    const auto& r = root_system();
    if (i > r.rank()) throw std::out_of_range("affine simple root index out of range");
    if (i == 0) {
      AffineRoot a0 = AffineRoot{r.highest_root(), 0}.negated();
      a0.k = 1;
      return a0;
    }
    return {r.simple_root(i - 1), 0};
  }

  // s_0, s_1, ..., s_n.
  const std::vector<AffineElement>& generators() const { return generators_; }

  AffineElement identity() const { return {w_.identity(), IntVec(rank(), 0)}; }
  AffineElement translation(IntVec alpha) const { return {w_.identity(), std::move(alpha)}; }
  AffineElement from_finite(const WeylElement& x) const { return {x, IntVec(rank(), 0)}; }

  // (x, a)(y, b) = (xy, y^{-1} a + b).
  AffineElement compose(const AffineElement& a, const AffineElement& b) const {
    IntVec alpha = weyl::act_coroot(root_system(), w_.inverse(b.x), a.alpha);
    for (std::size_t i = 0; i < alpha.size(); ++i) alpha[i] = checked::add(alpha[i], b.alpha[i]);
    return {w_.multiply(a.x, b.x), std::move(alpha)};
  }

  // (x t_a)^{-1} = x^{-1} t_{-x a}.
  AffineElement inverse(const AffineElement& s) const {
    IntVec alpha = weyl::act_coroot(root_system(), s.x, s.alpha);
    for (auto& c : alpha) c = checked::neg(c);
    return {w_.inverse(s.x), std::move(alpha)};
  }

  AffineRoot act(const AffineElement& s, const AffineRoot& g) const {
    return {weyl::act(s.x, g.beta), checked::sub(g.k, root_system().pairing(s.alpha, g.beta))};
  }

  // Affine action on a point of V.
  Vector act_on_point(const AffineElement& s, const Vector& p) const {
    Vector q = root_system().coroot_to_root(s.alpha);
    for (std::size_t i = 0; i < q.size(); ++i) q[i] += p[i];
    return weyl::act(s.x, q);
  }

  // Number of positive affine roots made negative.  For each finite root
  // beta, levels k >= k0 (k0 = 0 for beta > 0, else 1) map to level
  // k - m with m = (alpha, beta); the image is negative when k < m if
  // x beta > 0, and when k <= m if x beta < 0.
  Int length(const AffineElement& s) const {
    const auto& r = root_system();
    Int total = 0;
    for (const auto& beta : r.roots()) {
      const Int m = r.pairing(s.alpha, beta);
      const Int k0 = RootSystem::is_positive(beta) ? 0 : 1;
      const bool image_positive = RootSystem::is_positive(weyl::act(s.x, beta));
      const Int bad = image_positive ? m - k0 : m - k0 + 1;
      if (bad > 0) total = checked::add(total, bad);
    }
    return total;
  }

  // s_{beta + k delta} = (s_beta, k coroot(beta)).
  AffineElement reflection_element(const AffineRoot& g) const {
    const auto& r = root_system();
    if (!r.is_root(g.beta)) throw ValidationError("reflection_element: beta is not a root");
    if (!g.is_positive()) throw ValidationError("reflection_element: affine root is not positive");
    IntVec alpha = r.coroot_coords(g.beta);
    for (auto& c : alpha) c = checked::mul(c, g.k);
    return {weyl::reflection(r, g.beta), std::move(alpha)};
  }

  // sigma(gamma) > 0.
  bool descent_test(const AffineElement& s, const AffineRoot& g) const { return act(s, g).is_positive(); }

  // l(sigma s_gamma) > l(sigma).
  bool descent_test_by_length(const AffineElement& s, const AffineRoot& g) const {
    return length(compose(s, reflection_element(g))) > length(s);
  }

  // Every element of length <= n, breadth-first; each level sorted by the
  // dedup key.  The closed-form length is checked against the BFS depth.
  std::vector<BallEntry> ball(Int n) const {
    std::vector<BallEntry> out;
    std::map<AffineElement, bool> seen;
    std::vector<AffineElement> level{identity()};
    seen[level.front()] = true;
    for (Int depth = 0; depth <= n && !level.empty(); ++depth) {
      std::sort(level.begin(), level.end());
      std::vector<AffineElement> next;
      for (auto& e : level) {
        if (depth < n)
          for (const auto& s : generators_) {
            AffineElement c = compose(e, s);
            if (seen.emplace(c, true).second) next.push_back(std::move(c));
          }
        if (length(e) != depth) throw std::logic_error("closed-form length disagrees with BFS depth");
        out.push_back({std::move(e), depth});
      }
      level = std::move(next);
    }
    return out;
  }

  // The unique u in W with u sigma(A_f) in the closed chamber, i.e. u sigma
  // is a minimal right coset representative of W.
  WeylElement min_right_rep_part(const AffineElement& s) const {
    const auto& r = root_system();
    std::vector<Vector> points{Vector(rank(), Rational(0))};
    for (const auto& v : r.alcove_vertices()) points.push_back(v);
    for (auto& p : points) p = act_on_point(s, p);
    const WeylElement* found = nullptr;
    for (const auto& u : w_.elements()) {
      bool ok = true;
      for (const auto& p : points)
        if (!r.is_dominant(weyl::act(u, p))) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (found) throw std::logic_error("min_right_rep_part: more than one u found");
      found = &u;
    }
    if (!found) throw std::logic_error("min_right_rep_part: no u found");
    return *found;
  }

private:
  WeylGroup w_;
  std::vector<AffineElement> generators_;
};

}  // namespace affpoin
