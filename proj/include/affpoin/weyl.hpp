#pragma once

// The finite Weyl group W of a root system.

#include "affpoin/rootsys.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affpoin {

// A Weyl group element as the integer matrix of its action on the simple
// roots: column j is the image of alpha_j.  The matrix is the canonical key.
struct WeylElement {
  IntMatrix matrix;
  Int length = 0;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix == b.matrix; }
  friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.matrix < b.matrix; }
};

namespace weyl {

// Inversion count #{alpha > 0 : w(alpha) < 0}.
inline Int inversion_count(const RootSystem& rs, const IntMatrix& m) {
  Int count = 0;
  for (const auto& r : rs.positive_roots())
    if (!RootSystem::is_positive(matvec(m, r))) ++count;
  return count;
}

inline WeylElement identity(const RootSystem& rs) { return {identity_matrix(rs.rank()), 0}; }

// s_i for 1 <= i <= rank.
inline WeylElement simple_reflection(const RootSystem& rs, std::size_t i) {
  if (i < 1 || i > rs.rank())
    throw std::out_of_range("simple reflection index " + std::to_string(i) + " out of range 1.." +
                            std::to_string(rs.rank()));
  const std::size_t k = i - 1;
  IntMatrix m = identity_matrix(rs.rank());
  for (std::size_t j = 0; j < rs.rank(); ++j) m[k][j] -= rs.cartan().matrix[k][j];
  return {std::move(m), 1};
}

// s_beta: v -> v - (v, coroot(beta)) beta, for any root beta.
inline WeylElement reflection(const RootSystem& rs, const IntVec& beta) {
  if (!rs.is_root(beta)) throw ValidationError("reflection requested for a non-root");
  const std::size_t n = rs.rank();
  const Vector cb = rs.coroot(beta);
  IntMatrix m = identity_matrix(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational c = 0;
    for (std::size_t i = 0; i < n; ++i) c += cb[i] * rs.gram()[i][j];  // (coroot, alpha_j)
    const Int cj = to_int(c);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = checked::sub(m[i][j], checked::mul(cj, beta[i]));
  }
  return {m, inversion_count(rs, m)};
}

inline WeylElement multiply(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  IntMatrix m = matmul(a.matrix, b.matrix);
  const Int len = inversion_count(rs, m);
  return {std::move(m), len};
}

// w^{-1} = G^{-1} w^T G, where G is the Gram matrix of the invariant form.
inline WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  const std::size_t n = rs.rank();
  const auto& g = rs.gram();
  const auto& gi = rs.gram_inverse();
  std::vector<Vector> tg(n, Vector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (w.matrix[k][i] != 0) tg[i][j] += static_cast<long>(w.matrix[k][i]) * g[k][j];
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < n; ++k) s += gi[i][k] * tg[k][j];
      m[i][j] = to_int(s);
    }
  return {std::move(m), w.length};
}

inline Int length(const RootSystem& rs, const WeylElement& w) { return inversion_count(rs, w.matrix); }

inline Vector act(const WeylElement& w, const Vector& v) {
  const std::size_t n = v.size();
  Vector r(n, Rational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w.matrix[i][j] != 0 && v[j] != 0) r[i] += static_cast<long>(w.matrix[i][j]) * v[j];
  return r;
}

inline IntVec act(const WeylElement& w, const IntVec& root) { return matvec(w.matrix, root); }

// Action on coroot-lattice coordinates: e -> D M D^{-1} e with D = diag(d).
inline IntVec act_coroot(const RootSystem& rs, const WeylElement& w, const IntVec& e) {
  return rs.coroot_lattice_coords(act(w, rs.coroot_to_root(e)));
}

// All of W, breadth-first by length; children by right multiplication by
// s_1..s_n in index order.  Throws if the order exceeds max_order.
inline std::vector<WeylElement> enumerate_group(const RootSystem& rs, std::size_t max_order = 2000000) {
  std::vector<WeylElement> gens;
  for (std::size_t i = 1; i <= rs.rank(); ++i) gens.push_back(simple_reflection(rs, i));
  std::vector<WeylElement> out;
  std::map<IntMatrix, bool> seen;
  std::deque<WeylElement> queue;
  queue.push_back(identity(rs));
  seen[queue.back().matrix] = true;
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    for (const auto& s : gens) {
      IntMatrix m = matmul(w.matrix, s.matrix);
      if (seen.emplace(m, true).second) queue.push_back({std::move(m), w.length + 1});
    }
    out.push_back(std::move(w));
    if (out.size() + queue.size() > max_order)
      throw ValidationError("Weyl group of " + rs.label() + " exceeds the enumeration limit");
  }
  return out;
}

}  // namespace weyl

// W together with its enumerated elements and per-element caches.
class WeylGroup {
public:
  explicit WeylGroup(RootSystem rs) : rs_(std::move(rs)) {
    elements_ = weyl::enumerate_group(rs_);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_[elements_[i].matrix] = i;
    inverse_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i)
      inverse_[i] = index_of(weyl::inverse(rs_, elements_[i]));
  }

  const RootSystem& root_system() const { return rs_; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  const WeylElement& identity() const { return elements_.front(); }
  const WeylElement& longest() const { return elements_.back(); }

  std::size_t index_of(const WeylElement& w) const {
    auto it = index_.find(w.matrix);
    if (it == index_.end()) throw std::logic_error("matrix is not an element of W");
    return it->second;
  }

  const WeylElement& inverse(const WeylElement& w) const { return elements_[inverse_[index_of(w)]]; }

  WeylElement multiply(const WeylElement& a, const WeylElement& b) const {
    return elements_[index_.at(matmul(a.matrix, b.matrix))];
  }

  // Poincare polynomial coefficients: count of elements of each length.
  std::vector<Int> poincare_coefficients() const {
    std::vector<Int> c(static_cast<std::size_t>(elements_.back().length) + 1, 0);
    for (const auto& w : elements_) ++c[static_cast<std::size_t>(w.length)];
    return c;
  }

private:
  RootSystem rs_;
  std::vector<WeylElement> elements_;
  std::map<IntMatrix, std::size_t> index_;
  std::vector<std::size_t> inverse_;
};

}  // namespace affpoin
