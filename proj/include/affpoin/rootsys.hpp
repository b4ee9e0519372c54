#pragma once

// Finite crystallographic root systems in exact arithmetic.
//
// Conventions: the Cartan matrix is a_ij = (coroot_i, alpha_j), so that
// s_i(alpha_j) = alpha_j - a_ij alpha_i.  The invariant form is normalized
// so that long roots have squared length 2.  Vectors are coordinate lists
// in the simple-root basis; coroot-lattice elements are integer lists in
// the simple-coroot basis.

#include "affpoin/arith.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affpoin {

struct CartanDatum {
  std::string label;  // e.g. "A2", "G2", or "custom"
  IntMatrix matrix;
  std::vector<Rational> symmetrizer;  // d_i = (alpha_i, alpha_i) / 2

  std::size_t rank() const { return matrix.size(); }
};

namespace detail {

inline void link(IntMatrix& m, std::size_t i, std::size_t j, Int aij = -1, Int aji = -1) {
  m[i][j] = aij;
  m[j][i] = aji;
}

inline IntMatrix type_a(std::size_t n) {
  IntMatrix m = identity_matrix(n);
  for (auto& row : m) for (auto& x : row) x *= 2;
  for (std::size_t i = 0; i + 1 < n; ++i) link(m, i, i + 1);
  return m;
}

// Builds the symmetrizer d with d_i a_ij = d_j a_ji, scaled so max d_i = 1.
// Throws if the matrix is not symmetrizable or its diagram is disconnected.
inline std::vector<Rational> symmetrize(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> todo;
  d[0] = 1;
  seen[0] = true;
  todo.push(0);
  while (!todo.empty()) {
    const std::size_t i = todo.front();
    todo.pop();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0) continue;
      Rational dj = d[i] * Rational(static_cast<long>(a[i][j]), 1) /
                    Rational(static_cast<long>(a[j][i]), 1);
      dj.canonicalize();
      if (!seen[j]) {
        seen[j] = true;
        d[j] = dj;
        todo.push(j);
      } else if (d[j] != dj) {
        throw ValidationError("Cartan matrix is not symmetrizable");
      }
    }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw ValidationError("Cartan matrix is reducible (Dynkin diagram disconnected)");
  const Rational top = *std::max_element(d.begin(), d.end());
  for (auto& x : d) x /= top;
  return d;
}

}  // namespace detail

// Canonical Cartan matrices (Bourbaki numbering, 0-based storage).
inline IntMatrix canonical_cartan_matrix(char family, std::size_t n) {
  using detail::link;
  switch (family) {
    case 'A':
      if (n < 1) break;
      return detail::type_a(n);
    case 'B': {
      if (n < 2) break;
      IntMatrix m = detail::type_a(n);
      link(m, n - 2, n - 1, -1, -2);  // alpha_n short
      return m;
    }
    case 'C': {
      if (n < 2) break;
      IntMatrix m = detail::type_a(n);
      link(m, n - 2, n - 1, -2, -1);  // alpha_n long
      return m;
    }
    case 'D': {
      if (n < 4) break;
      IntMatrix m = detail::type_a(n);
      m[n - 2][n - 1] = m[n - 1][n - 2] = 0;
      link(m, n - 3, n - 1);
      return m;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      IntMatrix m = identity_matrix(n);
      for (auto& row : m) for (auto& x : row) x *= 2;
      link(m, 0, 2);
      link(m, 1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(m, i, i + 1);
      return m;
    }
    case 'F': {
      if (n != 4) break;
      IntMatrix m = detail::type_a(4);
      link(m, 1, 2, -1, -2);  // alpha_1, alpha_2 long
      return m;
    }
    case 'G': {
      if (n != 2) break;
      return {{2, -3}, {-1, 2}};  // alpha_1 short
    }
    default:
      break;
  }
  throw ValidationError("unsupported root system type " + std::string(1, family) +
                        std::to_string(n));
}

// Validates a Cartan matrix and computes its symmetrizer.  Positive
// definiteness of the symmetrized form is checked by build_root_system.
inline CartanDatum cartan_from_matrix(IntMatrix m, std::string label = "custom") {
  const std::size_t n = m.size();
  if (n == 0) throw ValidationError("Cartan matrix is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw ValidationError("Cartan matrix is not square");
    if (m[i][i] != 2) throw ValidationError("Cartan matrix diagonal entries must be 2");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (m[i][j] > 0) throw ValidationError("Cartan matrix off-diagonal entries must be <= 0");
      if ((m[i][j] == 0) != (m[j][i] == 0))
        throw ValidationError("Cartan matrix violates a_ij = 0 <=> a_ji = 0");
    }
  CartanDatum c{std::move(label), std::move(m), {}};
  c.symmetrizer = detail::symmetrize(c.matrix);
  return c;
}

inline CartanDatum cartan_from_label(std::string_view label) {
  if (label.size() < 2 || !std::isupper(static_cast<unsigned char>(label[0])))
    throw ValidationError("bad root system label '" + std::string(label) + "'");
  std::size_t n = 0;
  for (char ch : label.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ValidationError("bad root system label '" + std::string(label) + "'");
    n = n * 10 + static_cast<std::size_t>(ch - '0');
    if (n > 64) throw ValidationError("rank too large in '" + std::string(label) + "'");
  }
  return cartan_from_matrix(canonical_cartan_matrix(label[0], n), std::string(label));
}

class RootSystem;
RootSystem build_root_system(const CartanDatum& cartan);

// Immutable after construction.
class RootSystem {
public:
  const CartanDatum& cartan() const { return cartan_; }
  std::size_t rank() const { return cartan_.rank(); }
  const std::string& label() const { return cartan_.label; }

  // Positive roots ordered by height, then lexicographically.
  const std::vector<IntVec>& positive_roots() const { return positive_; }
  // Positive roots followed by their negatives in the same order.
  const std::vector<IntVec>& roots() const { return roots_; }

  const IntVec& highest_root() const { return highest_; }
  const IntVec& marks() const { return highest_; }
  const Vector& rho() const { return rho_; }
  const std::vector<Vector>& fundamental_coweights() const { return coweights_; }
  const std::vector<Vector>& fundamental_weights() const { return weights_; }
  const std::vector<Vector>& alcove_vertices() const { return vertices_; }
  // Coxeter number: height of the highest root plus one (the height of delta).
  Int coxeter_number() const { return height(highest_) + 1; }

  IntVec simple_root(std::size_t i) const {
    IntVec v(rank(), 0);
    v.at(i) = 1;
    return v;
  }

  bool is_root(const IntVec& v) const { return index_.count(v) != 0; }

  // Index into roots(); throws for non-roots.
  std::size_t root_index(const IntVec& v) const {
    auto it = index_.find(v);
    if (it == index_.end()) throw ValidationError("not a root of " + label());
    return it->second;
  }

  static bool is_positive(const IntVec& root) {
    for (Int c : root)
      if (c != 0) return c > 0;
    return false;
  }

  static Int height(const IntVec& v) {
    Int h = 0;
    for (Int c : v) h = checked::add(h, c);
    return h;
  }

  Rational form(const Vector& v, const Vector& w) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (v[i] == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j)
        if (w[j] != 0) s += v[i] * gram_[i][j] * w[j];
    }
    return s;
  }

  Rational form(const IntVec& v, const IntVec& w) const { return form(to_vector(v), to_vector(w)); }

  // (v, alpha_i) for every simple root.
  Vector simple_pairings(const Vector& v) const {
    Vector r(rank(), Rational(0));
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j)
        if (v[j] != 0) r[i] += v[j] * gram_[j][i];
    return r;
  }

  // Closed fundamental chamber test: (v, alpha_i) >= 0 for all i.
  bool is_dominant(const Vector& v) const {
    for (const auto& p : simple_pairings(v))
      if (p < 0) return false;
    return true;
  }

  // The coroot 2 beta / (beta, beta) in the simple-root basis.
  Vector coroot(const IntVec& beta) const {
    const Rational len = form(beta, beta);
    Vector r(rank());
    for (std::size_t i = 0; i < rank(); ++i) r[i] = Rational(2 * beta[i]) / len;
    return r;
  }

  // The coroot of beta as an integer vector in the simple-coroot basis.
  IntVec coroot_coords(const IntVec& beta) const { return coroot_lattice_coords(coroot(beta)); }

  // Simple-root coordinates of sum_j e_j coroot_j.
  Vector coroot_to_root(const IntVec& e) const {
    Vector r(rank());
    for (std::size_t i = 0; i < rank(); ++i)
      r[i] = Rational(static_cast<long>(e[i])) / cartan_.symmetrizer[i];
    return r;
  }

  // Inverse of coroot_to_root; throws if v is not in the coroot lattice.
  IntVec coroot_lattice_coords(const Vector& v) const {
    IntVec e(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
      Rational c = v[i] * cartan_.symmetrizer[i];
      e[i] = to_int(c);
    }
    return e;
  }

  // (alpha, beta) for alpha in the coroot lattice (coroot coordinates) and
  // beta in the root lattice (root coordinates); always an integer.
  Int pairing(const IntVec& coroot_coords, const IntVec& root_coords) const {
    Int s = 0;
    for (std::size_t j = 0; j < rank(); ++j) {
      if (coroot_coords[j] == 0) continue;
      s = checked::add(s, checked::mul(coroot_coords[j], dot(cartan_.matrix[j], root_coords)));
    }
    return s;
  }

  const std::vector<Vector>& gram() const { return gram_; }
  const std::vector<Vector>& gram_inverse() const { return gram_inv_; }

private:
  friend RootSystem build_root_system(const CartanDatum& cartan);

  CartanDatum cartan_;
  std::vector<Vector> gram_, gram_inv_;
  std::vector<IntVec> positive_, roots_;
  std::map<IntVec, std::size_t> index_;
  IntVec highest_;
  Vector rho_;
  std::vector<Vector> coweights_, weights_, vertices_;
};

namespace detail {

// Gauss-Jordan inverse; throws on a non-positive pivot, which for a
// symmetric matrix means it is not positive definite.
inline std::vector<Vector> positive_definite_inverse(std::vector<Vector> a) {
  const std::size_t n = a.size();
  std::vector<Vector> inv(n, Vector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[c][c] <= 0)
      throw ValidationError("Cartan matrix is not of finite type (form not positive definite)");
    const Rational p = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= p;
      inv[c][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

}  // namespace detail

inline RootSystem build_root_system(const CartanDatum& cartan) {
  RootSystem rs;
  rs.cartan_ = cartan;
  if (rs.cartan_.symmetrizer.size() != cartan.rank())
    rs.cartan_.symmetrizer = detail::symmetrize(cartan.matrix);
  const std::size_t n = cartan.rank();
  const auto& a = cartan.matrix;
  const auto& d = rs.cartan_.symmetrizer;

  rs.gram_.assign(n, Vector(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rs.gram_[i][j] = d[i] * static_cast<long>(a[i][j]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (rs.gram_[i][j] != rs.gram_[j][i])
        throw ValidationError("symmetrizer does not symmetrize the Cartan matrix");
  rs.gram_inv_ = detail::positive_definite_inverse(rs.gram_);

  // Positive roots by height via root strings: for a positive root beta and
  // simple alpha_i, beta + alpha_i is a root iff p - (coroot_i, beta) > 0
  // where p is the length of the alpha_i-string below beta.
  std::map<IntVec, bool> known;
  std::vector<IntVec> level;
  for (std::size_t i = 0; i < n; ++i) {
    level.push_back(rs.simple_root(i));
    known[level.back()] = true;
  }
  while (!level.empty()) {
    rs.positive_.insert(rs.positive_.end(), level.begin(), level.end());
    std::vector<IntVec> next;
    for (const auto& beta : level) {
      for (std::size_t i = 0; i < n; ++i) {
        Int p = 0;
        IntVec down = beta;
        while (true) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        const Int q = p - dot(a[i], beta);
        if (q <= 0) continue;
        IntVec up = beta;
        up[i] += 1;
        if (known.emplace(up, true).second) next.push_back(up);
      }
    }
    std::sort(next.begin(), next.end());
    level = std::move(next);
    if (rs.positive_.size() > 100000) throw ValidationError("root system is not finite");
  }

  rs.roots_ = rs.positive_;
  for (const auto& r : rs.positive_) {
    IntVec neg(r);
    for (auto& c : neg) c = -c;
    rs.roots_.push_back(std::move(neg));
  }
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_[rs.roots_[i]] = i;

  rs.highest_ = *std::max_element(
      rs.positive_.begin(), rs.positive_.end(),
      [](const IntVec& x, const IntVec& y) { return RootSystem::height(x) < RootSystem::height(y); });

  rs.rho_.assign(n, Rational(0));
  for (const auto& r : rs.positive_)
    for (std::size_t i = 0; i < n; ++i) rs.rho_[i] += Rational(static_cast<long>(r[i])) / 2;

  for (std::size_t i = 0; i < n; ++i) {
    Vector cw = rs.gram_inv_[i];
    Vector w(n);
    Vector vert(n);
    for (std::size_t j = 0; j < n; ++j) {
      w[j] = cw[j] * d[i];
      vert[j] = cw[j] / static_cast<long>(rs.highest_[i]);
    }
    rs.coweights_.push_back(std::move(cw));
    rs.weights_.push_back(std::move(w));
    rs.vertices_.push_back(std::move(vert));
  }
  return rs;
}

inline RootSystem build_root_system(std::string_view label) {
  return build_root_system(cartan_from_label(label));
}

}  // namespace affpoin
