#pragma once

// Exact arithmetic primitives shared by every module.
//
// Small integer data (Cartan entries, root coordinates, Weyl matrices,
// coroot-lattice coordinates) lives in checked 64-bit integers; anything
// that can grow (rational forms, polynomial coefficients) uses GMP.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace affpoin {

using Int = std::int64_t;
using BigInt = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<Int>;
using IntMatrix = std::vector<IntVec>;  // row-major
using Vector = std::vector<Rational>;   // coordinates in the simple-root basis

// Raised when input data fails validation (bad label, non-root, ...).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in add");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in sub");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in mul");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

}  // namespace checked

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = checked::add(s, checked::mul(a[i], b[i]));
  return s;
}

inline IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  IntMatrix c(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j)
        c[i][j] = checked::add(c[i][j], checked::mul(a[i][l], b[l][j]));
    }
  return c;
}

inline IntVec matvec(const IntMatrix& a, const IntVec& v) {
  IntVec r(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], v);
  return r;
}

inline IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Int to_int(const BigInt& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return z.get_si();
}

inline Int to_int(const Rational& q) {
  if (q.get_den() != 1) throw std::domain_error("rational " + q.get_str() + " is not an integer");
  return to_int(BigInt(q.get_num()));
}

inline BigInt ceil(const Rational& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline BigInt floor(const Rational& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Canonical "p/q" (or "p") text form.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) throw ValidationError("not a rational number: '" + s + "'");
  q.canonicalize();
  return q;
}

inline Vector to_vector(const IntVec& v) {
  Vector r;
  r.reserve(v.size());
  for (Int x : v) r.emplace_back(static_cast<long>(x));
  return r;
}

inline IntVec to_intvec(const Vector& v) {
  IntVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(to_int(x));
  return r;
}

}  // namespace affpoin
