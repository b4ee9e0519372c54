#pragma once

// Rational Poincare series of W^A, of the translation subgroup, and the
// descent polynomial.
//
// Every sigma factors uniquely as x t_alpha with u t_alpha sending the
// fundamental alcove into the dominant chamber for exactly one u in W.
// Writing delta = u alpha = sum_j e_j coroot_j with e >= 0, the conditions
// on e are linear and l(sigma) = l(x u^{-1}) + (delta, 2 rho) - l(u), so
// W^A(q) is a sum over (x, u) of shifted lattice-point generating functions.

#include "affpoin/diophantine.hpp"
#include "affpoin/minreps.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

namespace affpoin {

// Smallest m_i >= 0 with m_i >= -(u theta_j, alpha_i) for every alcove
// vertex theta_j.
inline IntVec m_vector(const RootSystem& rs, const WeylElement& u) {
  IntVec m(rs.rank(), 0);
  for (const auto& theta : rs.alcove_vertices()) {
    const Vector p = rs.simple_pairings(weyl::act(u, theta));
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      const Int need = to_int(ceil(Rational(-p[i])));
      m[i] = std::max(m[i], need);
    }
  }
  return m;
}

// (coroot_j, gamma) for every j.
inline IntVec coroot_pairings(const RootSystem& rs, const IntVec& gamma) {
  IntVec r(rs.rank());
  for (std::size_t j = 0; j < rs.rank(); ++j) r[j] = dot(rs.cartan().matrix[j], gamma);
  return r;
}

// Translations T_u only: sum_j e_j (coroot_j, alpha_i) >= m_i(u).
inline DiophantineSystem translation_system(const RootSystem& rs, const WeylElement& u) {
  DiophantineSystem sys;
  sys.n = rs.rank();
  for (std::size_t i = 0; i < rs.rank(); ++i) sys.lower_matrix.push_back(coroot_pairings(rs, rs.simple_root(i)));
  sys.lower_rhs = m_vector(rs, u);
  sys.weight = IntVec(rs.rank(), 2);  // (coroot_j, 2 rho) = 2
  return sys;
}

// Adds, for each gamma with u^{-1} gamma in F,
//   sum_j e_j (coroot_j, gamma) <= k_{u^{-1} gamma} - [x u^{-1} gamma < 0].
inline DiophantineSystem build_system(const WeylGroup& w, const WeylElement& x, const WeylElement& u,
                                      const ReflectionSet& A) {
  const auto& rs = w.root_system();
  DiophantineSystem sys = translation_system(rs, u);
  const WeylElement& ui = w.inverse(u);
  for (const auto& gamma : rs.roots()) {
    const IntVec beta = weyl::act(ui, gamma);
    auto it = A.k.find(beta);
    if (it == A.k.end()) continue;
    const Int neg = RootSystem::is_positive(weyl::act(x, beta)) ? 0 : 1;
    sys.upper_matrix.push_back(coroot_pairings(rs, gamma));
    sys.upper_rhs.push_back(checked::sub(it->second, neg));
  }
  return sys;
}

namespace detail {

// Sums f(task) over tasks 0..count-1 on up to `threads` workers.
template <class F>
FactoredRational parallel_sum(std::size_t count, unsigned threads, F f) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::vector<FactoredRational> partial(threads);
  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned t) {
    try {
      CyclotomicSum sum;
      for (std::size_t i = t; i < count; i += threads) sum.add(f(i));
      partial[t] = sum.result();
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  FactoredRational total;
  for (const auto& p : partial) total = add_pair(total, p);
  return total;
}

inline RationalFunction finish_series(const FactoredRational& f) {
  if (f.qpow > 0) throw std::logic_error("assembled series has negative exponents");
  RationalFunction r = f.to_rational_function();
  for (const auto& c : r.series(30))
    if (c < 0 || c.get_den() != 1) throw std::logic_error("assembled series has a non-natural coefficient");
  return r;
}

}  // namespace detail

inline unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

// W^A(q) = sum_{x,u} q^{l(x u^{-1}) - l(u)} f_{x,u}(q).
inline RationalFunction assemble_WA(const AffineWeylGroup& aff, const ReflectionSet& A,
                                    unsigned threads = default_threads(), bool self_check = false) {
  const WeylGroup& w = aff.finite();
  const std::size_t order = w.order();
  const auto& el = w.elements();
  auto term = [&](std::size_t idx) {
    const WeylElement& x = el[idx / order];
    const WeylElement& u = el[idx % order];
    const FactoredRational f = solve_genfun_factored(build_system(w, x, u, A), self_check);
    return f.times_q_pow(w.multiply(x, w.inverse(u)).length - u.length);
  };
  return detail::finish_series(detail::parallel_sum(order * order, threads, term));
}

// Generating function of the translations t_alpha by length.
inline RationalFunction translations_series(const AffineWeylGroup& aff, unsigned threads = default_threads(),
                                            bool self_check = false) {
  const WeylGroup& w = aff.finite();
  auto term = [&](std::size_t idx) {
    return solve_genfun_factored(translation_system(w.root_system(), w.elements()[idx]), self_check);
  };
  return detail::finish_series(detail::parallel_sum(w.order(), threads, term));
}

// Finite Poincare polynomial W(q).
inline RationalFunction finite_poincare(const WeylGroup& w) {
  std::vector<Rational> c;
  for (Int v : w.poincare_coefficients()) c.emplace_back(static_cast<long>(v));
  return RationalFunction(Polynomial(std::move(c)));
}

// Coefficients (by power of t) of
//   sum_{B subset A} t^{|B|} (1 - t)^{|A \ B|} W^{A \ B}(q)
// over the deduplicated input reflections.
inline std::vector<RationalFunction> descent_polynomial(const AffineWeylGroup& aff, const ReflectionSet& A,
                                                        std::size_t max_size = 6,
                                                        unsigned threads = default_threads()) {
  const std::size_t a = A.raw.size();
  if (a > max_size)
    throw ValidationError("descent polynomial needs 2^" + std::to_string(a) + " subsets; limit is |A| <= " +
                          std::to_string(max_size));
  const auto& rs = aff.root_system();
  std::vector<RationalFunction> coeff(a + 1);
  std::map<std::vector<AffineRoot>, RationalFunction> memo;
  for (std::size_t mask = 0; mask < (std::size_t{1} << a); ++mask) {
    // mask marks B; the complement C = A \ B defines W^C.
    std::vector<AffineRoot> complement;
    std::size_t b = 0;
    for (std::size_t i = 0; i < a; ++i) {
      if (mask >> i & 1) ++b;
      else complement.push_back(A.raw[i]);
    }
    const ReflectionSet C = normalize(rs, complement);
    const auto key = C.pruned();
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, assemble_WA(aff, C, threads)).first;
    // t^b (1 - t)^c = sum_i binom(c, i) (-1)^i t^{b + i}
    const std::size_t c = a - b;
    long binom = 1;
    for (std::size_t i = 0; i <= c; ++i) {
      const long sign = i % 2 ? -1 : 1;
      coeff[b + i] = coeff[b + i] + it->second * RationalFunction(Polynomial(Rational(sign * binom)));
      binom = binom * static_cast<long>(c - i) / static_cast<long>(i + 1);
    }
  }
  return coeff;
}

// sum_i coeff_i t^i at a rational t.
inline RationalFunction evaluate_t(const std::vector<RationalFunction>& coeff, const Rational& t) {
  RationalFunction r;
  Rational p = 1;
  for (const auto& c : coeff) {
    r = r + c * RationalFunction(Polynomial(p));
    p *= t;
  }
  return r;
}

}  // namespace affpoin
