#pragma once

// Generating functions of nonnegative integer solutions of linear systems.
//
// For a system  L e >= l,  U e <= u,  e in Z^n_{>=0},  graded by h.e with
// h > 0, solve_genfun returns sum over solutions of q^{h.e} as an exact
// rational function.  The engine is MacMahon's Omega calculus: each
// constraint row c gets a marker lambda_c, the generating function
//   prod_j 1 / (1 - q^{h_j} prod_c lambda_c^{A_cj}) * prod_c lambda_c^{-b_c}
// is formed, and the markers are eliminated one at a time by Elliott's
// partial-fraction reduction
//   1/((1-A)(1-B)) = 1/(1-AB) * (1/(1-A) + 1/(1-B) - 1)
// until every denominator factor has lambda-exponents of a single sign,
// at which point the nonnegative part can be read off directly.

#include "affpoin/ratfunc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affpoin {

struct DiophantineSystem {
  std::size_t n = 0;
  IntMatrix lower_matrix;  // lower_matrix e >= lower_rhs
  IntVec lower_rhs;
  IntMatrix upper_matrix;  // upper_matrix e <= upper_rhs
  IntVec upper_rhs;
  IntVec weight;  // strictly positive

  void validate() const {
    if (weight.size() != n) throw ValidationError("weight vector has the wrong length");
    for (Int h : weight)
      if (h <= 0) throw ValidationError("weights must be strictly positive");
    if (lower_matrix.size() != lower_rhs.size() || upper_matrix.size() != upper_rhs.size())
      throw ValidationError("constraint matrix and right-hand side sizes differ");
    for (const auto& row : lower_matrix)
      if (row.size() != n) throw ValidationError("constraint row has the wrong length");
    for (const auto& row : upper_matrix)
      if (row.size() != n) throw ValidationError("constraint row has the wrong length");
  }

  bool satisfied_by(const IntVec& e) const {
    for (std::size_t i = 0; i < lower_matrix.size(); ++i)
      if (dot(lower_matrix[i], e) < lower_rhs[i]) return false;
    for (std::size_t i = 0; i < upper_matrix.size(); ++i)
      if (dot(upper_matrix[i], e) > upper_rhs[i]) return false;
    return true;
  }
};

// Counts solutions by degree up to max_degree by direct enumeration of the
// box h_j e_j <= max_degree.
inline std::vector<BigInt> lattice_count_by_degree(const DiophantineSystem& sys, Int max_degree) {
  sys.validate();
  std::vector<BigInt> counts(static_cast<std::size_t>(max_degree) + 1, BigInt(0));
  IntVec e(sys.n, 0);
  std::function<void(std::size_t, Int)> rec = [&](std::size_t j, Int deg) {
    if (j == sys.n) {
      if (sys.satisfied_by(e)) ++counts[static_cast<std::size_t>(deg)];
      return;
    }
    for (Int v = 0; deg + v * sys.weight[j] <= max_degree; ++v) {
      e[j] = v;
      rec(j + 1, deg + v * sys.weight[j]);
    }
    e[j] = 0;
  };
  rec(0, 0);
  return counts;
}

namespace omega {

// Exponent vector over (q, lambda_1, ..., lambda_m).
using Monomial = IntVec;
// Multiset of factor monomials m, standing for prod 1/(1 - m).
using Denominator = std::vector<Monomial>;
using Numerator = std::map<Monomial, BigInt>;
using Expression = std::map<Denominator, Numerator>;

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked::add(a[i], b[i]);
  return r;
}

inline Denominator normalized(Denominator d) {
  std::sort(d.begin(), d.end());
  return d;
}

// Splits prod 1/(1 - m) into a signed sum of products whose factors all
// have lambda_var exponents of one sign (or zero).  Terminates because each
// step lowers (#negative factors, #positive factors, sum |exponents|)
// lexicographically.
inline std::map<Denominator, BigInt> elliott_split(const Denominator& den, std::size_t var,
                                                   std::map<Denominator, std::map<Denominator, BigInt>>& memo) {
  if (auto it = memo.find(den); it != memo.end()) return it->second;
  std::size_t pos = den.size(), neg = den.size();
  for (std::size_t i = 0; i < den.size(); ++i) {
    if (den[i][var] > 0 && pos == den.size()) pos = i;
    if (den[i][var] < 0 && neg == den.size()) neg = i;
  }
  std::map<Denominator, BigInt> out;
  if (pos == den.size() || neg == den.size()) {
    out[den] = 1;
  } else {
    const Monomial ab = mono_mul(den[pos], den[neg]);
    Denominator rest;
    for (std::size_t i = 0; i < den.size(); ++i)
      if (i != pos && i != neg) rest.push_back(den[i]);
    auto add = [&](Denominator d, int sign) {
      for (auto& [k, c] : elliott_split(normalized(std::move(d)), var, memo)) {
        auto& slot = out[k];
        slot += sign * c;
        if (slot == 0) out.erase(k);
      }
    };
    Denominator t1 = rest, t2 = rest, t3 = rest;
    t1.push_back(den[pos]);
    t1.push_back(ab);
    t2.push_back(den[neg]);
    t2.push_back(ab);
    t3.push_back(ab);
    add(std::move(t1), 1);
    add(std::move(t2), 1);
    add(std::move(t3), -1);
  }
  memo[den] = out;
  return out;
}

inline void accumulate(Expression& expr, const Denominator& den, const Monomial& mono, const BigInt& c) {
  if (c == 0) return;
  auto& num = expr[den];
  auto& slot = num[mono];
  slot += c;
  if (slot == 0) {
    num.erase(mono);
    if (num.empty()) expr.erase(den);
  }
}

// Omega_{>=} in lambda_var of  mono / prod_{f in den} (1 - f), where the
// exponents of lambda_var in den share one sign.  Results have lambda_var
// set to 1.
inline void omega_uniform(const Denominator& den, const Monomial& mono, const BigInt& coeff,
                          std::size_t var, Expression& out) {
  std::vector<Monomial> pos, neg;
  Denominator free;
  for (const auto& f : den) {
    if (f[var] > 0) pos.push_back(f);
    else if (f[var] < 0) neg.push_back(f);
    else free.push_back(f);
  }
  auto strip = [var](Monomial m) {
    m[var] = 0;
    return m;
  };
  auto strip_den = [&](const Denominator& d) {
    Denominator r;
    for (const auto& f : d) r.push_back(strip(f));
    return normalized(std::move(r));
  };
  const Denominator free_den = strip_den(free);
  const Int s = mono[var];

  // Enumerates prod facs_i^{k_i} over tuples whose lambda_var exponent
  // s + sum k_i e_i satisfies keep(exp); facs exponents share a sign so
  // the walk is finite in the direction that leaves the kept region.
  auto walk = [&](const std::vector<Monomial>& facs, auto keep, const BigInt& c) {
    std::function<void(std::size_t, const Monomial&)> rec = [&](std::size_t i, const Monomial& cur) {
      if (i == facs.size()) {
        if (keep(cur[var])) accumulate(out, free_den, strip(cur), c);
        return;
      }
      Monomial m = cur;
      while (true) {
        rec(i + 1, m);
        m = mono_mul(m, facs[i]);
        // Exponents move monotonically; stop once no extension can satisfy keep.
        if (facs[i][var] > 0 && m[var] >= 0) break;
        if (facs[i][var] < 0 && m[var] < 0) break;
      }
    };
    rec(0, mono);
  };

  if (neg.empty()) {
    accumulate(out, strip_den(den), strip(mono), coeff);
    if (s < 0) walk(pos, [](Int e) { return e < 0; }, -coeff);
  } else {
    if (s < 0) return;
    walk(neg, [](Int e) { return e >= 0; }, coeff);
  }
}

inline Expression eliminate(const Expression& expr, std::size_t var) {
  Expression out;
  std::map<Denominator, std::map<Denominator, BigInt>> memo;
  for (const auto& [den, num] : expr) {
    const auto parts = elliott_split(den, var, memo);
    for (const auto& [d, c] : parts)
      for (const auto& [mono, coeff] : num) omega_uniform(d, mono, coeff * c, var, out);
  }
  return out;
}

}  // namespace omega

namespace detail {

// Primitive generators of the extreme rays of {x >= 0, row . x >= 0 for
// each row}, by the double description method.
inline std::vector<IntVec> recession_rays(const std::vector<IntVec>& rows, std::size_t n) {
  std::vector<IntVec> constraints;
  for (std::size_t j = 0; j < n; ++j) {
    IntVec c(n, 0);
    c[j] = 1;
    constraints.push_back(std::move(c));
  }
  constraints.insert(constraints.end(), rows.begin(), rows.end());

  std::vector<IntVec> current;
  for (std::size_t j = 0; j < n; ++j) current.push_back(constraints[j]);
  auto tight = [&](const IntVec& r, std::size_t upto) {
    std::vector<bool> z(upto);
    for (std::size_t i = 0; i < upto; ++i) z[i] = dot(constraints[i], r) == 0;
    return z;
  };
  for (std::size_t c = n; c < constraints.size(); ++c) {
    const IntVec& a = constraints[c];
    std::vector<IntVec> pos, neg, next;
    for (const auto& r : current) {
      const Int v = dot(a, r);
      if (v > 0) pos.push_back(r);
      else if (v < 0) neg.push_back(r);
      if (v >= 0) next.push_back(r);
    }
    std::vector<std::vector<bool>> z;
    for (const auto& r : current) z.push_back(tight(r, c));
    for (const auto& p : pos)
      for (const auto& m : neg) {
        const auto zp = tight(p, c), zm = tight(m, c);
        std::vector<bool> common(c);
        for (std::size_t i = 0; i < c; ++i) common[i] = zp[i] && zm[i];
        bool adjacent = true;
        for (std::size_t k = 0; k < current.size() && adjacent; ++k) {
          if (current[k] == p || current[k] == m) continue;
          bool contains = true;
          for (std::size_t i = 0; i < c && contains; ++i)
            if (common[i] && !z[k][i]) contains = false;
          if (contains) adjacent = false;
        }
        if (!adjacent) continue;
        const Int ap = dot(a, p), am = dot(a, m);
        IntVec r(n);
        Int g = 0;
        for (std::size_t i = 0; i < n; ++i) {
          r[i] = checked::sub(checked::mul(ap, m[i]), checked::mul(am, p[i]));
          g = std::gcd(g, r[i] < 0 ? -r[i] : r[i]);
        }
        if (g == 0) continue;
        for (auto& x : r) x /= g;
        if (std::find(next.begin(), next.end(), r) == next.end()) next.push_back(std::move(r));
      }
    current = std::move(next);
  }
  return current;
}

}  // namespace detail

// Exact generating function sum_{solutions e} q^{h.e}, with the
// denominator kept as q^a times a product of cyclotomic polynomials.
// With self_check the expansion is compared against direct enumeration up
// to check_degree and a mismatch throws std::logic_error.
inline FactoredRational solve_genfun_factored(const DiophantineSystem& sys, bool self_check = false,
                                              Int check_degree = 40) {
  sys.validate();
  // Rows normalized to  row . e >= rhs.
  std::map<IntVec, Int> rows;
  auto add_row = [&](IntVec row, Int rhs) {
    const bool all_zero = std::all_of(row.begin(), row.end(), [](Int x) { return x == 0; });
    const bool all_nonneg = std::all_of(row.begin(), row.end(), [](Int x) { return x >= 0; });
    if (all_nonneg && rhs <= 0) return true;  // implied by e >= 0
    if (all_zero) return false;               // 0 >= rhs > 0
    auto [it, inserted] = rows.emplace(std::move(row), rhs);
    if (!inserted) it->second = std::max(it->second, rhs);
    return true;
  };
  bool feasible = true;
  for (std::size_t i = 0; i < sys.lower_matrix.size(); ++i)
    feasible = add_row(sys.lower_matrix[i], sys.lower_rhs[i]) && feasible;
  for (std::size_t i = 0; i < sys.upper_matrix.size(); ++i) {
    IntVec row = sys.upper_matrix[i];
    for (auto& x : row) x = checked::neg(x);
    feasible = add_row(std::move(row), checked::neg(sys.upper_rhs[i])) && feasible;
  }

  FactoredRational factored;
  if (feasible) {
    const std::size_t m = rows.size();
    omega::Denominator den;
    omega::Monomial start(m + 1, 0);
    for (std::size_t j = 0; j < sys.n; ++j) {
      omega::Monomial f(m + 1, 0);
      f[0] = sys.weight[j];
      std::size_t c = 1;
      for (const auto& [row, rhs] : rows) f[c++] = row[j];
      den.push_back(std::move(f));
    }
    std::size_t c = 1;
    for (const auto& [row, rhs] : rows) start[c++] = checked::neg(rhs);

    omega::Expression expr;
    expr[omega::normalized(den)][start] = 1;
    for (std::size_t var = 1; var <= m; ++var) expr = omega::eliminate(expr, var);

    // The reduced denominator divides prod over recession rays r of
    // (1 - q^{h.r}); the numerator over that product has degree at most
    // deg D + max over terms of (deg numerator - deg denominator), so it is
    // read off from the exact series of the eliminated expression.
    std::vector<IntVec> row_list;
    for (const auto& [row, rhs] : rows) row_list.push_back(row);
    std::vector<long> ds;
    long bound = 0;
    for (const auto& r : detail::recession_rays(row_list, sys.n)) {
      ds.push_back(static_cast<long>(dot(sys.weight, r)));
      bound += ds.back();
    }
    long excess = 0;
    bool any = false;
    for (const auto& [d, num] : expr) {
      long dd = 0, dn = 0;
      for (const auto& f : d) dd += static_cast<long>(f[0]);
      for (const auto& [mono, coeff] : num) dn = std::max(dn, static_cast<long>(mono[0]));
      excess = any ? std::max(excess, dn - dd) : dn - dd;
      any = true;
    }
    zpoly::ZPoly numer;
    if (any && bound + excess >= 0) {
      const auto len = static_cast<std::size_t>(bound + excess) + 1;
      zpoly::ZPoly series(len, BigInt(0));
      for (const auto& [d, num] : expr) {
        zpoly::ZPoly t(len, BigInt(0));
        for (const auto& [mono, coeff] : num)
          if (static_cast<std::size_t>(mono[0]) < len) t[static_cast<std::size_t>(mono[0])] += coeff;
        for (const auto& f : d)
          for (std::size_t i = static_cast<std::size_t>(f[0]); i < len; ++i) t[i] += t[i - static_cast<std::size_t>(f[0])];
        for (std::size_t i = 0; i < len; ++i) series[i] += t[i];
      }
      for (long d : ds)
        for (std::size_t i = len; i-- > static_cast<std::size_t>(d);) series[i] -= series[i - static_cast<std::size_t>(d)];
      numer = std::move(series);
      zpoly::trim(numer);
    }
    factored = FactoredRational::over_one_minus_q_pows(std::move(numer), ds);
    factored.reduce();
  }
  RationalFunction result = factored.to_rational_function();

  if (self_check) {
    const auto brute = lattice_count_by_degree(sys, check_degree);
    const auto series = result.series(static_cast<std::size_t>(check_degree));
    for (std::size_t d = 0; d < brute.size(); ++d)
      if (series[d] != Rational(brute[d]))
        throw std::logic_error("solve_genfun self-check failed at degree " + std::to_string(d));
  }
  return factored;
}

inline RationalFunction solve_genfun(const DiophantineSystem& sys, bool self_check = false,
                                     Int check_degree = 40) {
  return solve_genfun_factored(sys, self_check, check_degree).to_rational_function();
}

}  // namespace affpoin
