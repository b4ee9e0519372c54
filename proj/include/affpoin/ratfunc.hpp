#pragma once

// Exact univariate polynomials and rational functions over Q.

#include "affpoin/arith.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace affpoin {

// Dense polynomial in q, ascending coefficients, no trailing zeros.
class Polynomial {
public:
  Polynomial() = default;
  Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(long constant) : c_{Rational(constant)} { trim(); }
  Polynomial(const Rational& constant) : c_{constant} { trim(); }

  static Polynomial monomial(std::size_t degree, const Rational& coeff = 1) {
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  // 1 - q^d.
  static Polynomial one_minus_q_pow(std::size_t d) {
    std::vector<Rational> c(d + 1, Rational(0));
    c[0] += 1;
    c[d] -= 1;
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rational& s) const {
    Polynomial r = *this;
    for (auto& x : r.c_) x *= s;
    r.trim();
    return r;
  }

  // Multiplication by q^k, k >= 0.
  Polynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> c(k, Rational(0));
    c.insert(c.end(), c_.begin(), c_.end());
    return Polynomial(std::move(c));
  }

  // Euclidean division: a = q b + r with deg r < deg b.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {Polynomial{}, a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
    const Rational& lead = b.c_.back();
    for (long i = static_cast<long>(quo.size()) - 1; i >= 0; --i) {
      const std::size_t top = static_cast<std::size_t>(i) + b.c_.size() - 1;
      if (rem[top] == 0) continue;
      Rational f = rem[top] / lead;
      quo[static_cast<std::size_t>(i)] = f;
      for (std::size_t j = 0; j < b.c_.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= f * b.c_[j];
    }
    return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
  }

  Polynomial monic() const { return is_zero() ? *this : scaled(1 / leading()); }

  // Gcd over Q via the primitive remainder sequence in Z[q]; the result
  // is monic (or zero).
  static Polynomial gcd(Polynomial a, Polynomial b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<BigInt> x = a.primitive_integer(), y = b.primitive_integer();
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
      std::vector<BigInt> r = pseudo_remainder(x, y);
      make_primitive(r);
      x = std::move(y);
      y = std::move(r);
    }
    std::vector<Rational> c;
    for (const auto& v : x) c.emplace_back(v);
    return Polynomial(std::move(c)).monic();
  }

  // Integer coefficients with content 1 and positive leading coefficient.
  std::vector<BigInt> primitive_integer() const {
    BigInt l = 1;
    for (const auto& v : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    std::vector<BigInt> r;
    for (const auto& v : c_) r.emplace_back(BigInt(v * l));
    make_primitive(r);
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string(const std::string& var = "q") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      Rational a = c_[i];
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0) os << "-";
      first = false;
      if (a < 0) a = -a;
      if (i == 0 || a != 1) os << a.get_str();
      if (i >= 1) os << (i == 0 || a != 1 ? "*" : "") << var;
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  static void make_primitive(std::vector<BigInt>& r) {
    while (!r.empty() && r.back() == 0) r.pop_back();
    if (r.empty()) return;
    BigInt g = 0;
    for (const auto& v : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (r.back() < 0) g = -g;
    for (auto& v : r) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }

  // lc(b)^(deg a - deg b + 1) a mod b, computed in Z[q].
  static std::vector<BigInt> pseudo_remainder(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    const BigInt& lb = b.back();
    while (a.size() >= b.size()) {
      const BigInt la = a.back();
      const std::size_t shift = a.size() - b.size();
      for (auto& v : a) v *= lb;
      for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= la * b[j];
      a.pop_back();
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
  }

  std::vector<Rational> c_;
};

// num/den in lowest terms; den has constant term 1 when den(0) != 0, else
// den is monic.
class RationalFunction {
public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(Polynomial num) : num_(std::move(num)), den_(1) {}
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}
  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    reduce();
  }

  // Skips the gcd step; num and den must already be coprime.
  static RationalFunction from_coprime(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    RationalFunction f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    f.normalize();
    return f;
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const Polynomial g = Polynomial::gcd(a.den_, b.den_);
    const Polynomial ad = Polynomial::divmod(a.den_, g).first;
    const Polynomial bd = Polynomial::divmod(b.den_, g).first;
    return RationalFunction(a.num_ * bd + b.num_ * ad, a.den_ * bd);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("rational function division by zero");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  // Multiplication by q^k for any integer k.
  RationalFunction times_q_pow(long k) const {
    if (k >= 0) return RationalFunction(num_.shifted(static_cast<std::size_t>(k)), den_);
    return RationalFunction(num_, den_.shifted(static_cast<std::size_t>(-k)));
  }

  // Equality via cross-multiplication.
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  // Maclaurin coefficients c_0..c_n; requires den(0) != 0.
  std::vector<Rational> series(std::size_t n) const {
    const Rational d0 = den_.coeff(0);
    if (d0 == 0) throw std::domain_error("series expansion needs a nonzero constant denominator term");
    std::vector<Rational> out(n + 1, Rational(0));
    const auto& d = den_.coeffs();
    for (std::size_t k = 0; k <= n; ++k) {
      Rational s = num_.coeff(k);
      for (std::size_t j = 1; j < d.size() && j <= k; ++j)
        if (d[j] != 0) s -= d[j] * out[k - j];
      out[k] = s / d0;
    }
    return out;
  }

  Rational operator()(const Rational& x) const { return num_(x) / den_(x); }

  std::string to_string(const std::string& var = "q") const {
    if (den_ == Polynomial(1)) return num_.to_string(var);
    return "(" + num_.to_string(var) + ")/(" + den_.to_string(var) + ")";
  }

  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f) { return os << f.to_string(); }

private:
  void reduce() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Polynomial::divmod(num_, g).first;
      den_ = Polynomial::divmod(den_, g).first;
    }
    normalize();
  }

  void normalize() {
    if (num_.is_zero()) {
      den_ = Polynomial(1);
      return;
    }
    const Rational d0 = den_.coeff(0);
    const Rational s = d0 != 0 ? d0 : den_.leading();
    num_ = num_.scaled(1 / s);
    den_ = den_.scaled(1 / s);
  }

  Polynomial num_;
  Polynomial den_;
};

// Integer polynomials as plain coefficient vectors (ascending, trimmed);
// used where denominators are known to be products of q and cyclotomic
// polynomials, so that no rational gcds are needed.
namespace zpoly {

using ZPoly = std::vector<BigInt>;

inline void trim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  trim(c);
  return c;
}

inline void add_to(ZPoly& a, const ZPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
}

// Divides by a monic divisor; returns false (leaving a untouched) when the
// division is not exact.
inline bool divide_exact(ZPoly& a, const ZPoly& monic_divisor) {
  if (a.empty()) return true;
  const std::size_t m = monic_divisor.size();
  if (a.size() < m) return false;
  ZPoly rem = a;
  ZPoly quo(a.size() - m + 1, BigInt(0));
  for (std::size_t i = quo.size(); i-- > 0;) {
    const BigInt f = rem[i + m - 1];
    if (f == 0) continue;
    quo[i] = f;
    for (std::size_t j = 0; j < m; ++j)
      if (monic_divisor[j] != 0) mpz_submul(rem[i + j].get_mpz_t(), f.get_mpz_t(), monic_divisor[j].get_mpz_t());
  }
  for (std::size_t j = 0; j + 1 < m; ++j)
    if (rem[j] != 0) return false;
  trim(quo);
  a = std::move(quo);
  return true;
}

inline Polynomial to_polynomial(const ZPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& v : p) c.emplace_back(v);
  return Polynomial(std::move(c));
}

}  // namespace zpoly

// The k-th cyclotomic polynomial, k >= 1.
inline const zpoly::ZPoly& cyclotomic(long k) {
  static std::mutex mu;
  static std::map<long, zpoly::ZPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (long j = 1; j <= k; ++j) {
    if (cache.count(j)) continue;
    zpoly::ZPoly p(static_cast<std::size_t>(j) + 1, BigInt(0));  // q^j - 1
    p.front() = -1;
    p.back() = 1;
    for (long d = 1; d < j; ++d)
      if (j % d == 0 && !zpoly::divide_exact(p, cache.at(d)))
        throw std::logic_error("cyclotomic polynomial construction failed");
    cache.emplace(j, std::move(p));
  }
  return cache.at(k);
}

// num / (q^qpow * prod_k Phi_k^{e_k}) with an integer numerator.
struct FactoredRational {
  zpoly::ZPoly num;
  long qpow = 0;
  std::map<long, long> cyclo;

  // num / prod_i (1 - q^{d_i}), using 1 - q^d = -prod_{k | d} Phi_k.
  static FactoredRational over_one_minus_q_pows(zpoly::ZPoly num, const std::vector<long>& ds) {
    FactoredRational f;
    bool negate = false;
    for (long d : ds) {
      negate = !negate;
      for (long k = 1; k <= d; ++k)
        if (d % k == 0) ++f.cyclo[k];
    }
    if (negate)
      for (auto& v : num) v = -v;
    zpoly::trim(num);
    f.num = std::move(num);
    return f;
  }

  // Multiplication by q^k for any integer k.
  FactoredRational times_q_pow(long k) const {
    FactoredRational r = *this;
    if (k >= 0) {
      if (!r.num.empty()) r.num.insert(r.num.begin(), static_cast<std::size_t>(k), BigInt(0));
    } else {
      r.qpow -= k;
    }
    return r;
  }

  zpoly::ZPoly denominator() const {
    zpoly::ZPoly d(static_cast<std::size_t>(qpow) + 1, BigInt(0));
    d.back() = 1;
    for (const auto& [k, e] : cyclo)
      for (long i = 0; i < e; ++i) d = zpoly::mul(d, cyclotomic(k));
    return d;
  }

  // Cancels common factors; the denominator's only irreducible factors are
  // q and cyclotomic polynomials, so trial division suffices.
  void reduce() {
    if (num.empty()) {
      qpow = 0;
      cyclo.clear();
      return;
    }
    std::size_t zeros = 0;
    while (static_cast<long>(zeros) < qpow && num[zeros] == 0) ++zeros;
    num.erase(num.begin(), num.begin() + static_cast<long>(zeros));
    qpow -= static_cast<long>(zeros);
    for (auto it = cyclo.begin(); it != cyclo.end();) {
      while (it->second > 0 && zpoly::divide_exact(num, cyclotomic(it->first))) --it->second;
      it = it->second == 0 ? cyclo.erase(it) : std::next(it);
    }
  }

  RationalFunction to_rational_function() const {
    FactoredRational r = *this;
    r.reduce();
    return RationalFunction::from_coprime(zpoly::to_polynomial(r.num), zpoly::to_polynomial(r.denominator()));
  }
};

// a + b over lcm of the denominators, then reduced.
inline FactoredRational add_pair(const FactoredRational& a, const FactoredRational& b) {
  if (a.num.empty()) return b;
  if (b.num.empty()) return a;
  FactoredRational out;
  out.qpow = std::max(a.qpow, b.qpow);
  out.cyclo = a.cyclo;
  for (const auto& [k, e] : b.cyclo) out.cyclo[k] = std::max(out.cyclo[k], e);
  for (const FactoredRational* t : {&a, &b}) {
    zpoly::ZPoly c = t->num;
    c.insert(c.begin(), static_cast<std::size_t>(out.qpow - t->qpow), BigInt(0));
    for (const auto& [k, e] : out.cyclo) {
      auto have = t->cyclo.find(k);
      const long missing = e - (have == t->cyclo.end() ? 0 : have->second);
      for (long i = 0; i < missing; ++i) c = zpoly::mul(c, cyclotomic(k));
    }
    zpoly::add_to(out.num, c);
  }
  out.reduce();
  return out;
}

// Sums FactoredRational terms over their least common denominator.
class CyclotomicSum {
public:
  void add(FactoredRational f) {
    if (f.num.empty()) return;
    terms_.push_back(std::move(f));
  }

  // Terms sharing a denominator are merged first; the rest are added one
  // at a time, cancelling after each step so the running denominator stays
  // close to the reduced one.
  FactoredRational result() const {
    std::map<std::pair<long, std::map<long, long>>, zpoly::ZPoly> summed;
    for (const auto& t : terms_) zpoly::add_to(summed[{t.qpow, t.cyclo}], t.num);
    FactoredRational out;
    for (const auto& [key, num] : summed) {
      FactoredRational t;
      t.num = num;
      t.qpow = key.first;
      t.cyclo = key.second;
      t.reduce();
      out = add_pair(out, t);
    }
    return out;
  }

private:
  std::vector<FactoredRational> terms_;
};

// Sparse Laurent polynomial in q, used for the q^{l(x u^-1) - l(u)} prefactors.
class LaurentPolynomial {
public:
  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(long exponent, const Rational& c = 1) {
    LaurentPolynomial p;
    if (c != 0) p.terms_[exponent] = c;
    return p;
  }

  const std::map<long, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    for (const auto& [e, c] : o.terms_) {
      auto& slot = terms_[e];
      slot += c;
      if (slot == 0) terms_.erase(e);
    }
    return *this;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    LaurentPolynomial r;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r += monomial(ea + eb, ca * cb);
    return r;
  }

  // p(q) * f(q) as a rational function.
  RationalFunction times(const RationalFunction& f) const {
    if (is_zero() || f.is_zero()) return {};
    const long shift = min_exponent();
    std::vector<Rational> c(static_cast<std::size_t>(terms_.rbegin()->first - shift) + 1, Rational(0));
    for (const auto& [e, v] : terms_) c[static_cast<std::size_t>(e - shift)] = v;
    return (RationalFunction(Polynomial(std::move(c))) * f).times_q_pow(shift);
  }

private:
  std::map<long, Rational> terms_;
};


}  // namespace affpoin
