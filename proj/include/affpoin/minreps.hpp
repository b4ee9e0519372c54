#pragma once

// Reflection sets A and the subsets W^A = {sigma : l(sigma s_gamma) > l(sigma)
// for all gamma in A}, plus canonical generators of reflection subgroups.

#include "affpoin/affine.hpp"

#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affpoin {

struct ReflectionSet {
  std::vector<AffineRoot> raw;  // positive, deduplicated, in input order
  std::map<IntVec, Int> k;      // beta -> smallest level among raw entries
  std::vector<IntVec> F;        // support of k, in root order

  std::vector<AffineRoot> pruned() const {
    std::vector<AffineRoot> out;
    for (const auto& beta : F) out.push_back({beta, k.at(beta)});
    return out;
  }
  bool empty() const { return raw.empty(); }
};

inline std::string to_string(const AffineRoot& g) {
  std::ostringstream os;
  os << "{beta: [";
  for (std::size_t i = 0; i < g.beta.size(); ++i) os << (i ? "," : "") << g.beta[i];
  os << "], k: " << g.k << "}";
  return os.str();
}

// Replaces non-positive entries by their negatives, drops duplicates and
// keeps the smallest level per finite root.
inline ReflectionSet normalize(const RootSystem& rs, const std::vector<AffineRoot>& entries) {
  ReflectionSet out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    AffineRoot g = entries[i];
    if (g.beta.size() != rs.rank() || !rs.is_root(g.beta))
      throw ValidationError("reflection " + std::to_string(i) + " " + to_string(g) + ": beta is not a root of " +
                            rs.label());
    if (!g.is_positive()) g = g.negated();
    if (std::find(out.raw.begin(), out.raw.end(), g) == out.raw.end()) out.raw.push_back(g);
  }
  for (const auto& g : out.raw) {
    auto [it, inserted] = out.k.emplace(g.beta, g.k);
    if (!inserted) it->second = std::min(it->second, g.k);
  }
  for (const auto& beta : rs.roots())
    if (out.k.count(beta)) out.F.push_back(beta);
  return out;
}

// "s0,s1,..." naming simple affine reflections.
inline std::vector<AffineRoot> parse_shorthand(const AffineWeylGroup& aff, std::string_view text) {
  std::vector<AffineRoot> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string tok(text.substr(pos, end - pos));
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (!tok.empty()) {
      if (tok.size() < 2 || tok[0] != 's' || tok.find_first_not_of("0123456789", 1) != std::string::npos)
        throw ValidationError("bad reflection shorthand '" + tok + "'");
      const std::size_t i = std::stoul(tok.substr(1));
      if (i > aff.rank())
        throw ValidationError("reflection shorthand '" + tok + "' out of range s0..s" + std::to_string(aff.rank()));
      out.push_back(aff.simple_affine_root(i));
    }
    pos = end + 1;
  }
  return out;
}

// sigma(gamma) > 0 for every gamma in A.
inline bool is_member(const AffineWeylGroup& aff, const AffineElement& s, const ReflectionSet& A) {
  for (const auto& g : A.pruned())
    if (!aff.descent_test(s, g)) return false;
  return true;
}

// For sigma = x t_alpha: (alpha, beta) <= k_beta - [x beta < 0] on F.
inline bool is_member_by_inequalities(const AffineWeylGroup& aff, const AffineElement& s, const ReflectionSet& A) {
  const auto& rs = aff.root_system();
  for (const auto& beta : A.F) {
    const Int neg = RootSystem::is_positive(weyl::act(s.x, beta)) ? 0 : 1;
    if (rs.pairing(s.alpha, beta) > A.k.at(beta) - neg) return false;
  }
  return true;
}

// Coefficients c_0..c_N of the length generating function of W^A.
inline std::vector<Int> truncated_series(const AffineWeylGroup& aff, const ReflectionSet& A, Int N) {
  if (N < 0) throw ValidationError("truncation degree must be nonnegative");
  std::vector<Int> c(static_cast<std::size_t>(N) + 1, 0);
  for (const auto& e : aff.ball(N))
    if (is_member(aff, e.element, A)) ++c[static_cast<std::size_t>(e.length)];
  return c;
}

// (gamma, coroot(eta)) for affine roots; delta pairs to zero.
inline Int coroot_pairing(const RootSystem& rs, const AffineRoot& gamma, const AffineRoot& eta) {
  return rs.pairing(rs.coroot_coords(eta.beta), gamma.beta);
}

// s_eta(gamma) = gamma - (gamma, coroot(eta)) eta.
inline AffineRoot reflect(const RootSystem& rs, const AffineRoot& eta, const AffineRoot& gamma) {
  const Int c = coroot_pairing(rs, gamma, eta);
  AffineRoot r = gamma;
  for (std::size_t i = 0; i < r.beta.size(); ++i) r.beta[i] = checked::sub(r.beta[i], checked::mul(c, eta.beta[i]));
  r.k = checked::sub(r.k, checked::mul(c, eta.k));
  return r;
}

// ht(beta) + k h, with h the Coxeter number (the height of delta).
inline Int affine_height(const RootSystem& rs, const AffineRoot& g) {
  return checked::add(RootSystem::height(g.beta), checked::mul(g.k, rs.coxeter_number()));
}

class ReductionCapExceeded : public std::runtime_error {
public:
  ReductionCapExceeded(std::vector<AffineRoot> working, Int iterations)
      : std::runtime_error("pair reduction did not finish within " + std::to_string(iterations) + " iterations"),
        working_set(std::move(working)) {}
  std::vector<AffineRoot> working_set;
};

// Pair reduction to a generating set with pairwise (gamma_i, coroot gamma_j)
// <= 0.  The lowest-index violating pair is rewritten by conjugation; the
// member whose positive image has strictly smaller affine height is
// replaced (the first one when both or neither qualify).
inline std::vector<AffineRoot> canonical_generators(const RootSystem& rs, const std::vector<AffineRoot>& raw,
                                                    Int max_iter = 10000) {
  if (raw.empty()) throw ValidationError("canonical generators need a nonempty reflection list");
  std::vector<AffineRoot> work = normalize(rs, raw).raw;
  auto positive = [](AffineRoot g) { return g.is_positive() ? g : g.negated(); };
  for (Int iter = 0;; ++iter) {
    std::optional<std::pair<std::size_t, std::size_t>> bad;
    for (std::size_t i = 0; i < work.size() && !bad; ++i)
      for (std::size_t j = i + 1; j < work.size() && !bad; ++j)
        if (coroot_pairing(rs, work[i], work[j]) > 0) bad = {i, j};
    if (!bad) return work;
    if (iter >= max_iter) throw ReductionCapExceeded(work, max_iter);
    const auto [i, j] = *bad;
    const AffineRoot first = positive(reflect(rs, work[j], work[i]));
    const AffineRoot second = positive(reflect(rs, work[i], work[j]));
    if (affine_height(rs, first) >= affine_height(rs, work[i]) &&
        affine_height(rs, second) < affine_height(rs, work[j]))
      work[j] = second;
    else
      work[i] = first;
    std::vector<AffineRoot> dedup;
    for (const auto& g : work)
      if (std::find(dedup.begin(), dedup.end(), g) == dedup.end()) dedup.push_back(g);
    work = std::move(dedup);
  }
}

// Elements of the subgroup generated by the given reflections, reached by
// words whose prefixes all have length <= max_length.
inline std::vector<AffineElement> subgroup_ball(const AffineWeylGroup& aff, const std::vector<AffineRoot>& gens,
                                                Int max_length) {
  std::vector<AffineElement> refl;
  for (const auto& g : gens) refl.push_back(aff.reflection_element(g.is_positive() ? g : g.negated()));
  std::map<AffineElement, bool> seen{{aff.identity(), true}};
  std::vector<AffineElement> out{aff.identity()};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& r : refl) {
      AffineElement c = aff.compose(out[i], r);
      if (aff.length(c) <= max_length && seen.emplace(c, true).second) out.push_back(std::move(c));
    }
  return out;
}

// Counts by length of the sigma in ball(N) that no element of the
// subgroup ball shortens, i.e. the minimal representatives of sigma W'.
inline std::vector<Int> coset_minimal_series(const AffineWeylGroup& aff, const std::vector<AffineRoot>& gens,
                                             Int N) {
  Int longest = 0;
  for (const auto& g : gens) {
    const AffineRoot p = g.is_positive() ? g : g.negated();
    longest = std::max(longest, aff.length(aff.reflection_element(p)));
  }
  const auto sub = subgroup_ball(aff, gens, 2 * N + 2 * longest);
  std::vector<Int> c(static_cast<std::size_t>(N) + 1, 0);
  for (const auto& e : aff.ball(N)) {
    bool minimal = true;
    for (const auto& w : sub)
      if (aff.length(aff.compose(e.element, w)) < e.length) {
        minimal = false;
        break;
      }
    if (minimal) ++c[static_cast<std::size_t>(e.length)];
  }
  return c;
}

}  // namespace affpoin
