#pragma once

// Batch command-line front end.  run() returns the process exit status:
// 0 success, 1 internal error, 2 invalid input, 3 verification mismatch, 4 reduction cap hit.

#include "affpoin/json_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace affpoin::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalid = 2, kMismatch = 3, kCap = 4 };

struct JobConfig {
  std::string command;
  std::string type;
  std::string cartan;
  std::string refl;
  Int N = 20;
  bool verify = false;
  std::string format = "text";
  Int max_iter = 10000;
  unsigned threads = default_threads();
  std::string eval_t;
};

struct Mismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline RootSystem root_system_of(const JobConfig& cfg) {
  if (cfg.type.empty() == cfg.cartan.empty()) throw ValidationError("give exactly one of --type and --cartan");
  if (!cfg.type.empty()) return build_root_system(cfg.type);
  return build_root_system(cartan_from_matrix(cartan_from_json(cfg.cartan)));
}

inline std::vector<AffineRoot> reflections_of(const AffineWeylGroup& aff, const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string::npos) return {};
  if (text[first] == '[' || text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ValidationError(std::string("bad reflection JSON: ") + e.what());
    }
    return reflections_from_json(j);
  }
  return parse_shorthand(aff, text);
}

inline std::string join(const std::vector<Int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

inline std::string join(const Polynomial& p) {
  std::string s;
  for (long i = 0; i <= std::max<long>(p.degree(), 0); ++i)
    s += (i ? "," : "") + to_string(p.coeff(static_cast<std::size_t>(i)));
  return s;
}

inline void compare(const std::string& what, const std::vector<Rational>& got, const std::vector<Int>& expected) {
  for (std::size_t d = 0; d < expected.size(); ++d)
    if (got[d] != Rational(static_cast<long>(expected[d])))
      throw Mismatch(what + ": mismatch at degree " + std::to_string(d) + ": computed " + to_string(got[d]) +
                     ", oracle " + std::to_string(expected[d]));
}

inline void print_rational(std::ostream& out, const JobConfig& cfg, const std::string& label, const RationalFunction& f,
                           const std::string& key) {
  if (cfg.format == "json") {
    out << Json{{"type", label}, {key, to_json(f)}}.dump() << "\n";
  } else {
    out << "type: " << label << "\n" << key << ": " << f << "\nnum: " << join(f.num()) << "\nden: " << join(f.den())
        << "\n";
  }
}

inline void cmd_series(std::ostream& out, const JobConfig& cfg, const AffineWeylGroup& aff, const ReflectionSet& A) {
  const auto c = truncated_series(aff, A, cfg.N);
  if (cfg.verify)
    compare("series", assemble_WA(aff, A, cfg.threads).series(static_cast<std::size_t>(cfg.N)), c);
  if (cfg.format == "json")
    out << Json{{"type", aff.root_system().label()}, {"N", cfg.N}, {"coefficients", c}}.dump() << "\n";
  else
    out << "type: " << aff.root_system().label() << "\nN: " << cfg.N << "\ncoefficients: " << join(c) << "\n";
}

inline void cmd_rational(std::ostream& out, const JobConfig& cfg, const AffineWeylGroup& aff, const ReflectionSet& A) {
  const auto f = assemble_WA(aff, A, cfg.threads);
  if (cfg.verify) compare("rational", f.series(static_cast<std::size_t>(cfg.N)), truncated_series(aff, A, cfg.N));
  print_rational(out, cfg, aff.root_system().label(), f, "rational");
}

inline void cmd_translations(std::ostream& out, const JobConfig& cfg, const AffineWeylGroup& aff) {
  const auto f = translations_series(aff, cfg.threads);
  if (cfg.verify) {
    std::vector<Int> c(static_cast<std::size_t>(cfg.N) + 1, 0);
    for (const auto& e : aff.ball(cfg.N))
      if (e.element.x == aff.finite().identity()) ++c[static_cast<std::size_t>(e.length)];
    compare("translations", f.series(static_cast<std::size_t>(cfg.N)), c);
  }
  print_rational(out, cfg, aff.root_system().label(), f, "rational");
}

inline void cmd_descent(std::ostream& out, const JobConfig& cfg, const AffineWeylGroup& aff, const ReflectionSet& A) {
  const auto coeff = descent_polynomial(aff, A, 6, cfg.threads);
  if (cfg.verify) {
    // Bivariate statistic sum q^l(w) t^des(w) over the ball.
    std::vector<std::vector<Int>> stat(coeff.size(), std::vector<Int>(static_cast<std::size_t>(cfg.N) + 1, 0));
    for (const auto& e : aff.ball(cfg.N)) {
      std::size_t des = 0;
      for (const auto& g : A.raw) des += aff.descent_test(e.element, g) ? 0 : 1;
      ++stat[des][static_cast<std::size_t>(e.length)];
    }
    for (std::size_t d = 0; d < coeff.size(); ++d)
      compare("descent t^" + std::to_string(d), coeff[d].series(static_cast<std::size_t>(cfg.N)), stat[d]);
  }
  const std::string& label = aff.root_system().label();
  if (!cfg.eval_t.empty()) {
    print_rational(out, cfg, label, evaluate_t(coeff, parse_rational(cfg.eval_t)), "rational");
    return;
  }
  if (cfg.format == "json") {
    out << Json{{"type", label}, {"descent", to_json(coeff)}}.dump() << "\n";
  } else {
    out << "type: " << label << "\n";
    for (std::size_t d = 0; d < coeff.size(); ++d) out << "t^" << d << ": " << coeff[d] << "\n";
  }
}

inline void cmd_canonical(std::ostream& out, const JobConfig& cfg, const AffineWeylGroup& aff,
                          const std::vector<AffineRoot>& raw) {
  const auto& rs = aff.root_system();
  const auto gens = canonical_generators(rs, raw, cfg.max_iter);
  if (cfg.verify) {
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (i != j && coroot_pairing(rs, gens[i], gens[j]) > 0)
          throw Mismatch("canonical: generators " + std::to_string(i) + " and " + std::to_string(j) +
                         " pair positively");
    const auto direct = coset_minimal_series(aff, raw, cfg.N);
    std::vector<Rational> got;
    for (Int v : truncated_series(aff, normalize(rs, gens), cfg.N)) got.emplace_back(static_cast<long>(v));
    compare("canonical", got, direct);
  }
  if (cfg.format == "json") {
    Json j = reflections_to_json(gens);
    j["type"] = rs.label();
    out << j.dump() << "\n";
  } else {
    out << "type: " << rs.label() << "\n";
    for (const auto& g : gens) out << "generator: " << to_json(g).dump() << "\n";
  }
}

inline void cmd_enumerate(std::ostream& out, const JobConfig& cfg, const AffineWeylGroup& aff) {
  const WeylGroup& w = aff.finite();
  if (cfg.format == "json") {
    Json els = Json::array();
    for (const auto& e : w.elements()) els.push_back(Json{{"matrix", e.matrix}, {"length", e.length}});
    out << Json{{"type", w.root_system().label()}, {"order", w.order()}, {"lengths", w.poincare_coefficients()},
                {"elements", els}}
               .dump()
        << "\n";
  } else {
    out << "type: " << w.root_system().label() << "\norder: " << w.order()
        << "\nlengths: " << join(w.poincare_coefficients()) << "\n";
  }
}

inline void dispatch(std::ostream& out, const JobConfig& cfg) {
  if (cfg.N < 0) throw ValidationError("--N must be nonnegative");
  if (cfg.format != "text" && cfg.format != "json") throw ValidationError("--format must be text or json");
  const AffineWeylGroup aff(root_system_of(cfg));
  const auto raw = reflections_of(aff, cfg.refl);
  const ReflectionSet A = normalize(aff.root_system(), raw);
  if (cfg.command == "series") cmd_series(out, cfg, aff, A);
  else if (cfg.command == "rational") cmd_rational(out, cfg, aff, A);
  else if (cfg.command == "translations") cmd_translations(out, cfg, aff);
  else if (cfg.command == "descent") cmd_descent(out, cfg, aff, A);
  else if (cfg.command == "canonical") cmd_canonical(out, cfg, aff, raw);
  else if (cfg.command == "enumerate") cmd_enumerate(out, cfg, aff);
  else throw ValidationError("unknown command '" + cfg.command + "'");
}

}  // namespace detail

// args excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Poincare series of descent-defined subsets of affine Weyl groups", "affpoin"};
  app.require_subcommand(1);
  JobConfig cfg;
  const std::vector<std::pair<std::string, std::string>> commands{
      {"series", "coefficients of W^A(q) to degree N by enumeration"},
      {"rational", "W^A(q) as a reduced rational function"},
      {"translations", "length generating function of the translations"},
      {"descent", "descent polynomial sum_B t^|B| (1-t)^|A-B| W^(A-B)(q)"},
      {"canonical", "canonical generators of the reflection subgroup"},
      {"enumerate", "the finite Weyl group by length"}};
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--type", cfg.type, "type label, e.g. A2, C2, G2");
    sub->add_option("--cartan", cfg.cartan, "Cartan matrix as a JSON array");
    sub->add_option("--refl", cfg.refl, "reflections: JSON or shorthand s0,s1,...");
    sub->add_option("--N", cfg.N, "truncation degree")->capture_default_str();
    sub->add_flag("--verify", cfg.verify, "check against enumeration oracles");
    sub->add_option("--format", cfg.format, "text or json")->capture_default_str();
    sub->add_option("--max-iter", cfg.max_iter, "pair reduction cap")->capture_default_str();
    sub->add_option("--threads", cfg.threads, "worker threads");
    sub->add_option("--eval-t", cfg.eval_t, "evaluate the descent polynomial at this t");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
  try {
    detail::dispatch(out, cfg);
    return kOk;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const Mismatch& e) {
    err << "verification failed: " << e.what() << "\n";
    return kMismatch;
  } catch (const ReductionCapExceeded& e) {
    err << "error: " << e.what() << "\nworking set: " << reflections_to_json(e.working_set).dump() << "\n";
    return kCap;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace affpoin::cli
