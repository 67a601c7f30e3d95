#pragma once

// Command-line front end. run() takes the arguments after the program name so
// tests can drive it without spawning a process.
//
//   fockrep cocycle -x EXPR -y EXPR [--method sums|oracle|closed|check]
//   fockrep table   [--exp a:b] [--exp2 a:b] [--x-exp ..] [--y-exp ..] [--sum K]
//   fockrep apply   -e EXPR (--vacuum | --vector JSON|@file) [--repeat K]
//   fockrep grade   --vector JSON|@file
//   fockrep verify  SUITE [--max K] [--seed S] [--samples N]
//
// Instance flags on every subcommand: --algebra --n --q --rho --j-cut --format.
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "fockrep/cocycle.hpp"
#include "fockrep/instances.hpp"
#include "fockrep/io.hpp"
#include "fockrep/parse.hpp"
#include "fockrep/verify.hpp"

namespace fockrep::cli {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
};

inline Range parse_range(const std::string& text, const std::string& flag) {
  auto colon = text.find(':');
  try {
    std::size_t u1 = 0, u2 = 0;
    if (colon == std::string::npos) {
      std::int64_t v = std::stoll(text, &u1);
      if (u1 != text.size()) throw std::invalid_argument(text);
      return {v, v};
    }
    std::string a = text.substr(0, colon), b = text.substr(colon + 1);
    Range r{std::stoll(a, &u1), std::stoll(b, &u2)};
    if (u1 != a.size() || u2 != b.size() || r.lo > r.hi) throw std::invalid_argument(text);
    return r;
  } catch (const std::logic_error&) {
    throw UsageError(flag + ": malformed range '" + text + "' (expected lo:hi with lo <= hi)");
  }
}

struct InstanceFlags {
  std::string algebra = "witt";
  int n = 1;
  std::string q = "1";
  std::string rho = "bose";
  std::int64_t j_cut = 0;
  std::string format = "json";

  void attach(CLI::App* app) {
    app->add_option("--algebra", algebra, "gl | loop | witt | qtorus | weyl")->capture_default_str();
    app->add_option("--n", n, "matrix size N")->capture_default_str();
    app->add_option("--q", q, "quantum torus parameter p/q")->capture_default_str();
    app->add_option("--rho", rho, "bose | fermi")->capture_default_str();
    app->add_option("--j-cut", j_cut, "cut offset: J = {n >= k}, or J = {1..k} for gl")->capture_default_str();
    app->add_option("--format", format, "json | csv")->capture_default_str();
  }

  [[nodiscard]] Realization realization() const {
    InstanceConfig cfg;
    if (algebra == "gl") cfg.kind = AlgebraKind::gl;
    else if (algebra == "loop") cfg.kind = AlgebraKind::loop;
    else if (algebra == "witt") cfg.kind = AlgebraKind::witt;
    else if (algebra == "qtorus") cfg.kind = AlgebraKind::qtorus;
    else if (algebra == "weyl") cfg.kind = AlgebraKind::weyl;
    else throw UsageError("--algebra: unknown algebra '" + algebra + "'");
    if (rho == "bose") cfg.statistics = Statistics::bose;
    else if (rho == "fermi") cfg.statistics = Statistics::fermi;
    else throw UsageError("--rho: expected 'bose' or 'fermi', got '" + rho + "'");
    if (format != "json" && format != "csv") throw UsageError("--format: expected 'json' or 'csv', got '" + format + "'");
    try {
      cfg.q = Scalar::parse(q);
    } catch (const std::invalid_argument&) {
      throw UsageError("--q: malformed rational '" + q + "'");
    }
    cfg.n = n;
    cfg.j_cut = j_cut;
    try {
      return build(cfg);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
};

inline std::string read_vector_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw UsageError("--vector: cannot read '" + arg.substr(1) + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline FockVector load_vector(const std::string& arg, const Realization& R) {
  ordered_json j;
  const std::string text = read_vector_arg(arg);
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw UsageError(std::string("--vector: invalid JSON: ") + e.what());
  }
  try {
    return fock_vector_from_json(j, R);
  } catch (const ordered_json::exception& e) {
    throw UsageError(std::string("--vector: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--vector: ") + e.what());
  }
}

inline LieElement load_element(const std::string& flag, const std::string& text, const Realization& R) {
  try {
    return parse_element(R, text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

inline std::string join_indices(const std::vector<Index>& v, const Realization& R) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + render_index(v[i], R);
  return out;
}

inline void write_vector(std::ostream& out, const FockVector& v, const Realization& R, const std::string& format,
                         bool with_degree) {
  if (format == "json") {
    ordered_json j = to_json(v, R);
    if (with_degree) {
      std::optional<std::int64_t> common;
      bool homogeneous = true;
      std::size_t k = 0;
      for (const auto& [m, c] : v) {
        const auto d = j_degree(m);
        j[k++]["degree"] = d;
        if (common && *common != d) homogeneous = false;
        common = d;
      }
      ordered_json doc{{"terms", j}};
      doc["degree"] = homogeneous && common ? ordered_json(*common) : ordered_json(nullptr);
      out << doc.dump() << '\n';
    } else {
      out << j.dump() << '\n';
    }
    return;
  }
  out << "unstarred,starred,coeff" << (with_degree ? ",degree" : "") << '\n';
  for (const auto& [m, c] : v) {
    out << csv_field(join_indices(m.unstarred, R)) << ',' << csv_field(join_indices(m.starred, R)) << ',' << c.str();
    if (with_degree) out << ',' << j_degree(m);
    out << '\n';
  }
}

struct Options {
  InstanceFlags inst;
  // cocycle
  std::string x, y, method = "sums";
  bool virasoro = false;
  // table
  std::string exp = "-4:4", exp2 = "0:0", x_exp, y_exp, x_exp2, y_exp2;
  std::optional<std::int64_t> sum;
  std::size_t limit = 250000;
  // apply / grade
  std::string expr, vector;
  bool vacuum = false;
  int repeat = 1;
  // verify
  std::string suite;
  std::uint64_t seed = 0;
  int max = 10;
  std::size_t samples = 0;
};

inline Scalar normalize(const Scalar& v, const Options& o) { return o.virasoro ? v * Scalar(-1, 2) : v; }

inline int cmd_cocycle(const Options& o, std::ostream& out) {
  const Realization R = o.inst.realization();
  const LieElement x = load_element("-x", o.x, R), y = load_element("-y", o.y, R);
  ordered_json doc;
  int code = 0;
  if (o.method == "sums") {
    doc["value"] = normalize(cocycle(x, y, R), o).str();
  } else if (o.method == "oracle") {
    doc["value"] = normalize(cocycle_oracle(x, y, R), o).str();
  } else if (o.method == "closed") {
    try {
      doc["value"] = normalize(closed_form(x, y), o).str();
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--method closed: ") + e.what());
    }
  } else if (o.method == "check") {
    const Scalar a = cocycle(x, y, R), b = cocycle_oracle(x, y, R);
    doc["value"] = normalize(a, o).str();
    doc["oracle"] = normalize(b, o).str();
    doc["agree"] = a == b;
    if (a != b) code = 1;
  } else {
    throw UsageError("--method: expected sums, oracle, closed or check, got '" + o.method + "'");
  }
  if (o.inst.format == "json") {
    out << doc.dump() << '\n';
  } else {
    std::string header, row;
    for (const auto& [k, v] : doc.items()) {
      header += (header.empty() ? "" : ",") + k;
      row += (row.empty() ? "" : ",") + (v.is_string() ? v.get<std::string>() : v.dump());
    }
    out << header << '\n' << row << '\n';
  }
  return code;
}

inline std::vector<BasisSymbol> grid_symbols(const Realization& R, Range e1, Range e2) {
  std::vector<BasisSymbol> out;
  const int n = R.config().n;
  const AlgebraKind k = R.kind();
  if (k == AlgebraKind::weyl && e2.lo < 0) throw UsageError("--exp2: weyl p-degree must be non-negative");
  if (k == AlgebraKind::witt) {
    for (auto m = e1.lo; m <= e1.hi; ++m) out.push_back(BasisSymbol::witt(m));
    return out;
  }
  if (k == AlgebraKind::gl) e1 = e2 = {0, 0};
  if (k == AlgebraKind::loop) e2 = {0, 0};
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (auto a = e1.lo; a <= e1.hi; ++a)
        for (auto b = e2.lo; b <= e2.hi; ++b) out.push_back(BasisSymbol{k, i, j, a, b});
  return out;
}

inline int cmd_table(const Options& o, std::ostream& out) {
  const Realization R = o.inst.realization();
  auto pick = [&](const std::string& specific, const std::string& common, const std::string& flag) {
    return parse_range(specific.empty() ? common : specific, flag);
  };
  const auto xs = grid_symbols(R, pick(o.x_exp, o.exp, "--x-exp"), pick(o.x_exp2, o.exp2, "--x-exp2"));
  const auto ys = grid_symbols(R, pick(o.y_exp, o.exp, "--y-exp"), pick(o.y_exp2, o.exp2, "--y-exp2"));
  const double rows = static_cast<double>(xs.size()) * static_cast<double>(ys.size());
  if (rows > static_cast<double>(o.limit))
    throw UsageError("table: grid has " + std::to_string(static_cast<std::uint64_t>(rows)) + " rows, above --limit " +
                     std::to_string(o.limit));

  CocycleTable t{to_string(R.kind()), R.rho(), R.model().describe_cut(R.config().j_cut), {}};
  for (const auto& x : xs)
    for (const auto& y : ys) {
      if (o.sum && x.a + y.a != *o.sum) continue;
      t.entries.push_back({render(x), render(y), normalize(cocycle(x, y, R), o)});
    }
  if (o.inst.format == "json") out << to_json(t).dump() << '\n';
  else out << to_csv(t);
  return 0;
}

inline int cmd_apply(const Options& o, std::ostream& out) {
  const Realization R = o.inst.realization();
  const LieElement x = load_element("-e", o.expr, R);
  if (o.vacuum == !o.vector.empty()) throw UsageError("apply: give exactly one of --vacuum or --vector");
  if (o.repeat < 0) throw UsageError("--repeat: must be non-negative");
  FockVector v = o.vacuum ? vacuum() : load_vector(o.vector, R);
  for (int k = 0; k < o.repeat; ++k) v = apply_fx(x, v, R);
  write_vector(out, v, R, o.inst.format, false);
  return 0;
}

inline int cmd_grade(const Options& o, std::ostream& out) {
  const Realization R = o.inst.realization();
  if (o.vector.empty()) throw UsageError("grade: --vector is required");
  write_vector(out, load_vector(o.vector, R), R, o.inst.format, true);
  return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  if (o.max < 0) throw UsageError("--max: must be non-negative");
  verify::Options vo{o.seed, o.max, o.samples};
  std::vector<verify::CheckResult> results;
  try {
    results = verify::run_suite(o.suite, vo);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("verify: ") + e.what());
  }
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (o.inst.format == "json") {
    ordered_json checks = ordered_json::array();
    for (const auto& r : results)
      checks.push_back(ordered_json{{"suite", r.suite}, {"name", r.name}, {"passed", r.passed}, {"cases", r.cases},
                                    {"failure", r.failure}});
    out << ordered_json{{"suite", o.suite}, {"seed", o.seed}, {"passed", ok}, {"checks", checks}}.dump() << '\n';
  } else {
    out << "suite,name,passed,cases,failure\n";
    for (const auto& r : results)
      out << r.suite << ',' << csv_field(r.name) << ',' << (r.passed ? "true" : "false") << ',' << r.cases << ','
          << csv_field(r.failure) << '\n';
  }
  return ok ? 0 : 1;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Fock space representations and their 2-cocycles", "fockrep"};
  app.require_subcommand(1);

  auto* cocycle_cmd = app.add_subcommand("cocycle", "cocycle value c(x, y)");
  o.inst.attach(cocycle_cmd);
  cocycle_cmd->add_option("-x", o.x, "first element")->required();
  cocycle_cmd->add_option("-y", o.y, "second element")->required();
  cocycle_cmd->add_option("--method", o.method, "sums | oracle | closed | check")->capture_default_str();
  cocycle_cmd->add_flag("--virasoro-normalization", o.virasoro, "scale values by -1/2");

  auto* table_cmd = app.add_subcommand("table", "cocycle table over a grid of basis symbols");
  o.inst.attach(table_cmd);
  table_cmd->add_option("--exp", o.exp, "range of the first exponent, lo:hi")->capture_default_str();
  table_cmd->add_option("--exp2", o.exp2, "range of the second exponent (qtorus y, weyl p)")->capture_default_str();
  table_cmd->add_option("--x-exp", o.x_exp, "first exponent range for x only");
  table_cmd->add_option("--y-exp", o.y_exp, "first exponent range for y only");
  table_cmd->add_option("--x-exp2", o.x_exp2, "second exponent range for x only");
  table_cmd->add_option("--y-exp2", o.y_exp2, "second exponent range for y only");
  table_cmd->add_option("--sum", o.sum, "keep pairs whose first exponents sum to this");
  table_cmd->add_option("--limit", o.limit, "maximum number of rows")->capture_default_str();
  table_cmd->add_flag("--virasoro-normalization", o.virasoro, "scale values by -1/2");

  auto* apply_cmd = app.add_subcommand("apply", "apply f_x to a Fock vector");
  o.inst.attach(apply_cmd);
  apply_cmd->add_option("-e", o.expr, "element x")->required();
  apply_cmd->add_flag("--vacuum", o.vacuum, "start from v0");
  apply_cmd->add_option("--vector", o.vector, "Fock vector as JSON, or @file");
  apply_cmd->add_option("--repeat", o.repeat, "apply f_x this many times")->capture_default_str();

  auto* grade_cmd = app.add_subcommand("grade", "J-degree of each monomial of a Fock vector");
  o.inst.attach(grade_cmd);
  grade_cmd->add_option("--vector", o.vector, "Fock vector as JSON, or @file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  o.inst.attach(verify_cmd);
  std::string names;
  for (const auto& s : verify::suite_names()) names += (names.empty() ? "" : " | ") + s;
  verify_cmd->add_option("suite", o.suite, names)->required();
  verify_cmd->add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();
  verify_cmd->add_option("--max", o.max, "bound for the numeric identity checks")->capture_default_str();
  verify_cmd->add_option("--samples", o.samples, "random samples per instance (0 = defaults)")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (cocycle_cmd->parsed()) return cmd_cocycle(o, out);
    if (table_cmd->parsed()) return cmd_table(o, out);
    if (apply_cmd->parsed()) return cmd_apply(o, out);
    if (grade_cmd->parsed()) return cmd_grade(o, out);
    if (verify_cmd->parsed()) return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace fockrep::cli
