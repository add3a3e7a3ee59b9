#pragma once
// Command-line front end. run() is the whole program minus main(), so tests
// can drive it with string arguments and capture both streams.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "checks.hpp"
#include "equivariant.hpp"
#include "exactpoly.hpp"
#include "indexcomb.hpp"
#include "presentation.hpp"
#include "qfun.hpp"

namespace lgschub::cli {

constexpr const char* kSchema = "lgschub/1";
constexpr int kMaxN = 8;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Config {
  int n = 0;
  std::uint64_t seed = 0;
  int points = 20;
  std::string format = "json";
  int parallelism = 1;
};

inline std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::string t = s;
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer list: \"" + s + "\"");
    }
    if (used != item.size()) throw UsageError("not an integer list: \"" + s + "\"");
    out.push_back(v);
  }
  return out;
}

inline std::string partition_latex(const StrictPartition& l) {
  std::string s = "(";
  for (int i = 0; i < l.length(); ++i) s += (i ? "," : "") + std::to_string(l.part(i));
  return s + ")";
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

inline Json poly_json(const Poly& p) {
  Json j = to_json(p);
  j["text"] = to_string(p);
  return j;
}

// ---------------------------------------------------------------------------

inline int cmd_table(const Config& cfg, std::ostream& out) {
  auto t = RestrictionTable::build(cfg.n, cfg.parallelism);
  if (cfg.format == "json") {
    Json index = Json::array();
    for (const auto& l : t.index()) index.push_back(l.parts());
    Json rows = Json::array();
    for (int li = 0; li < t.size(); ++li) {
      Json row = Json::array();
      for (int mi = 0; mi < t.size(); ++mi) row.push_back(poly_json(t.at(li, mi)));
      rows.push_back(row);
    }
    out << Json{{"schema", kSchema}, {"command", "table"}, {"n", cfg.n}, {"index", index}, {"entries", rows}}.dump()
        << "\n";
  } else if (cfg.format == "csv") {
    out << "lambda,mu,value\n";
    for (int li = 0; li < t.size(); ++li)
      for (int mi = 0; mi < t.size(); ++mi)
        out << csv_field(t.index()[li].str()) << "," << csv_field(t.index()[mi].str()) << ","
            << csv_field(to_string(t.at(li, mi))) << "\n";
  } else {
    out << "\\begin{array}{c|" << std::string(t.size(), 'c') << "}\n";
    out << "\\lambda \\backslash \\mu";
    for (const auto& m : t.index()) out << " & " << partition_latex(m);
    out << " \\\\ \\hline\n";
    for (int li = 0; li < t.size(); ++li) {
      out << partition_latex(t.index()[li]);
      for (int mi = 0; mi < t.size(); ++mi) out << " & " << to_latex(t.at(li, mi));
      out << " \\\\\n";
    }
    out << "\\end{array}\n";
  }
  return 0;
}

inline int cmd_restrict(const Config& cfg, const std::string& lambda, const std::string& mu, std::ostream& out) {
  StrictPartition l(cfg.n, parse_list(lambda)), m(cfg.n, parse_list(mu));
  Poly p = restrict(l, m);
  if (cfg.format == "json")
    out << Json{{"schema", kSchema}, {"command", "restrict"}, {"n", cfg.n}, {"lambda", l.parts()}, {"mu", m.parts()},
                {"value", poly_json(p)}}
               .dump()
        << "\n";
  else if (cfg.format == "csv")
    out << "lambda,mu,value\n" << csv_field(l.str()) << "," << csv_field(m.str()) << "," << csv_field(to_string(p)) << "\n";
  else
    out << to_latex(p) << "\n";
  return 0;
}

inline int cmd_multiply(const Config& cfg, const std::string& w, const std::string& v, std::ostream& out) {
  StrictPartition lw(cfg.n, parse_list(w)), lv(cfg.n, parse_list(v));
  auto t = RestrictionTable::build(cfg.n, cfg.parallelism);
  auto c = structure_constants(lw, lv, t);
  if (cfg.format == "json") {
    Json products = Json::array();
    for (int ui = 0; ui < t.size(); ++ui)
      if (!c[ui].is_zero()) products.push_back({{"u", t.index()[ui].parts()}, {"coeff", poly_json(c[ui])}});
    out << Json{{"schema", kSchema}, {"command", "multiply"}, {"n", cfg.n}, {"w", lw.parts()}, {"v", lv.parts()},
                {"products", products}}
               .dump()
        << "\n";
  } else if (cfg.format == "csv") {
    out << "w,v,u,coeff\n";
    for (int ui = 0; ui < t.size(); ++ui)
      if (!c[ui].is_zero())
        out << csv_field(lw.str()) << "," << csv_field(lv.str()) << "," << csv_field(t.index()[ui].str()) << ","
            << csv_field(to_string(c[ui])) << "\n";
  } else {
    std::string rhs;
    for (int ui = 0; ui < t.size(); ++ui) {
      if (c[ui].is_zero()) continue;
      if (!rhs.empty()) rhs += " + ";
      std::string coeff = to_latex(c[ui]);
      if (coeff == "1") coeff.clear();
      else if (c[ui].size() > 1 && coeff.find('(') != 0) coeff = "(" + coeff + ")";
      rhs += coeff + "\\sigma" + partition_latex(t.index()[ui]);
    }
    out << "\\sigma" << partition_latex(lw) << "\\sigma" << partition_latex(lv) << " = " << (rhs.empty() ? "0" : rhs)
        << "\n";
  }
  return 0;
}

inline int cmd_qfun(const Config& cfg, const std::string& lambda, bool classical, std::ostream& out) {
  auto parts = parse_list(lambda);
  QContext ctx{cfg.n};
  Poly p;
  if (classical) {
    if (parts.size() > 1) throw UsageError("--classical takes a single row");
    p = classical_Q_onerow(parts.empty() ? 0 : parts[0], ctx);
  } else {
    p = factorial_Q(parts, ctx);
  }
  if (cfg.format == "json")
    out << Json{{"schema", kSchema}, {"command", "qfun"}, {"n", cfg.n}, {"lambda", parts}, {"classical", classical},
                {"value", poly_json(p)}}
               .dump()
        << "\n";
  else if (cfg.format == "csv")
    out << "lambda,value\n" << csv_field(detail::join(parts)) << "," << csv_field(to_string(p)) << "\n";
  else
    out << to_latex(p) << "\n";
  return 0;
}

inline int cmd_giambelli(const Config& cfg, const std::string& lambda, std::ostream& out) {
  StrictPartition l(cfg.n, parse_list(lambda));
  auto t = RestrictionTable::build(cfg.n, cfg.parallelism);
  bool ok = giambelli_check(l, t);
  std::vector<int> p = l.parts();
  if (p.size() % 2) p.push_back(0);
  if (cfg.format == "json") {
    Json entries = Json::array();
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j) entries.push_back({p[i], p[j]});
    out << Json{{"schema", kSchema}, {"command", "giambelli"}, {"n", cfg.n}, {"lambda", l.parts()},
                {"entries", entries}, {"holds", ok}}
               .dump()
        << "\n";
  } else if (cfg.format == "csv") {
    out << "lambda,holds\n" << csv_field(l.str()) << "," << (ok ? "true" : "false") << "\n";
  } else {
    out << "\\sigma" << partition_latex(l) << " = \\mathrm{Pf}\\left(\\sigma(\\lambda_i,\\lambda_j)\\right)_{1\\le i<j\\le "
        << p.size() << "}" << (ok ? "" : " \\quad\\text{(fails)}") << "\n";
  }
  return ok ? 0 : 1;
}

inline int cmd_present(const Config& cfg, bool relations, const std::string& expr, const std::string& pfaff,
                       std::ostream& out) {
  const int n = cfg.n;
  Json results = Json::array();
  std::vector<std::pair<std::string, XPoly>> rows;
  if (relations)
    for (int k = 1; k <= n; ++k)
      rows.emplace_back("X_{" + std::to_string(k) + "," + std::to_string(k) + "}", relation_X(k, k, n));
  if (!expr.empty()) rows.emplace_back(expr, normal_form(parse_xpoly(expr, n), n));
  if (!pfaff.empty()) {
    StrictPartition l(n, parse_list(pfaff));
    rows.emplace_back("X" + l.str(), normal_form(pfaffian_X(l), n));
  }
  if (rows.empty()) throw UsageError("present needs --relations, --normal-form or --pfaffian");
  if (cfg.format == "json") {
    for (const auto& [label, p] : rows) {
      Json j = p.to_json(n);
      j["text"] = p.str();
      results.push_back({{"input", label}, {"value", j}});
    }
    out << Json{{"schema", kSchema}, {"command", "present"}, {"n", n}, {"results", results}}.dump() << "\n";
  } else if (cfg.format == "csv") {
    out << "input,value\n";
    for (const auto& [label, p] : rows) out << csv_field(label) << "," << csv_field(p.str()) << "\n";
  } else {
    for (const auto& [label, p] : rows) out << label << " = " << p.str() << "\n";
  }
  return 0;
}

inline int cmd_check(const Config& cfg, const std::string& suite, std::ostream& out) {
  CheckOptions opt{cfg.seed, cfg.points, cfg.parallelism};
  Json report = run_checks(suite, cfg.n, opt);
  if (cfg.format == "csv") {
    out << "suite,n,instances,passed\n";
    for (const auto& r : report["runs"])
      out << r["suite"].get<std::string>() << "," << r["n"] << "," << r["instances"] << ","
          << (r["passed"].get<bool>() ? "true" : "false") << "\n";
  } else {
    out << report.dump(2) << "\n";
  }
  return report["passed"].get<bool>() ? 0 : 1;
}

inline int cmd_bijection(const Config& cfg, const std::string& perm, const std::string& diagram,
                         const std::string& strict, const std::string& mask, std::ostream& out) {
  int given = !perm.empty() + !diagram.empty() + !strict.empty() + !mask.empty();
  if (given != 1) throw UsageError("bijection needs exactly one of --perm, --diagram, --strict, --mask");
  std::optional<SignedPerm> w;
  if (!perm.empty()) w = SignedPerm(cfg.n, parse_list(perm));
  if (!diagram.empty()) w = diagram_to_perm(SymDiagram(parse_list(diagram)));
  if (!strict.empty()) w = strict_to_perm(StrictPartition(cfg.n, parse_list(strict)));
  if (!mask.empty()) w = mask_to_perm(BitMask(parse_list(mask)));
  if (w->n() != cfg.n) throw UsageError("object does not live in n=" + std::to_string(cfg.n));
  auto d = perm_to_diagram(*w);
  auto s = perm_to_strict(*w);
  auto m = perm_to_mask(*w);
  if (cfg.format == "json") {
    out << Json{{"diagram", d.rows}, {"strict", s.parts()}, {"mask", m.bits}, {"perm", w->images()},
                {"barred", w->barred()},   {"schema", kSchema}}
               .dump()
        << "\n";
  } else if (cfg.format == "csv") {
    out << "perm,diagram,strict,mask\n"
        << csv_field(detail::join(w->images())) << "," << csv_field(detail::join(d.rows)) << ","
        << csv_field(detail::join(s.parts())) << "," << csv_field(detail::join(m.bits)) << "\n";
  } else {
    out << w->barred() << " \\mapsto " << partition_latex(s) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------

inline std::optional<std::string> env(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  return std::string(v);
}

/// args excludes the program name. Returns the process exit code:
/// 0 success, 1 failed check, 2 usage error.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equivariant Schubert calculus on the Lagrangian Grassmannian LG_n", "lgschub"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  Config cfg;
  std::string lambda, mu, w, v, suite = "all", perm, diagram, strict, mask, expr, pfaff;
  bool relations = false, classical = false;

  auto common = [&](CLI::App* sub, bool sampling) {
    sub->add_option("--n", cfg.n, "Rank n of LG_n")->required()->check(CLI::Range(1, kMaxN));
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "latex", "csv"}));
    sub->add_option("--parallelism", cfg.parallelism, "Worker threads for table construction")
        ->check(CLI::Range(1, 256));
    if (sampling) {
      sub->add_option("--seed", cfg.seed, "Seed for all sampling");
      sub->add_option("--points", cfg.points, "Sample points per oracle instance")->check(CLI::PositiveNumber);
    }
  };

  auto* table = app.add_subcommand("table", "Full restriction table sigma(lambda)|_mu");
  common(table, false);

  auto* restrict_cmd = app.add_subcommand("restrict", "One restriction sigma(lambda)|_mu");
  common(restrict_cmd, false);
  restrict_cmd->add_option("--lambda", lambda, "Strict partition, e.g. 2,1")->required();
  restrict_cmd->add_option("--mu", mu, "Fixed point as a strict partition")->required();

  auto* multiply = app.add_subcommand("multiply", "Structure constants of sigma(w) sigma(v)");
  common(multiply, false);
  multiply->add_option("--w", w, "Strict partition")->required();
  multiply->add_option("--v", v, "Strict partition")->required();

  auto* qfun = app.add_subcommand("qfun", "Factorial Schur Q-function Q_lambda(x|a)");
  common(qfun, false);
  qfun->add_option("--lambda", lambda, "Strict partition")->required();
  qfun->add_flag("--classical", classical, "Classical one-row Q_k(x)");

  auto* giambelli = app.add_subcommand("giambelli", "Verify the Pfaffian formula for sigma(lambda)");
  common(giambelli, false);
  giambelli->add_option("--lambda", lambda, "Strict partition")->required();

  auto* present = app.add_subcommand("present", "Quotient-ring presentation");
  common(present, false);
  present->add_flag("--relations", relations, "Print the generators X_{k,k}");
  present->add_option("--normal-form", expr, "Reduce an expression in X1..Xn, x1..xn");
  present->add_option("--pfaffian", pfaff, "Normal form of the Pfaffian X_lambda");

  auto* check = app.add_subcommand("check", "Run invariant and oracle suites");
  common(check, true);
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  check->add_option("--suite", suite, "Suite name or all")->check(CLI::IsMember(names));

  auto* bij = app.add_subcommand("bijection", "Convert between the four index encodings");
  common(bij, false);
  bij->add_option("--perm", perm, "w(1),...,w(n) in 1..2n");
  bij->add_option("--diagram", diagram, "Rows of a symmetric diagram");
  bij->add_option("--strict", strict, "Strict partition");
  bij->add_option("--mask", mask, "0/1 mask");

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  // Flags take precedence over the environment.
  if (check->count("--seed") == 0)
    if (auto s = env("LGSCHUB_SEED")) {
      try {
        cfg.seed = std::stoull(*s);
      } catch (const std::exception&) {
        err << "error: LGSCHUB_SEED is not an unsigned integer\n";
        return 2;
      }
    }
  auto* active = app.get_subcommands().front();
  if (active->count("--parallelism") == 0)
    if (auto p = env("LGSCHUB_PARALLELISM")) {
      try {
        cfg.parallelism = std::max(1, std::stoi(*p));
      } catch (const std::exception&) {
        err << "error: LGSCHUB_PARALLELISM is not an integer\n";
        return 2;
      }
    }
  if (cfg.n > 6) err << "warning: n=" << cfg.n << " may take a long time\n";

  try {
    if (active == table) return cmd_table(cfg, out);
    if (active == restrict_cmd) return cmd_restrict(cfg, lambda, mu, out);
    if (active == multiply) return cmd_multiply(cfg, w, v, out);
    if (active == qfun) return cmd_qfun(cfg, lambda, classical, out);
    if (active == giambelli) return cmd_giambelli(cfg, lambda, out);
    if (active == present) return cmd_present(cfg, relations, expr, pfaff, out);
    if (active == check) {
      if (cfg.format == "latex") throw UsageError("check supports json and csv only");
      return cmd_check(cfg, suite, out);
    }
    if (active == bij) return cmd_bijection(cfg, perm, diagram, strict, mask, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidIndexObject& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidShape& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    Json failure = {{"schema", kSchema}, {"error", e.what()}};
    err << failure.dump() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace lgschub::cli
