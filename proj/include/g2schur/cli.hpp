#pragma once

#include <CLI11.hpp>

#include <iostream>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "g2schur/kernels.hpp"
#include "g2schur/cauchy_sums.hpp"
#include "g2schur/diffops.hpp"
#include "g2schur/schur_table.hpp"
#include "g2schur/series_expansion.hpp"

namespace g2schur {

enum ExitCode { kExitPass = 0, kExitFail = 1, kExitError = 2 };

struct RunConfig {
  std::string subcommand;  // table, verify, conjecture, omega, cache-roundtrip
  std::string suite;       // for verify
  std::optional<int> max_level;
  int order = 4;
  int lambda_order = 8;
  int copies = 1;
  int pde_order = 10;
  int max_j1 = 8, max_J = 12;
  int max_degree = 12, detail_degree = 8;
  std::string sign = "both";
  std::string source = "closed";
  std::string table_path, out_path;
  bool json = false;
  bool timing = true;
};

namespace detail {

inline void need(bool ok, const std::string& what) {
  if (!ok) throw FormatError("config: " + what);
}

inline void validate(const RunConfig& c) {
  if (c.max_level) need(*c.max_level >= 0 && *c.max_level % 2 == 0, "--max-level must be even and >= 0");
  need(c.order >= 0 && c.lambda_order >= 0 && c.pde_order >= 2, "orders must be >= 0 (pde order >= 2)");
  need(c.copies == 1 || c.copies == 2, "--copies must be 1 or 2");
  need(c.max_j1 >= 0 && c.max_J >= 0 && c.max_degree >= 0 && c.detail_degree >= 0, "bounds must be >= 0");
  need(c.sign == "minus" || c.sign == "plus" || c.sign == "both", "--sign must be minus, plus or both");
  need(c.source == "closed" || c.source == "sums", "--source must be closed or sums");
}

inline int even_up(int n) { return n + (n & 1); }

// Load or build a table of at least `level`.
inline SchurTable obtain_table(const RunConfig& c, int level) {
  if (!c.table_path.empty()) {
    auto t = load_table(c.table_path);
    if (t.max_level() < level)
      throw FormatError("table " + c.table_path + " has level " + std::to_string(t.max_level()) + ", need " +
                        std::to_string(level));
    return t;
  }
  return solve_table(even_up(level));
}

inline Report series_suite(const SchurTable& t, int order) {
  Report rep("series");
  const ExpansionCache ex(t, order + 2);
  const auto fams = fit_all_families(ex, order);
  for (const auto& [m, f] : fams) {
    const bool ok = f.poly.total_degree() <= f.order() && f.validated;
    rep.add("family" + triple_str(m), "degree_bound", ok,
            {{"mvec", m}, {"degree", f.poly.total_degree()}, {"validated_on", f.validation_count}},
            ok ? std::nullopt : std::optional<std::string>("validated on " + std::to_string(f.validation_count) + " triples"));
  }
  for (const auto& [m, want] : reference_families()) {
    if (!fams.count(m)) continue;
    const auto diff = polyj_diff(fams.at(m).poly, want);
    rep.add({"example" + triple_str(m), "example_polynomial", Status::Info,
             {{"mvec", m}, {"matches", diff.empty()}, {"computed", polyj_to_json(fams.at(m).poly)}},
             diff.empty() ? std::nullopt : std::optional<std::string>(diff), 0});
  }
  rep.append(verify_recursion_by_components(ex, order));
  return rep;
}

inline Report pieri_suite(const SchurTable& t, int level) {
  Report rep("pieri");
  rep.append(verify_pieri(t, level - 2));
  rep.append(verify_structure(t));
  const std::vector<std::array<int, 3>> perms{{0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& s : perms) {
    const auto r = s3_check(t, s);
    rep.add("s3_" + triple_str(s), "s3_symmetry", r.ok, {{"sigma", s}},
            r.ok ? std::nullopt : std::optional<std::string>(triple_str(*r.witness)));
  }
  return rep;
}

inline Report cauchy_suite(const SchurTable& t, const RunConfig& c) {
  Report rep("cauchy");
  rep.append(check_H1_relation(t, c.lambda_order));
  const ExpansionCache ex(t, c.order);
  const auto fams = fit_all_families(ex, c.order);
  rep.append(pole_audit(fams, c.order));
  const auto thm = theorem_check(fams, c.order);
  rep.append(thm);
  rep.extra() = thm.extra();
  rep.append(pde_check(closedform_omega_minus(c.pde_order)));
  rep.append(pde_check(closedform_omega_plus(c.pde_order)));
  rep.append(initial_condition_check(closedform_omega_minus(c.pde_order)));
  rep.append(initial_condition_check(closedform_omega_plus(c.pde_order)));
  rep.append(omega_relation_check(c.pde_order));
  return rep;
}

inline json omega_json(const RunConfig& c) {
  std::vector<Sign> signs;
  if (c.sign != "plus") signs.push_back(Sign::Minus);
  if (c.sign != "minus") signs.push_back(Sign::Plus);
  json out = {{"source", c.source}, {"series", json::array()}};
  std::optional<SchurTable> t;
  std::optional<std::map<MVec, CoeffFamily>> fams;
  if (c.source == "sums") {
    t = obtain_table(c, c.max_level.value_or(required_level(c.order)));
    out["table_checksum"] = table_checksum(*t);
    fams = fit_all_families(ExpansionCache(*t, c.order), c.order);
  }
  for (Sign s : signs) {
    if (fams) {
      out["series"].push_back(omega_to_json(omega_from_sums(*fams, s, c.order).omega));
    } else {
      out["series"].push_back(omega_to_json(s == Sign::Minus ? closedform_omega_minus(c.order) : closedform_omega_plus(c.order)));
    }
  }
  return out;
}

inline json config_echo(const RunConfig& c, int level) {
  json j = {{"subcommand", c.subcommand}, {"order", c.order}, {"max_level", level}};
  if (!c.suite.empty()) j["suite"] = c.suite;
  if (c.suite == "cauchy") j["lambda_order"] = c.lambda_order, j["pde_order"] = c.pde_order;
  if (c.suite == "specialized") j["max_j1"] = c.max_j1, j["max_J"] = c.max_J;
  if (c.suite == "kernel") j["max_degree"] = c.max_degree, j["detail_degree"] = c.detail_degree;
  if (c.subcommand == "conjecture") j["copies"] = c.copies;
  return j;
}

inline void emit(const RunConfig& c, const json& j, const std::string& summary, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (!c.out_path.empty()) write_file(c.out_path, text);
  if (c.json) {
    out << text;
  } else {
    out << summary;
  }
}

inline std::string summary_text(const Report& r) {
  std::string s = r.suite() + ": pass " + std::to_string(r.count(Status::Pass)) + ", fail " +
                  std::to_string(r.count(Status::Fail)) + ", info " + std::to_string(r.count(Status::Info)) + "\n";
  int shown = 0;
  for (const auto& rec : r.records()) {
    if (rec.status != Status::Fail) continue;
    if (++shown > 20) {
      s += "  ...\n";
      break;
    }
    s += "  FAIL " + rec.id + (rec.witness ? ": " + *rec.witness : std::string()) + "\n";
  }
  return s;
}

inline int run_report(const RunConfig& c, Report rep, const json& cfg, const std::string& checksum, std::ostream& out,
                      bool assertive) {
  rep.config() = cfg;
  if (!checksum.empty()) rep.set_checksum(checksum);
  emit(c, rep.to_json(c.timing), summary_text(rep), out);
  return !assertive || rep.all_pass() ? kExitPass : kExitFail;
}

// Load, re-canonicalize and byte-compare; then rebuild at the same level and compare checksums.
inline int cache_roundtrip(const RunConfig& c, std::ostream& out) {
  need(!c.table_path.empty(), "cache-roundtrip needs --table");
  const std::string text = read_file(c.table_path);
  const auto t = table_from_json(parse_json(text, "table " + c.table_path));
  const std::string canon = table_canonical_text(t);
  if (canon != text) throw FormatError("table " + c.table_path + " is not in canonical form");
  const std::string have = fnv1a64_hex(canon), want = table_checksum(solve_table(t.max_level()));
  const json j = {{"path", c.table_path},
                  {"max_level", t.max_level()},
                  {"entries", t.entries().size()},
                  {"checksum", have},
                  {"expected_checksum", want},
                  {"canonical", true},
                  {"checksum_match", have == want}};
  emit(c, j, have == want ? "roundtrip ok " + have + "\n" : "checksum mismatch: file " + have + ", rebuilt " + want + "\n",
       out);
  if (have != want) throw FormatError("table " + c.table_path + ": checksum mismatch against rebuilt table");
  return kExitPass;
}

}  // namespace detail

inline int run(const RunConfig& c, std::ostream& out) {
  using namespace detail;
  validate(c);
  if (c.subcommand == "table") {
    const int level = c.max_level.value_or(16);
    Stopwatch sw;
    const auto t = solve_table(level);
    const double ms = sw.millis();
    std::size_t expect = 0;
    for (int n = 0; n <= level; n += 2) expect += enumerate_level(n).size();
    if (t.entries().size() != expect) throw Error("table: entry count mismatch");
    if (!c.out_path.empty()) save_table(t, c.out_path);
    json j = {{"max_level", level}, {"entries", t.entries().size()}, {"checksum", table_checksum(t)}};
    if (c.timing) j["timing"] = {{"unit", "ms"}, {"total", ms}};
    const std::string text = j.dump(2) + "\n";
    out << (c.json ? text : "table level " + std::to_string(level) + ": " + std::to_string(t.entries().size()) +
                                " entries, checksum " + table_checksum(t) + "\n");
    return kExitPass;
  }
  if (c.subcommand == "cache-roundtrip") return cache_roundtrip(c, out);
  if (c.subcommand == "omega") {
    const json j = omega_json(c);
    emit(c, j, c.out_path.empty() ? j.dump(2) + "\n" : "wrote " + c.out_path + "\n", out);
    return kExitPass;
  }
  if (c.subcommand == "conjecture") {
    const int level = c.max_level.value_or(required_level(c.order));
    const auto t = obtain_table(c, level);
    const ExpansionCache ex(t, c.order);
    run_report(c, conjecture_check(c.copies, c.order, ex), config_echo(c, level), table_checksum(t), out, false);
    return kExitPass;
  }
  if (c.subcommand != "verify") throw FormatError("unknown subcommand " + c.subcommand);
  if (c.suite == "kernel")
    return run_report(c, kernel_suite(c.max_degree, c.detail_degree), config_echo(c, 0), "", out, true);
  int level = 0;
  if (c.suite == "pieri") level = c.max_level.value_or(16);
  else if (c.suite == "eigen") level = c.max_level.value_or(10);
  else if (c.suite == "series") level = c.max_level.value_or(required_level(c.order));
  else if (c.suite == "cauchy") level = c.max_level.value_or(std::max(2 * c.lambda_order, required_level(c.order)));
  else if (c.suite == "specialized") level = c.max_level.value_or(even_up(c.max_j1 + c.max_J));
  else throw FormatError("unknown verify suite " + c.suite);
  const auto t = obtain_table(c, level);
  const auto sum = table_checksum(t);
  const auto cfg = config_echo(c, level);
  if (c.suite == "pieri") return run_report(c, pieri_suite(t, level), cfg, sum, out, true);
  if (c.suite == "eigen") return run_report(c, verify_eigen(t, level), cfg, sum, out, true);
  if (c.suite == "series") return run_report(c, series_suite(t, c.order), cfg, sum, out, true);
  if (c.suite == "cauchy") return run_report(c, cauchy_suite(t, c), cfg, sum, out, true);
  return run_report(c, specialized_suite(t, c.max_j1, c.max_J), cfg, sum, out, true);
}

// Parse argv and run; parse and IO problems exit 2, failed checks 1.
inline int run_cli(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"genus-two Schur polynomials: tables and exact verification suites"};
  app.require_subcommand(1);
  RunConfig c;
  int max_level = std::numeric_limits<int>::min();
  auto common = [&](CLI::App* s) {
    s->add_option("--max-level", max_level, "table level (even)");
    s->add_option("--table", c.table_path, "load this table instead of building one");
    s->add_option("--out", c.out_path, "write the table or JSON report here");
    s->add_flag("--json", c.json, "print JSON to stdout");
    s->add_flag("!--no-timing", c.timing, "omit timing fields");
  };
  auto* table = app.add_subcommand("table", "build a table and save it");
  common(table);
  auto* verify = app.add_subcommand("verify", "run an assertive suite");
  verify->require_subcommand(1);
  for (const char* name : {"pieri", "eigen", "series", "cauchy", "specialized", "kernel"}) {
    auto* s = verify->add_subcommand(name);
    common(s);
    s->add_option("--order", c.order, "series order");
    if (std::string(name) == "cauchy") {
      s->add_option("--lambda-order", c.lambda_order, "lambda truncation");
      s->add_option("--pde-order", c.pde_order, "closed-form degree for the PDE and initial checks");
    }
    if (std::string(name) == "specialized") {
      s->add_option("--max-j1", c.max_j1);
      s->add_option("--max-J", c.max_J);
    }
    if (std::string(name) == "kernel") {
      s->add_option("--max-degree", c.max_degree);
      s->add_option("--detail-degree", c.detail_degree, "action, leading-term and diagonal checks up to this degree");
    }
  }
  auto* conj = app.add_subcommand("conjecture", "report-only comparison with the Gamma-factor formula");
  common(conj);
  conj->add_option("--order", c.order);
  conj->add_option("--copies", c.copies);
  auto* omega = app.add_subcommand("omega", "emit the leading pole coefficients");
  common(omega);
  omega->add_option("--order", c.order);
  omega->add_option("--sign", c.sign, "minus, plus or both");
  omega->add_option("--source", c.source, "closed or sums");
  auto* rt = app.add_subcommand("cache-roundtrip", "check a saved table");
  common(rt);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitPass : kExitError;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  if (c.subcommand == "verify") c.suite = verify->get_subcommands().front()->get_name();
  if (max_level != std::numeric_limits<int>::min()) c.max_level = max_level;
  try {
    return run(c, out);
  } catch (const FalsificationError& e) {
    err << "falsified: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace g2schur
