#include "hlab/acceptance.hpp"
#include "hlab/catalog.hpp"
#include "hlab/curvature.hpp"
#include "hlab/flow.hpp"
#include "hlab/holonomy.hpp"
#include "hlab/report.hpp"
#include "hlab/structure_file.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace hlab;
using Params = std::map<std::string, Rational>;
using Clock = std::chrono::steady_clock;

std::string num(double v, const char* spec = "%.10g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// exact values on the command line: integers, fractions, or plain decimals
Rational rational_arg(const std::string& s) {
  auto dot = s.find('.');
  if (dot == std::string::npos) return parse_rational(s);
  std::string digits = s;
  digits.erase(dot, 1);
  Rational den = 1;
  for (size_t i = dot; i < digits.size(); ++i) den *= 10;
  return parse_rational(digits) / den;
}

Params params_from_sets(const std::vector<std::string>& sets) {
  Params out;
  for (const std::string& kv : sets) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw CLI::ValidationError("--set", "expected NAME=VALUE, got '" + kv + "'");
    std::string key = kv.substr(0, eq);
    try {
      out[key] = rational_arg(kv.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      throw CLI::ValidationError("--set", std::string(e.what()) + " in '" + kv + "'");
    }
  }
  return out;
}

std::string params_str(const Params& p) {
  if (p.empty()) return "(symbolic)";
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ", ") + k + " = " + to_string(v);
  return s;
}

int finish(Report& rep, Clock::time_point t0, const std::string& json_path, bool pass) {
  rep.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  rep.ok = pass;
  std::cout << report_text(rep);
  if (!json_path.empty()) write_report_json(rep, json_path);
  return pass ? 0 : 1;
}

int cmd_jacobi(const std::string& path, const std::string& json) {
  auto t0 = Clock::now();
  StructureFile sf = load_structure_file(path);
  LieAlgebra g = algebra_of(sf);
  JacobiReport jr = jacobi_check(g);
  Report rep;
  rep.command = "jacobi";
  rep.input("file", path);
  rep.input("dim", std::to_string(g.dim));
  for (const auto& [i, f] : jr.failures)
    rep.note("d(d e" + std::to_string(i) + ") = " + f.str());
  rep.verdict("jacobi identity", jr.pass ? "holds" : "fails");
  return finish(rep, t0, json, jr.pass);
}

int cmd_hypo_check(const std::string& path, const std::string& json) {
  auto t0 = Clock::now();
  StructureFile sf = load_structure_file(path);
  LieAlgebra g = algebra_of(sf);
  SU2Structure s;
  std::string source;
  if (has_su2_structure(sf)) {
    s = su2_of(sf);
    source = "from the file";
  } else if (g.dim == 5) {
    s = standard_structure();
    source = "standard coframe quadruplet";
  } else {
    throw std::invalid_argument(path + " has no SU(2) structure and dim != 5");
  }
  StructureCheck chk = check_hypo_contact(g, s);
  Report rep;
  rep.command = "hypo-check";
  rep.input("file", path);
  rep.input("structure", source);
  rep.verdict("d om3 = 0, d(om1 ^ eta) = 0, d(om2 ^ eta) = 0", chk.hypo ? "holds" : "fails");
  rep.verdict("d eta = -2 om3", chk.contact ? "holds" : "fails");
  rep.verdict("hypo-contact", chk.hypo_contact ? "yes" : "no");
  for (const auto& [name, f] : chk.residuals) rep.note(name + " = " + f.str());
  return finish(rep, t0, json, chk.hypo_contact);
}

int cmd_ricci(const std::string& file, const std::string& id, const std::vector<std::string>& sets,
              const std::string& json) {
  auto t0 = Clock::now();
  Params pt = params_from_sets(sets);
  Report rep;
  rep.command = "ricci";
  LieAlgebra g;
  if (!file.empty()) {
    StructureFile sf = load_structure_file(file);
    g = algebra_of(sf, pt);
    rep.input("file", file);
  } else {
    g = catalog_algebra(id, pt);
    rep.input("family", id);
  }
  rep.input("parameters", params_str(pt));
  RicciReport rr = ricci(g);
  ReportTable tab{"ricci diagonal", {"entry", "value"}, {}};
  int n = static_cast<int>(rr.ricci.size());
  for (int i = 0; i < n; ++i)
    tab.rows.push_back({"Ric(E" + std::to_string(i + 1) + ", E" + std::to_string(i + 1) + ")",
                        rr.ricci[static_cast<size_t>(i)][static_cast<size_t>(i)].str()});
  rep.tables.push_back(tab);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!rr.ricci[static_cast<size_t>(i)][static_cast<size_t>(j)].is_zero())
        rep.note("off-diagonal Ric(E" + std::to_string(i + 1) + ", E" + std::to_string(j + 1) +
                 ") = " + rr.ricci[static_cast<size_t>(i)][static_cast<size_t>(j)].str());
  rep.verdict("scalar curvature", rr.scalar.str());
  if (rr.fit) {
    rep.verdict("tau", rr.fit->first.str());
    rep.verdict("nu", rr.fit->second.str());
    rep.verdict("eta-einstein", "Ric = tau g + nu eta (x) eta");
  } else {
    rep.verdict("eta-einstein", "no fit");
  }
  return finish(rep, t0, json, true);
}

int cmd_catalog_list(const std::string& json) {
  auto t0 = Clock::now();
  Report rep;
  rep.command = "catalog list";
  ReportTable tab{"catalog", {"id", "parameters", "note"}, {}};
  for (const FamilyInfo& fi : catalog_list()) {
    std::string ps;
    for (const std::string& p : fi.params) ps += (ps.empty() ? "" : ", ") + p;
    tab.rows.push_back({fi.id, ps.empty() ? "-" : ps, fi.note});
  }
  rep.tables.push_back(tab);
  return finish(rep, t0, json, true);
}

int cmd_catalog_dump(const std::string& id, const std::vector<std::string>& sets,
                     const std::string& out_path) {
  StructureFile sf = catalog_entry_file(id, params_from_sets(sets));
  std::string text = dump_structure_file(sf);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << text;
  }
  return 0;
}

int cmd_evolve(const std::string& id, const std::vector<std::string>& sets, double t_end,
               double tol, const std::string& json) {
  auto t0 = Clock::now();
  Params pt = params_from_sets(sets);
  ScalarODE ode = build_hypo_ode(id, pt);
  Trajectory tr = integrate(ode, t_end, tol);
  Report rep;
  rep.command = "evolve";
  rep.input("family", id);
  rep.input("parameters", params_str(pt));
  rep.input("t-end", num(t_end));
  rep.input("tol", num(tol, "%.3g"));
  rep.verdict("status", tr.status);
  rep.verdict("t reached", num(tr.t_reached));
  rep.verdict("nodes", std::to_string(tr.times.size()));
  rep.residual("first integral drift", first_integral_drift(ode, tr));
  rep.residual("second-order equation", max_equation_residual(ode, tr));
  ReportTable tab{"profile", {"t", "f", "f'", "f''", "f'''"}, {}};
  const int rows = 10;
  for (int i = 0; i <= rows; ++i) {
    double t = tr.t_reached * i / rows;
    std::vector<Jet2> st = state_at(ode, tr, t);
    tab.rows.push_back({num(t, "%.6g"), num(st[0].v), num(st[0].d1), num(st[0].d2),
                        num(st[1].d2)});
  }
  rep.tables.push_back(tab);
  return finish(rep, t0, json, true);
}

int cmd_holonomy(const std::string& id, const std::vector<std::string>& sets,
                 std::vector<double> times, double tol, const std::string& json) {
  auto t0 = Clock::now();
  Params pt = params_from_sets(sets);
  if (times.empty()) times = {0.0, 0.05, 0.1};
  double t_end = 0.12;
  std::vector<double> mandatory;
  for (double t : times) {
    if (t < 0) throw CLI::ValidationError("--times", "sample times must be nonnegative");
    t_end = std::max(t_end, t + 0.02);
    if (t > 0) mandatory.push_back(t);
  }
  ScalarODE ode = build_hypo_ode(id, pt);
  Trajectory tr = integrate(ode, t_end, tol, mandatory);
  RankReport rk = holonomy_rank(id, pt, tr, times);
  Su3Report su = certify_su3(id, pt, tr);
  Report rep;
  rep.command = "holonomy";
  rep.input("family", id);
  rep.input("parameters", params_str(pt));
  std::string ts;
  for (double t : times) ts += (ts.empty() ? "" : ", ") + num(t, "%.6g");
  rep.input("sample times", ts);
  rep.verdict("curvature span rank", std::to_string(rk.rank));
  rep.verdict("rank at t = 0",
              std::to_string(su.rank_at_origin) + (su.rank_exact ? " (exact)" : " (float)"));
  rep.verdict("verdict", su.verdict);
  rep.residual("d F on the product", su.dF_residual);
  for (const auto& [k, v] : su.dPsi_residuals) rep.residual(k, v);
  if (!rk.times_skipped.empty()) {
    std::string sk;
    for (double t : rk.times_skipped) sk += (sk.empty() ? "" : ", ") + num(t, "%.6g");
    rep.note("integration stopped at t = " + num(tr.t_reached, "%.6g") +
             "; skipped sample times: " + sk);
  }
  return finish(rep, t0, json, su.verdict == "holonomy = SU(3)");
}

int cmd_g2(const std::string& kind, const std::vector<std::string>& sets, double t_end, double tol,
           const std::string& json) {
  auto t0 = Clock::now();
  Params pt = params_from_sets(sets);
  HitchinSystem sys = build_hitchin_system(kind, pt);
  Trajectory tr = integrate(sys, t_end, tol);
  G2Report g2 = certify_g2(kind, pt, tr);
  Report rep;
  rep.command = "g2";
  rep.input("kind", kind);
  rep.input("parameters", params_str(pt));
  rep.input("t-end", num(t_end));
  rep.verdict("status", tr.status);
  rep.verdict("curvature span rank", std::to_string(g2.rank));
  rep.verdict("rank at t = 0",
              std::to_string(g2.rank_at_origin) + (g2.rank_exact ? " (exact)" : " (float)"));
  rep.verdict("verdict", g2.verdict);
  rep.residual("d phi", g2.dphi_residual);
  rep.residual("d star phi", g2.dstarphi_residual);
  return finish(rep, t0, json, g2.verdict == "holonomy = G2");
}

int cmd_verify(std::vector<int> numbers, std::uint64_t seed, const std::string& json) {
  auto t0 = Clock::now();
  if (numbers.empty())
    for (int n = 1; n <= criteria_count(); ++n) numbers.push_back(n);
  Report rep;
  rep.command = "verify";
  rep.input("seed", std::to_string(seed));
  ReportTable tab{"criteria", {"#", "check", "result", "seconds"}, {}};
  bool all = true;
  int passed = 0;
  for (int n : numbers) {
    CriterionResult r = run_criterion(n, seed);
    all = all && r.passed;
    passed += r.passed ? 1 : 0;
    tab.rows.push_back({std::to_string(r.number), r.title, r.passed ? "pass" : "FAIL",
                        num(r.seconds, "%.2f")});
    for (const std::string& note : r.notes)
      rep.note("[" + std::to_string(r.number) + "] " + note);
  }
  rep.tables.push_back(tab);
  rep.verdict("criteria passed",
              std::to_string(passed) + " / " + std::to_string(numbers.size()));
  return finish(rep, t0, json, all);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numeric checks for hypo-contact structures and their evolution"};
  app.require_subcommand(1);
  int rc = 0;

  std::string file, json, id, out_path, kind;
  std::vector<std::string> sets;
  std::vector<double> times;
  std::vector<int> numbers;
  double t_end = 1.0, tol = 1e-10;
  std::uint64_t seed = kAcceptanceSeed;

  auto* jac = app.add_subcommand("jacobi", "check d(d e^i) = 0 for a structure file");
  jac->add_option("file", file, "structure equation file")->required();
  jac->add_option("--json", json, "write the machine report to this path");
  jac->callback([&] { rc = cmd_jacobi(file, json); });

  auto* hypo = app.add_subcommand("hypo-check", "check the hypo-contact closure conditions");
  hypo->add_option("file", file, "structure equation file")->required();
  hypo->add_option("--json", json, "write the machine report to this path");
  hypo->callback([&] { rc = cmd_hypo_check(file, json); });

  auto* ric = app.add_subcommand("ricci", "ricci tensor of the orthonormal coframe metric");
  auto* ric_file = ric->add_option("--file", file, "structure equation file");
  auto* ric_fam = ric->add_option("--family", id, "catalog id");
  ric_file->excludes(ric_fam);
  ric->add_option("--set", sets, "bind parameters, NAME=VALUE");
  ric->add_option("--json", json, "write the machine report to this path");
  ric->callback([&] {
    if (file.empty() && id.empty())
      throw CLI::RequiredError("ricci needs --file or --family");
    rc = cmd_ricci(file, id, sets, json);
  });

  auto* cat = app.add_subcommand("catalog", "list catalog entries or dump one as a file");
  auto* cl = cat->add_subcommand("list", "table of known ids");
  cl->add_option("--json", json, "write the machine report to this path");
  cl->callback([&] { rc = cmd_catalog_list(json); });
  auto* cd = cat->add_subcommand("dump", "write a catalog entry in the file format");
  cd->add_option("id", id, "catalog id")->required();
  cd->add_option("--set", sets, "bind parameters, NAME=VALUE");
  cd->add_option("-o,--out", out_path, "output path (default stdout)");
  cd->callback([&] { rc = cmd_catalog_dump(id, sets, out_path); });
  cat->require_subcommand(1);

  auto* ev = app.add_subcommand("evolve", "integrate the profile equation of a family");
  ev->add_option("--family", id, "family id (F1, F2, F4, F5)")->required();
  ev->add_option("--set", sets, "bind parameters, NAME=VALUE");
  ev->add_option("--t-end", t_end, "integration horizon")->capture_default_str();
  ev->add_option("--tol", tol, "local error tolerance")->capture_default_str();
  ev->add_option("--json", json, "write the machine report to this path");
  ev->callback([&] { rc = cmd_evolve(id, sets, t_end, tol, json); });

  auto* hol = app.add_subcommand("holonomy", "curvature span rank of the evolved metric");
  hol->add_option("--family", id, "family id (F1, F2, F4, F5)")->required();
  hol->add_option("--set", sets, "bind parameters, NAME=VALUE");
  hol->add_option("--times", times, "sample times (default 0, 0.05, 0.1)")->delimiter(',');
  hol->add_option("--tol", tol, "local error tolerance")->capture_default_str();
  hol->add_option("--json", json, "write the machine report to this path");
  hol->callback([&] { rc = cmd_holonomy(id, sets, times, tol, json); });

  auto* g2c = app.add_subcommand("g2", "certify the evolved metric of a rank-one extension");
  g2c->add_option("--kind", kind, "extension kind: K or Ktilde")->required();
  g2c->add_option("--set", sets, "bind parameters, NAME=VALUE");
  g2c->add_option("--t-end", t_end, "integration horizon")->capture_default_str();
  g2c->add_option("--tol", tol, "local error tolerance")->capture_default_str();
  g2c->add_option("--json", json, "write the machine report to this path");
  g2c->callback([&] { rc = cmd_g2(kind, sets, t_end, tol, json); });

  auto* ver = app.add_subcommand("verify", "run the pinned reproduction suite");
  ver->alias("verify-paper");
  ver->add_option("--criterion", numbers, "run selected checks only (1..14)")
      ->check(CLI::Range(1, 14));
  ver->add_option("--seed", seed, "seed for the randomized suites")->capture_default_str();
  ver->add_option("--json", json, "write the machine report to this path");
  ver->callback([&] { rc = cmd_verify(numbers, seed, json); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const hlab::StructureParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
