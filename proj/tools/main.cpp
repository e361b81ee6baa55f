#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "catalog.hpp"
#include "hodgekp/checks.hpp"
#include "hodgekp/error.hpp"
#include "hodgekp/operators.hpp"
#include "hodgekp/parallel.hpp"
#include "hodgekp/serialize.hpp"
#include "hodgekp/tau.hpp"

namespace fs = std::filesystem;
using namespace hodgekp;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

struct PointFlags {
  std::string q, p, s;

  bool given() const { return !q.empty() || !p.empty() || !s.empty(); }
  CurveParams parse() const {
    if (q.empty() || p.empty() || s.empty()) throw Error("--q, --p and --s must be given together");
    return CurveParams::make(parse_rational(q), parse_rational(p), parse_rational(s));
  }
};

std::string file_tag(const Rational& r) {
  std::string s = to_string(r);
  for (auto& ch : s) {
    if (ch == '-') ch = 'm';
    if (ch == '/') ch = 'd';
  }
  return s;
}

std::string report_name(const CheckOutcome& o) {
  std::string n = o.check;
  if (o.point) n += "__q" + file_tag(o.point->q) + "_p" + file_tag(o.point->p) + "_s" + file_tag(o.point->s);
  return n + ".json";
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

struct Pair {
  std::string check;
  std::optional<CurveParams> point;
};

struct Slot {
  std::optional<CheckOutcome> outcome;
  std::string config_error;
  std::string invariant_error;
  std::string diff;
  double ms = 0;
};

int run_verify(const std::vector<std::string>& names, const PointFlags& pf, const std::string& catalog_path,
               const CheckOptions& opt, const std::string& format, const std::string& out_dir) {
  std::vector<std::string> checks;
  for (const auto& n : names) {
    if (n == "all")
      for (const auto& c : check_registry()) checks.push_back(c.name);
    else
      checks.push_back(find_check(n).name);
  }
  std::vector<CurveParams> points;
  if (pf.given())
    points.push_back(pf.parse());
  else
    points = cli::load_catalog(catalog_path);

  std::vector<Pair> pairs;
  for (const auto& c : checks) {
    if (!find_check(c).per_point || (c == "identification" && opt.perturbed))
      pairs.push_back({c, std::nullopt});
    else
      for (const auto& pt : points) pairs.push_back({c, pt});
  }

  std::vector<Slot> slots(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    try {
      slots[i].outcome = run_check(pairs[i].check, pairs[i].point, opt);
    } catch (const InvariantViolation& e) {
      slots[i].invariant_error = e.what();
      slots[i].diff = e.diff();
    } catch (const Error& e) {
      slots[i].config_error = e.what();
    }
    slots[i].ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  });

  if (!out_dir.empty()) fs::create_directories(out_dir);
  Json summary = {{"engineVersion", kEngineVersion}, {"results", Json::array()}};
  Json timing = {{"unit", "ms"}, {"pairs", Json::array()}};
  std::map<std::string, double> per_check;
  int exit_code = 0, passed = 0, failed = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const Slot& s = slots[i];
    const std::string where = pairs[i].point ? pairs[i].point->label() : "-";
    Json entry = {{"check", pairs[i].check}};
    if (pairs[i].point) entry["point"] = to_json(*pairs[i].point);
    if (!s.invariant_error.empty()) {
      exit_code = kExitInvariant;
      const std::string diff_file = "invariant-violation__" + pairs[i].check + ".txt";
      const fs::path diff_path = out_dir.empty() ? fs::path(diff_file) : fs::path(out_dir) / diff_file;
      write_file(diff_path, pairs[i].check + " at " + where + "\n" + s.invariant_error + "\n" + s.diff + "\n");
      entry["status"] = "invariant-violation";
      entry["message"] = s.invariant_error;
      entry["diff"] = diff_path.string();
      std::cerr << "invariant violation in " << pairs[i].check << " at " << where << ": " << s.invariant_error
                << " (diff written to " << diff_path.string() << ")\n";
    } else if (!s.config_error.empty()) {
      if (exit_code != kExitInvariant) exit_code = kExitUsage;
      entry["status"] = "config-error";
      entry["message"] = s.config_error;
      std::cerr << "error in " << pairs[i].check << " at " << where << ": " << s.config_error << "\n";
    } else {
      const CheckOutcome& o = *s.outcome;
      (o.passed ? passed : failed)++;
      if (!o.passed && exit_code == 0) exit_code = kExitFail;
      entry["status"] = o.passed ? "pass" : "fail";
      entry["summary"] = o.summary;
      if (!out_dir.empty()) {
        entry["report"] = report_name(o);
        write_file(fs::path(out_dir) / report_name(o), o.report.dump(2) + "\n");
      }
      if (format == "text")
        std::cout << (o.passed ? "PASS  " : "FAIL  ") << pairs[i].check << "  " << where << "  " << o.summary << "\n";
    }
    summary["results"].push_back(entry);
    timing["pairs"].push_back({{"check", pairs[i].check}, {"point", where}, {"ms", s.ms}});
    per_check[pairs[i].check] += s.ms;
  }
  timing["perCheck"] = per_check;
  summary["passed"] = passed;
  summary["failed"] = failed;
  summary["status"] = exit_code == 0 ? "pass" : "fail";
  if (format == "json") std::cout << summary.dump(2) << "\n";
  else std::cout << passed << " passed, " << failed << " failed\n";
  if (!out_dir.empty()) {
    write_file(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");
    write_file(fs::path(out_dir) / "timing.json", timing.dump(2) + "\n");
  }
  return exit_code;
}

int run_tau(const std::string& kind_name, int W, const PointFlags& pf, const std::string& out) {
  const TauKind kind = tau_kind_from_string(kind_name);
  TauSeries tau;
  auto point = [&] {
    if (!pf.given()) throw Error(kind_name + " needs --q, --p and --s");
    return pf.parse();
  };
  switch (kind) {
    case TauKind::KW: tau = kw_tau(W); break;
    case TauKind::BGW: tau = bgw_tau(W); break;
    case TauKind::HodgeZ: tau = hodge_partition(point(), W, HodgeMode::standard); break;
    case TauKind::ThetaZ: tau = hodge_partition(point(), W, HodgeMode::theta); break;
    case TauKind::tau_qp: {
      auto r = theorem_hodge_check(point(), W);
      if (!r.report.passed) throw InvariantViolation("the two constructions of tau_qp disagree", r.report.failures.empty() ? "" : r.report.failures.front());
      tau = r.tau;
      break;
    }
    case TauKind::tau_theta_qp: {
      auto r = theorem_theta_check(point(), W);
      if (!r.report.passed) throw InvariantViolation("the two constructions of tau_theta_qp disagree", r.report.failures.empty() ? "" : r.report.failures.front());
      tau = r.tau;
      break;
    }
  }
  const std::string text = to_json(tau).dump(2) + "\n";
  if (out.empty()) std::cout << text;
  else write_file(out, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the Hodge/KP tau-function identities"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "run named checks at one point or over the catalog");
  std::vector<std::string> names;
  PointFlags pf;
  std::string catalog, format = "text", out;
  int weight = 0, order = 0, y_weight = 0;
  std::vector<std::string> hbars;
  bool perturbed = false;
  verify->add_option("check", names, "check names (see list-checks), or all")->required();
  verify->add_option("--q", pf.q, "q as a rational a/b");
  verify->add_option("--p", pf.p, "p as a rational a/b");
  verify->add_option("--s", pf.s, "square root of p + q");
  verify->add_option("--weight", weight, "truncation weight W (per-check default otherwise)");
  verify->add_option("--order", order, "series order K, at least 2W + 2");
  verify->add_option("--y-weight", y_weight, "largest y-weight of the bilinear identity (kp-* checks)");
  verify->add_option("--hbar", hbars, "hbar values for the kp-* checks (repeatable; default 1 and 1/2)");
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out, "directory for per-check reports, summary.json and timing.json");
  verify->add_flag("--perturbed", perturbed, "identification: run the out-of-family negative control");
  verify->add_option("--catalog", catalog, "catalog file with 'point = q p s' lines");

  auto* tau = app.add_subcommand("tau", "dump a truncated tau-function as JSON");
  std::string kind;
  PointFlags tpf;
  int tau_weight = 0;
  std::string tau_out;
  tau->add_option("kind", kind, "KW, BGW, HodgeZ, ThetaZ, tau_qp or tau_theta_qp")->required();
  tau->add_option("--weight", tau_weight, "truncation weight")->required();
  tau->add_option("--q", tpf.q, "q as a rational a/b");
  tau->add_option("--p", tpf.p, "p as a rational a/b");
  tau->add_option("--s", tpf.s, "square root of p + q");
  tau->add_option("--out", tau_out, "output file (stdout if omitted)");

  auto* list = app.add_subcommand("list-checks", "print the check vocabulary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*list) {
      for (const auto& c : check_registry())
        std::cout << c.name << "  " << c.description << (c.per_point ? "" : " (point-independent)") << "\n";
      return 0;
    }
    if (*tau) return run_tau(kind, tau_weight, tpf, tau_out);

    CheckOptions opt;
    if (weight != 0) opt.weight = weight;
    if (order != 0) opt.order = order;
    if (y_weight != 0) opt.y_weight = y_weight;
    if (!hbars.empty()) {
      opt.hbars.clear();
      for (const auto& h : hbars) {
        Rational v = parse_rational(h);
        if (v == 0) throw Error("hbar must be nonzero");
        opt.hbars.push_back(v);
      }
    }
    opt.perturbed = perturbed;
    return run_verify(names, pf, catalog, opt, format, out);
  } catch (const InvariantViolation& e) {
    const std::string path = tau_out.empty() ? "invariant-violation.txt" : tau_out + ".diff.txt";
    write_file(path, std::string(e.what()) + "\n" + e.diff() + "\n");
    std::cerr << "invariant violation: " << e.what() << " (diff written to " << path << ")\n";
    return kExitInvariant;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
