// Command-line front end. Every command prints one JSON document (or CSV
// for sweeps) on stdout and is byte-deterministic for a fixed seed.
//
// Exit codes: 0 success, 1 a verification or demonstration failed,
// 2 malformed input.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pgauge/demos.hpp"
#include "pgauge/indexes.hpp"
#include "pgauge/inefficiency.hpp"
#include "pgauge/json_io.hpp"
#include "pgauge/pareto.hpp"
#include "pgauge/point.hpp"
#include "pgauge/policies.hpp"
#include "pgauge/sets.hpp"
#include "pgauge/verify.hpp"

namespace {

using pgauge::io::json;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PARETO_GAUGE_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 42;
}

/// Inline JSON, the contents of a file when the argument starts with '@',
/// or a bare label (e.g. "harmonic", "maxmin-fair") taken as a JSON string.
json parse_input(const std::string& arg, const std::string& field) {
  std::string text = arg;
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) {
      throw std::invalid_argument("field '" + field + "': cannot open file " +
                                  arg.substr(1));
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    const bool label =
        !text.empty() &&
        std::all_of(text.begin(), text.end(), [](unsigned char c) {
          return std::isalnum(c) || c == '-' || c == '_' || c == '(' ||
                 c == ')' || c == '.' || c == '+';
        });
    if (label) return json(text);
    throw std::invalid_argument("field '" + field + "': not valid JSON");
  }
  return j;
}

pgauge::SmnFamily parse_smn(const std::string& s) {
  double m = 0.0;
  int n = 0;
  if (std::sscanf(s.c_str(), "M=%lf,N=%d", &m, &n) != 2) {
    throw std::invalid_argument(
        "field 'smn': expected the form M=<real>,N=<int>");
  }
  try {
    return pgauge::SmnFamily(m, n);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("field 'smn': ") + e.what());
  }
}

std::vector<double> parse_ms(const std::string& s) {
  std::vector<double> ms;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::string cell = s.substr(start, comma - start);
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end == cell.c_str() || *end != '\0') {
      throw std::invalid_argument("field 'ms': '" + cell +
                                  "' is not a number");
    }
    ms.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (ms.empty()) throw std::invalid_argument("field 'ms': empty list");
  return ms;
}

std::optional<pgauge::SmnObjective> closed_form_label(const std::string& s) {
  if (s == "sum") return pgauge::SmnObjective::Sum;
  if (s == "min") return pgauge::SmnObjective::Min;
  if (s == "product") return pgauge::SmnObjective::Product;
  return std::nullopt;
}

pgauge::FiniteUtilitySet grid_with_forms(const pgauge::SmnFamily& family,
                                         int resolution) {
  std::vector<pgauge::UtilityPoint> pts =
      pgauge::discretize(pgauge::smn_halfspaces(family), resolution).points();
  for (pgauge::SmnObjective obj :
       {pgauge::SmnObjective::Sum, pgauge::SmnObjective::Min,
        pgauge::SmnObjective::Product}) {
    pts.push_back(pgauge::smn_closed_form(obj, family));
  }
  return pgauge::FiniteUtilitySet(std::move(pts));
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

const char* verdict_name(pgauge::Monotonicity m) {
  switch (m) {
    case pgauge::Monotonicity::StrictlyMonotone: return "strictly-monotone";
    case pgauge::Monotonicity::MonotoneNotStrict: return "monotone-not-strict";
    case pgauge::Monotonicity::NonMonotone: return "non-monotone";
  }
  return "unknown";
}

int run_verify(std::uint64_t seed) {
  const auto results = pgauge::verify::run_all(seed);
  int failed = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.suite << '/' << r.name;
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << '\n';
    if (!r.passed) ++failed;
  }
  std::cout << results.size() << " checks, " << results.size() - failed
            << " passed, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int run_demo(const std::string& name, bool list) {
  const auto reg = pgauge::demos::registry();
  if (list) {
    json names = json::array();
    for (const auto& [n, fn] : reg) names.push_back(n);
    emit(names);
    return 0;
  }
  if (!name.empty()) {
    for (const auto& [n, fn] : reg) {
      if (n == name) {
        const pgauge::demos::DemoReport r = fn();
        emit(pgauge::io::demo_report_to_json(r));
        return r.passed ? 0 : 1;
      }
    }
    throw std::invalid_argument("field 'demo': unknown demonstration '" +
                                name + "'");
  }
  json all = json::array();
  bool ok = true;
  for (const auto& [n, fn] : reg) {
    const pgauge::demos::DemoReport r = fn();
    ok = ok && r.passed;
    all.push_back(pgauge::io::demo_report_to_json(r));
  }
  emit(all);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Fairness and efficiency measurements over finite utility sets"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = default_seed();
  app.add_option("--seed", seed,
                 "Seed for randomized checks (default: PARETO_GAUGE_SEED "
                 "environment variable, else 42)");

  // ---- index
  auto* cmd_index = app.add_subcommand(
      "index", "Evaluate an aggregation index at a point, or classify its "
               "monotonicity");
  std::string ix_spec = "arithmetic";
  std::string ix_point;
  bool ix_classify = false;
  std::size_t ix_n = 3;
  int ix_trials = 400;
  cmd_index->add_option("--f", ix_spec,
                        "Index: a kind name or a JSON object");
  cmd_index->add_option("--point", ix_point, "Utility point as a JSON array");
  cmd_index->add_flag("--classify", ix_classify,
                      "Classify monotonicity instead of evaluating");
  cmd_index->add_option("--n", ix_n, "Dimension for classification");
  cmd_index->add_option("--trials", ix_trials, "Trials for classification");

  // ---- allocate
  auto* cmd_alloc = app.add_subcommand(
      "allocate", "Pick one point from a utility set with a policy");
  std::string al_set, al_smn, al_policy = "maxmin-fair";
  int al_resolution = 51;
  cmd_alloc->add_option("--set", al_set,
                        "Finite set as JSON ({\"points\": [...]}) or @file");
  cmd_alloc->add_option("--smn", al_smn,
                        "Scalable family instance, e.g. M=2,N=3");
  cmd_alloc->add_option("--policy", al_policy,
                        "Policy JSON/label; with --smn the labels sum, min "
                        "and product select exact closed forms");
  cmd_alloc->add_option("--resolution", al_resolution,
                        "Grid resolution when applying a general policy to "
                        "--smn");

  // ---- pareto
  auto* cmd_pareto =
      app.add_subcommand("pareto", "Filter a set down to its maximal points");
  std::string pa_set;
  cmd_pareto->add_option("--set", pa_set, "Finite set as JSON or @file")
      ->required();

  // ---- eps-approx
  auto* cmd_eps = app.add_subcommand(
      "eps-approx", "Build and check a small multiplicative cover of a set");
  std::string ep_set;
  double ep_eps = 0.1;
  cmd_eps->add_option("--set", ep_set, "Finite set as JSON or @file")
      ->required();
  cmd_eps->add_option("--eps", ep_eps, "Coverage tolerance, >= 0");

  // ---- ineff
  auto* cmd_ineff = app.add_subcommand(
      "ineff", "Measure the inefficiency of a baseline point within a set");
  std::string in_set, in_beta, in_f;
  cmd_ineff->add_option("--set", in_set, "Finite set as JSON or @file")
      ->required();
  cmd_ineff->add_option("--beta", in_beta, "Baseline point as a JSON array")
      ->required();
  auto* in_f_opt =
      cmd_ineff->add_option("--f", in_f, "Index for the ratio measure");

  // ---- sweep
  auto* cmd_sweep = app.add_subcommand(
      "sweep", "Evaluate an inefficiency measure across the scalable family");
  std::string sw_policy = "product", sw_measure = "poa", sw_f = "arithmetic";
  std::string sw_ms = "2,10,100";
  int sw_n = 3, sw_resolution = 21;
  std::string sw_format = "csv";
  cmd_sweep->add_option("--policy", sw_policy,
                        "Baseline policy: sum, min, product, or policy JSON");
  cmd_sweep->add_option("--measure", sw_measure, "poa, sdf, or topo");
  cmd_sweep->add_option("--f", sw_f, "Index for the poa measure");
  cmd_sweep->add_option("--ms", sw_ms, "Comma-separated M values");
  cmd_sweep->add_option("--n", sw_n, "Number of players");
  cmd_sweep->add_option("--resolution", sw_resolution, "Grid resolution");
  cmd_sweep->add_option("--format", sw_format, "csv or json");

  // ---- demo
  auto* cmd_demo = app.add_subcommand(
      "demo", "Run executable counterexamples (all of them by default)");
  std::string dm_name;
  bool dm_list = false;
  cmd_demo->add_option("name", dm_name, "Demonstration name");
  cmd_demo->add_flag("--list", dm_list, "List demonstration names");

  // ---- verify
  app.add_subcommand("verify",
                     "Run every registered property check and report "
                     "PASS/FAIL per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    namespace io = pgauge::io;
    using pgauge::FiniteUtilitySet;
    using pgauge::IndexSpec;
    using pgauge::PolicySpec;
    using pgauge::UtilityPoint;

    if (cmd_index->parsed()) {
      const IndexSpec f = io::index_from_json(parse_input(ix_spec, "f"));
      if (ix_classify) {
        const auto v = pgauge::classify_monotonicity(
            f, ix_n, ix_trials, seed);
        json out{{"index", io::index_to_json(f)},
                 {"verdict", verdict_name(v.verdict)}};
        if (v.witness) {
          out["witness"] = json::array({io::point_to_json(v.witness->first),
                                        io::point_to_json(v.witness->second)});
        } else {
          out["witness"] = nullptr;
        }
        emit(out);
        return 0;
      }
      if (ix_point.empty()) {
        throw std::invalid_argument("field 'point': required to evaluate");
      }
      const UtilityPoint p =
          io::point_from_json(parse_input(ix_point, "point"), "point");
      json out{{"index", io::index_to_json(f)},
               {"point", io::point_to_json(p)},
               {"value", io::round_sig(pgauge::eval_index(f, p))}};
      emit(out);
      return 0;
    }

    if (cmd_alloc->parsed()) {
      if (al_set.empty() == al_smn.empty()) {
        throw std::invalid_argument(
            "field 'set': provide exactly one of --set and --smn");
      }
      UtilityPoint pick{0.0};
      if (!al_smn.empty()) {
        const pgauge::SmnFamily family = parse_smn(al_smn);
        if (const auto obj = closed_form_label(al_policy)) {
          pick = pgauge::smn_closed_form(*obj, family);
        } else {
          const PolicySpec policy =
              io::policy_from_json(parse_input(al_policy, "policy"));
          pick = pgauge::apply_policy(policy,
                                      grid_with_forms(family, al_resolution));
        }
      } else {
        const FiniteUtilitySet set =
            io::set_from_json(parse_input(al_set, "set"));
        const PolicySpec policy =
            io::policy_from_json(parse_input(al_policy, "policy"));
        pick = pgauge::apply_policy(policy, set);
      }
      emit(json{{"point", io::point_to_json(pick)}});
      return 0;
    }

    if (cmd_pareto->parsed()) {
      const FiniteUtilitySet set =
          io::set_from_json(parse_input(pa_set, "set"));
      emit(io::front_to_json(pgauge::pareto_filter(set)));
      return 0;
    }

    if (cmd_eps->parsed()) {
      const FiniteUtilitySet set =
          io::set_from_json(parse_input(ep_set, "set"));
      const FiniteUtilitySet subset = pgauge::eps_approx_construct(set, ep_eps);
      const pgauge::EpsCoverage cov =
          pgauge::verify_eps_approx(subset, set, ep_eps);
      json out{{"eps", io::round_sig(ep_eps)},
               {"size", subset.size()},
               {"subset", io::set_to_json(subset)["points"]},
               {"covered", cov.covered}};
      emit(out);
      return cov.covered ? 0 : 1;
    }

    if (cmd_ineff->parsed()) {
      const FiniteUtilitySet set =
          io::set_from_json(parse_input(in_set, "set"));
      const UtilityPoint beta =
          io::point_from_json(parse_input(in_beta, "beta"), "beta");
      std::optional<IndexSpec> f;
      if (in_f_opt->count() > 0) {
        f = io::index_from_json(parse_input(in_f, "f"));
      }
      emit(io::report_to_json(pgauge::make_report(beta, set, f)));
      return 0;
    }

    if (cmd_sweep->parsed()) {
      pgauge::SweepMeasure measure;
      if (sw_measure == "poa") {
        measure = pgauge::SweepMeasure::Poa;
      } else if (sw_measure == "sdf") {
        measure = pgauge::SweepMeasure::Sdf;
      } else if (sw_measure == "topo") {
        measure = pgauge::SweepMeasure::Topo;
      } else {
        throw std::invalid_argument(
            "field 'measure': expected poa, sdf, or topo");
      }
      pgauge::SweepPolicy policy;
      if (const auto obj = closed_form_label(sw_policy)) {
        policy = *obj;
      } else {
        policy = io::policy_from_json(parse_input(sw_policy, "policy"));
      }
      const IndexSpec f = io::index_from_json(parse_input(sw_f, "f"));
      const auto rows = pgauge::sweep_family(policy, measure, f,
                                             parse_ms(sw_ms), sw_n,
                                             sw_resolution);
      if (sw_format == "csv") {
        std::cout << io::sweep_to_csv(rows, sw_measure);
      } else if (sw_format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
          arr.push_back(json{{"M", io::round_sig(r.M)},
                             {"N", r.N},
                             {"policy", r.policy},
                             {"measure", sw_measure},
                             {"value", io::round_sig(r.value)}});
        }
        emit(arr);
      } else {
        throw std::invalid_argument("field 'format': expected csv or json");
      }
      return 0;
    }

    if (cmd_demo->parsed()) {
      return run_demo(dm_name, dm_list);
    }

    return run_verify(seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
