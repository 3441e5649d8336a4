#include "pgauge/json_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace pgauge::io {

namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw std::invalid_argument("field '" + field + "': " + why);
}

const json& require(const json& j, const std::string& field) {
  if (!j.is_object() || !j.contains(field)) bad_field(field, "missing");
  return j.at(field);
}

double require_number(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_number()) bad_field(field, "expected a number");
  return v.get<double>();
}

int require_int(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_number_integer()) bad_field(field, "expected an integer");
  return v.get<int>();
}

std::string require_string(const json& j, const std::string& field) {
  const json& v = require(j, field);
  if (!v.is_string()) bad_field(field, "expected a string");
  return v.get<std::string>();
}

std::vector<double> numbers_from(const json& v, const std::string& field) {
  if (!v.is_array() || v.empty()) bad_field(field, "expected a nonempty array");
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_number()) bad_field(field, "expected numbers only");
    out.push_back(e.get<double>());
  }
  return out;
}

json number_array(const std::vector<double>& xs) {
  json arr = json::array();
  for (double x : xs) arr.push_back(round_sig(x));
  return arr;
}

/// Shortest decimal string that round-trips to exactly this double.
std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

TieBreak tiebreak_from(const json& j) {
  const std::string s = j.is_object() && j.contains("tiebreak")
                            ? require_string(j, "tiebreak")
                            : "lexmax";
  if (s == "lexmin") return TieBreak::LexMin;
  if (s == "lexmax") return TieBreak::LexMax;
  bad_field("tiebreak", "expected 'lexmin' or 'lexmax'");
}

const char* tiebreak_name(TieBreak t) {
  return t == TieBreak::LexMin ? "lexmin" : "lexmax";
}

}  // namespace

double round_sig(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return std::strtod(buf, nullptr);
}

json point_to_json(const UtilityPoint& p) { return number_array(p.coords()); }

UtilityPoint point_from_json(const json& j, const std::string& field) {
  std::vector<double> coords = numbers_from(j, field);
  try {
    return UtilityPoint(std::move(coords));
  } catch (const std::invalid_argument& e) {
    bad_field(field, e.what());
  }
}

json set_to_json(const FiniteUtilitySet& s) {
  json pts = json::array();
  for (const auto& p : s.points()) pts.push_back(point_to_json(p));
  return json{{"points", std::move(pts)}};
}

FiniteUtilitySet set_from_json(const json& j) {
  // Either {"points": [...]} or a bare array of points.
  const json& pts = j.is_array() ? j : require(j, "points");
  if (!pts.is_array() || pts.empty()) {
    bad_field("points", "expected a nonempty array of points");
  }
  std::vector<UtilityPoint> points;
  points.reserve(pts.size());
  for (const auto& e : pts) points.push_back(point_from_json(e, "points"));
  try {
    return FiniteUtilitySet(std::move(points));
  } catch (const std::invalid_argument& e) {
    bad_field("points", e.what());
  }
}

HalfspaceSet halfspaces_from_json(const json& j) {
  const int n = require_int(j, "n");
  if (n < 1) bad_field("n", "expected a positive dimension");
  const json& cs = require(j, "constraints");
  if (!cs.is_array() || cs.empty()) {
    bad_field("constraints", "expected a nonempty array");
  }
  std::vector<LinearConstraint> constraints;
  constraints.reserve(cs.size());
  for (const auto& c : cs) {
    LinearConstraint lc;
    lc.weights = numbers_from(require(c, "weights"), "weights");
    lc.bound = require_number(c, "bound");
    constraints.push_back(std::move(lc));
  }
  try {
    return HalfspaceSet(static_cast<std::size_t>(n), std::move(constraints));
  } catch (const std::invalid_argument& e) {
    bad_field("constraints", e.what());
  }
}

json halfspaces_to_json(const HalfspaceSet& h) {
  json cs = json::array();
  for (const auto& c : h.constraints()) {
    cs.push_back(
        json{{"weights", number_array(c.weights)}, {"bound", round_sig(c.bound)}});
  }
  return json{{"n", h.dim()}, {"constraints", std::move(cs)}};
}

SmnFamily smn_from_json(const json& j) {
  const double m = require_number(j, "M");
  const int n = require_int(j, "N");
  try {
    return SmnFamily(m, n);
  } catch (const std::invalid_argument& e) {
    bad_field("M/N", e.what());
  }
}

json smn_to_json(const SmnFamily& f) {
  return json{{"M", round_sig(f.M())}, {"N", f.N()}};
}

json index_to_json(const IndexSpec& f) {
  switch (f.kind()) {
    case IndexKind::Arithmetic: return json{{"kind", "arithmetic"}};
    case IndexKind::Min:        return json{{"kind", "min"}};
    case IndexKind::Max:        return json{{"kind", "max"}};
    case IndexKind::Geometric:  return json{{"kind", "geometric"}};
    case IndexKind::Harmonic:   return json{{"kind", "harmonic"}};
    case IndexKind::Jain:       return json{{"kind", "jain"}};
    case IndexKind::QuasiArithmetic: {
      const double d = f.delta();
      json delta;
      if (std::isinf(d)) {
        delta = d > 0 ? "inf" : "-inf";
      } else {
        delta = round_sig(d);
      }
      return json{{"kind", "quasi"}, {"delta", std::move(delta)}};
    }
    case IndexKind::Owa:
      return json{{"kind", "owa"}, {"weights", number_array(f.owa_weights())}};
  }
  throw std::logic_error("unreachable index kind");
}

IndexSpec index_from_json(const json& j) {
  if (j.is_string()) {
    // Shorthand: a bare kind string, or quasi(<delta>) as printed by name().
    const std::string s = j.get<std::string>();
    if (s.rfind("quasi(", 0) == 0 && s.size() >= 7 && s.back() == ')') {
      const std::string inner = s.substr(6, s.size() - 7);
      json spec{{"kind", "quasi"}};
      if (inner == "inf" || inner == "+inf" || inner == "-inf") {
        spec["delta"] = inner;
      } else {
        const char* begin = inner.c_str();
        char* end = nullptr;
        const double d = std::strtod(begin, &end);
        if (inner.empty() || end != begin + inner.size()) {
          bad_field("delta", "expected a number, 'inf', or '-inf'");
        }
        spec["delta"] = d;
      }
      return index_from_json(spec);
    }
    return index_from_json(json{{"kind", s}});
  }
  const std::string kind = require_string(j, "kind");
  if (kind == "arithmetic") return IndexSpec::arithmetic();
  if (kind == "min") return IndexSpec::min();
  if (kind == "max") return IndexSpec::max();
  if (kind == "geometric") return IndexSpec::geometric();
  if (kind == "harmonic") return IndexSpec::harmonic();
  if (kind == "jain") return IndexSpec::jain();
  if (kind == "quasi") {
    const json& d = require(j, "delta");
    double delta = 0.0;
    if (d.is_string()) {
      const std::string s = d.get<std::string>();
      if (s == "inf" || s == "+inf") {
        delta = std::numeric_limits<double>::infinity();
      } else if (s == "-inf") {
        delta = -std::numeric_limits<double>::infinity();
      } else {
        bad_field("delta", "expected a number, 'inf', or '-inf'");
      }
    } else if (d.is_number()) {
      delta = d.get<double>();
    } else {
      bad_field("delta", "expected a number, 'inf', or '-inf'");
    }
    try {
      return IndexSpec::quasi_arithmetic(delta);
    } catch (const std::invalid_argument& e) {
      bad_field("delta", e.what());
    }
  }
  if (kind == "owa") {
    std::vector<double> w = numbers_from(require(j, "weights"), "weights");
    try {
      return IndexSpec::owa(std::move(w));
    } catch (const std::invalid_argument& e) {
      bad_field("weights", e.what());
    }
  }
  bad_field("kind", "unknown index kind '" + kind + "'");
}

json policy_to_json(const PolicySpec& p) {
  switch (p.kind()) {
    case PolicySpec::Kind::IndexOpt:
      return json{{"kind", "index-opt"},
                  {"index", index_to_json(p.index())},
                  {"tiebreak", tiebreak_name(p.tiebreak())}};
    case PolicySpec::Kind::MaxMinFair:
      return json{{"kind", "maxmin-fair"},
                  {"tiebreak", tiebreak_name(p.tiebreak())}};
    case PolicySpec::Kind::Fixed:
      return json{{"kind", "fixed"}, {"point", point_to_json(p.fixed_point())}};
  }
  throw std::logic_error("unreachable policy kind");
}

PolicySpec policy_from_json(const json& j) {
  if (j.is_string()) {
    // Shorthand labels used on the command line.
    const std::string s = j.get<std::string>();
    if (s == "maxmin-fair") return PolicySpec::maxmin_fair();
    if (s.size() > 4 && s.ends_with("-opt")) {
      // Catalog-style label, e.g. "geometric-opt" or "quasi(2)-opt".
      return PolicySpec::index_opt(
          index_from_json(json(s.substr(0, s.size() - 4))));
    }
    return PolicySpec::index_opt(index_from_json(json(s)));
  }
  const std::string kind = require_string(j, "kind");
  if (kind == "index-opt") {
    return PolicySpec::index_opt(index_from_json(require(j, "index")),
                                 tiebreak_from(j));
  }
  if (kind == "maxmin-fair") return PolicySpec::maxmin_fair(tiebreak_from(j));
  if (kind == "fixed") {
    return PolicySpec::fixed(point_from_json(require(j, "point"), "point"));
  }
  bad_field("kind", "unknown policy kind '" + kind + "'");
}

json front_to_json(const ParetoFront& f) {
  json pts = json::array();
  for (const auto& p : f.points.points()) pts.push_back(point_to_json(p));
  return json{{"front", std::move(pts)}, {"source_size", f.source_size}};
}

ParetoFront front_from_json(const json& j) {
  const json& pts = require(j, "front");
  if (!pts.is_array() || pts.empty()) {
    bad_field("front", "expected a nonempty array of points");
  }
  std::vector<UtilityPoint> points;
  points.reserve(pts.size());
  for (const auto& e : pts) points.push_back(point_from_json(e, "front"));
  return ParetoFront{FiniteUtilitySet(std::move(points)),
                     static_cast<std::size_t>(require_int(j, "source_size"))};
}

json report_to_json(const InefficiencyReport& r) {
  json out;
  out["beta"] = point_to_json(r.beta_point);
  out["f"] = r.f_used ? index_to_json(*r.f_used) : json(nullptr);
  out["poa"] = r.poa ? json(round_sig(*r.poa)) : json(nullptr);
  out["sdf"] = round_sig(r.sdf);
  out["topo"] = round_sig(r.topo);
  out["poa_witness"] =
      r.poa_witness ? point_to_json(*r.poa_witness) : json(nullptr);
  out["sdf_witness"] = point_to_json(r.sdf_witness);
  out["topo_witness"] = point_to_json(r.topo_witness);
  out["notes"] = r.notes;
  return out;
}

json demo_report_to_json(const demos::DemoReport& r) {
  json artifacts = json::object();
  for (const auto& [name, table] : r.artifacts) {
    artifacts[name] = table_to_csv(table);
  }
  return json{{"name", r.name},
              {"passed", r.passed},
              {"narrative", r.narrative},
              {"artifacts", std::move(artifacts)}};
}

std::string table_to_csv(const demos::Table& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out << ',';
    out << t.columns[i];
  }
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << shortest(row[i]);
    }
    out << '\n';
  }
  return out.str();
}

demos::Table table_from_csv(const std::string& csv) {
  demos::Table t;
  std::istringstream in(csv);
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (header) {
      t.columns = std::move(cells);
      header = false;
      continue;
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& cell : cells) {
      char* end = nullptr;
      const double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str() || *end != '\0') {
        throw std::invalid_argument("csv cell '" + cell +
                                    "' is not a number");
      }
      row.push_back(v);
    }
    if (row.size() != t.columns.size()) {
      throw std::invalid_argument("csv row width does not match header");
    }
    t.rows.push_back(std::move(row));
  }
  if (t.columns.empty()) throw std::invalid_argument("csv has no header row");
  return t;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         const std::string& measure) {
  std::ostringstream out;
  out << "M,N,policy,measure,value\n";
  char buf[64];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%.10g", r.M);
    out << buf << ',' << r.N << ',' << r.policy << ',' << measure << ',';
    std::snprintf(buf, sizeof(buf), "%.10g", r.value);
    out << buf << '\n';
  }
  return out.str();
}

}  // namespace pgauge::io
