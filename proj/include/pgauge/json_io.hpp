#ifndef PGAUGE_JSON_IO_HPP
#define PGAUGE_JSON_IO_HPP

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "pgauge/demos.hpp"
#include "pgauge/indexes.hpp"
#include "pgauge/inefficiency.hpp"
#include "pgauge/pareto.hpp"
#include "pgauge/point.hpp"
#include "pgauge/policies.hpp"
#include "pgauge/sets.hpp"

namespace pgauge::io {

using nlohmann::json;

// Emitted numbers carry 10 significant digits. Parse errors throw
// std::invalid_argument naming the offending field. Demo artifact CSVs
// are the exception to the 10-digit rule: they use shortest round-trip
// formatting so tables survive a write/read cycle exactly.

/// Round to 10 significant decimal digits (identity for non-finite).
double round_sig(double x);

json point_to_json(const UtilityPoint& p);
UtilityPoint point_from_json(const json& j, const std::string& field);

json set_to_json(const FiniteUtilitySet& s);                // {"points": [[...]]}
FiniteUtilitySet set_from_json(const json& j);

HalfspaceSet halfspaces_from_json(const json& j);           // {"n":., "constraints":[...]}
json halfspaces_to_json(const HalfspaceSet& h);

SmnFamily smn_from_json(const json& j);                     // {"M":., "N":.}
json smn_to_json(const SmnFamily& f);

json index_to_json(const IndexSpec& f);                     // {"kind": ...}
IndexSpec index_from_json(const json& j);

json policy_to_json(const PolicySpec& p);
PolicySpec policy_from_json(const json& j);

json front_to_json(const ParetoFront& f);                   // {"front":., "source_size":.}
ParetoFront front_from_json(const json& j);

json report_to_json(const InefficiencyReport& r);

json demo_report_to_json(const demos::DemoReport& r);

/// CSV with header row, '.' decimal separator, ',' field separator.
std::string table_to_csv(const demos::Table& t);
demos::Table table_from_csv(const std::string& csv);

/// Sweep rows as CSV with header M,N,policy,measure,value.
std::string sweep_to_csv(const std::vector<SweepRow>& rows,
                         const std::string& measure);

}  // namespace pgauge::io

#endif  // PGAUGE_JSON_IO_HPP
