#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "schroeder/enumerate.hpp"
#include "schroeder/evolve.hpp"
#include "schroeder/matchings.hpp"
#include "schroeder/paths.hpp"
#include "schroeder/series.hpp"

namespace schroeder {

using Json = nlohmann::ordered_json;

/// {"flavor", "start", "snapshots", "creation_order"}
Json trace_to_json(const EvolutionTrace& trace);
EvolutionTrace trace_from_json(const Json& j);

/// {"n", "edges": [[l, r], ...], "special": [[l, r], ...]}
Json matching_to_json(const HybridMatching& m);
HybridMatching matching_from_json(const Json& j);

Json path_class_to_json(const PathClass& c);

/// Coefficients as strings ("3", "-1/2").
Json series_to_json(const FormalPowerSeries& f);

struct CountRow {
  int length = 0;
  Integer count;
};

struct CountTable {
  PathClassKind kind = PathClassKind::Dyck;
  std::vector<CountRow> rows;
};

enum class TableFormat { Text, Csv, Json };
TableFormat parse_table_format(std::string_view text);

/// Text is two aligned lines, "length" and the class name, one column per length.
std::string format_count_table(const CountTable& table, TableFormat format);

}  // namespace schroeder
