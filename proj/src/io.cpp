#include "schroeder/io.hpp"

#include <algorithm>
#include <sstream>

#include "schroeder/errors.hpp"

namespace schroeder {

Json trace_to_json(const EvolutionTrace& trace) {
  Json snaps = Json::array();
  for (const auto& p : trace.snapshots) snaps.push_back(to_tokens(p));
  return {
      {"flavor", std::string(flavor_name(trace.flavor))},
      {"start", to_tokens(trace.start)},
      {"snapshots", snaps},
      {"creation_order", trace.creation_order},
  };
}

EvolutionTrace trace_from_json(const Json& j) {
  EvolutionTrace t;
  t.flavor = parse_flavor(j.at("flavor").get<std::string>());
  t.start = parse_path(j.at("start").get<std::string>());
  for (const auto& s : j.at("snapshots")) t.snapshots.push_back(parse_path(s.get<std::string>()));
  t.creation_order = j.at("creation_order").get<std::vector<int>>();
  return t;
}

namespace {

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({e.left, e.right});
  return out;
}

std::vector<Edge> edges_from(const Json& j) {
  std::vector<Edge> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::InvalidMatching, "edge must be a pair");
    out.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return out;
}

}  // namespace

Json matching_to_json(const HybridMatching& m) {
  return {
      {"n", m.n_vertices()},
      {"edges", edges_json(m.edges())},
      {"special", edges_json(m.special_edges())},
  };
}

HybridMatching matching_from_json(const Json& j) {
  try {
    return HybridMatching(j.at("n").get<int>(), edges_from(j.at("edges")),
                          j.contains("special") ? edges_from(j.at("special")) : std::vector<Edge>{});
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::InvalidMatching, e.what());
  }
}

Json path_class_to_json(const PathClass& c) {
  return {
      {"dyck", c.dyck},
      {"esdp", c.esdp},
      {"osdp", c.osdp},
      {"little_schroeder", c.little_schroeder},
      {"big_schroeder", c.big_schroeder},
  };
}

Json series_to_json(const FormalPowerSeries& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(c.get_str());
  return out;
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "text") return TableFormat::Text;
  if (text == "csv") return TableFormat::Csv;
  if (text == "json") return TableFormat::Json;
  fail(ErrorCode::OutOfRange, "unknown table format '" + std::string(text) + "'");
}

std::string format_count_table(const CountTable& table, TableFormat format) {
  const std::string name(class_name(table.kind));
  std::ostringstream out;
  switch (format) {
    case TableFormat::Csv:
      out << "class,length,count\n";
      for (const auto& r : table.rows) out << name << ',' << r.length << ',' << r.count.get_str() << '\n';
      break;
    case TableFormat::Json: {
      Json rows = Json::array();
      for (const auto& r : table.rows) rows.push_back({{"length", r.length}, {"count", r.count.get_str()}});
      out << Json{{"class", name}, {"rows", rows}}.dump(2) << '\n';
      break;
    }
    case TableFormat::Text: {
      std::vector<std::string> top{"length"}, bottom{name};
      for (const auto& r : table.rows) {
        top.push_back(std::to_string(r.length));
        bottom.push_back(r.count.get_str());
      }
      for (std::size_t i = 0; i < top.size(); ++i) {
        const std::size_t w = std::max(top[i].size(), bottom[i].size());
        top[i].insert(i == 0 ? top[i].size() : 0, w - top[i].size(), ' ');
        bottom[i].insert(i == 0 ? bottom[i].size() : 0, w - bottom[i].size(), ' ');
      }
      auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "  " : "") + v[i];
        return s;
      };
      out << join(top) << '\n' << join(bottom) << '\n';
      break;
    }
  }
  return out.str();
}

}  // namespace schroeder
