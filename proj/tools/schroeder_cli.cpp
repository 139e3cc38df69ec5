#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "schroeder/enumerate.hpp"
#include "schroeder/errors.hpp"
#include "schroeder/evolve.hpp"
#include "schroeder/io.hpp"
#include "schroeder/matchings.hpp"
#include "schroeder/paths.hpp"
#include "schroeder/permutations.hpp"
#include "schroeder/series.hpp"
#include "schroeder/verify.hpp"

using namespace schroeder;

namespace {

struct Args {
  bool json = false;
  std::string path;
  std::string flavor = "big";
  bool full = false;
  bool trace = false;
  std::string matching;
  std::string matching_file;
  std::string perm;
  int n = 0;
  std::string cls;
  int max_length = 14;
  int limit = kDefaultMaxLength;
  std::string mode = "exhaustive";
  std::string format;
  unsigned threads = 1;
  std::optional<int> specials;
  std::optional<int> horizontals;
  std::string series_name;
  std::size_t order = 12;
  std::string suite = "all";
  std::optional<int> verify_max_length;
  std::optional<int> verify_n;
  std::string out;
};

void emit(const Args& a, const Json& j, const std::string& text) {
  if (a.json)
    std::cout << j.dump(2) << '\n';
  else
    std::cout << text << '\n';
}

std::string class_list(const LatticePath& p) {
  const auto c = classify(p);
  std::string out;
  auto add = [&](bool on, std::string_view name) {
    if (!on) return;
    if (!out.empty()) out += ' ';
    out += name;
  };
  add(c.dyck, "dyck");
  add(c.esdp, "esdp");
  add(c.osdp, "osdp");
  add(c.little_schroeder, "little-schroeder");
  add(c.big_schroeder, "big-schroeder");
  add(is_hybrid(p, Flavor::Little), "little-hybrid");
  add(is_hybrid(p, Flavor::Big), "big-hybrid");
  return out.empty() ? "none" : out;
}

EvolutionTrace trace_of(const LatticePath& p, Flavor f) {
  const auto c = classify(p);
  const bool start = f == Flavor::Little ? c.esdp : c.osdp;
  return start ? evolve_full(p, f) : evolve_to_schroeder(p, f);
}

std::string trace_text(const EvolutionTrace& t) {
  std::string out = to_tokens(t.start);
  for (const auto& s : t.snapshots) out += "\n" + to_tokens(s);
  out += "\ncreation order:";
  for (int v : t.creation_order) out += " " + std::to_string(v);
  return out;
}

FormalPowerSeries named_series(const std::string& name, std::size_t order) {
  if (name == "conjecture") return conjectured_length_series(order);
  const auto g = gf_catalog(order);
  if (name == "s") return g.s;
  if (name == "S") return g.S;
  if (name == "E") return g.E;
  if (name == "O") return g.O;
  if (name == "L") return g.L;
  if (name == "B") return g.B;
  if (name == "R") return g.R;
  fail(ErrorCode::OutOfRange, "unknown series '" + name + "'");
}

int run_verify(const Args& a) {
  VerifyOptions o;
  o.threads = a.threads;
  if (a.verify_max_length) o.max_length = *a.verify_max_length;
  if (a.verify_n) o.conjecture_n = *a.verify_n;
  const auto reports = run_suite(parse_suite(a.suite), o);
  bool ok = true;
  Json j = Json::array();
  std::ostringstream text;
  for (const auto& r : reports) {
    ok = ok && r.passed();
    Json checks = Json::array();
    text << "[" << suite_name(r.suite) << "] " << (r.passed() ? "PASS" : "FAIL") << " (" << r.seconds << " s)\n";
    for (const auto& c : r.checks) {
      text << "  " << (c.passed ? "PASS" : "FAIL") << "  " << c.name << ": " << c.detail << '\n';
      checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    j.push_back({{"suite", std::string(suite_name(r.suite))}, {"passed", r.passed()}, {"seconds", r.seconds},
                 {"checks", checks}});
  }
  text << (ok ? "all checks passed" : "verification FAILED");
  emit(a, j, text.str());
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Special-step Dyck paths, hybrid paths and their bijections"};
  app.require_subcommand(1);
  Args a;

  auto verb = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    s->add_flag("--json", a.json, "JSON output");
    return s;
  };
  auto path_opt = [&](CLI::App* s) { s->add_option("--path", a.path, "path tokens")->required(); };
  auto flavor_opt = [&](CLI::App* s) {
    s->add_option("--flavor", a.flavor, "little or big")->check(CLI::IsMember({"little", "big", "e", "E"}));
  };

  auto* classify_cmd = verb("classify", "list the classes a path belongs to");
  path_opt(classify_cmd);

  auto* evolve_cmd = verb("evolve", "apply the flatten/slide map");
  path_opt(evolve_cmd);
  flavor_opt(evolve_cmd);
  evolve_cmd->add_flag("--full", a.full, "evolve until no special step is left");
  evolve_cmd->add_flag("--trace", a.trace, "print the evolution trace as JSON");

  auto* devolve_cmd = verb("devolve", "invert the flatten/slide map");
  path_opt(devolve_cmd);
  flavor_opt(devolve_cmd);
  devolve_cmd->add_flag("--full", a.full, "devolve until no horizontal step is left");

  auto* trace_cmd = verb("trace", "full evolution with creation times");
  path_opt(trace_cmd);
  flavor_opt(trace_cmd);

  auto* to_matching_cmd = verb("to-matching", "little hybrid path to matching");
  path_opt(to_matching_cmd);

  auto* from_matching_cmd = verb("from-matching", "matching to little hybrid path");
  auto* m_text = from_matching_cmd->add_option("--matching", a.matching, "e.g. (1,4),(2,3)*");
  auto* m_file = from_matching_cmd->add_option("--file", a.matching_file, "JSON matching file");
  m_text->excludes(m_file);

  auto* extract_cmd = verb("perm-extract", "creation-order permutation of an ESDP/OSDP");
  path_opt(extract_cmd);
  flavor_opt(extract_cmd);

  auto* build_cmd = verb("perm-build", "OSDP (big) or ESDP (little) of a 231-avoiding permutation");
  build_cmd->add_option("--perm", a.perm, "one-line notation")->required();
  flavor_opt(build_cmd);

  auto* lengths_cmd = verb("lengths", "path lengths over all 231-avoiding permutations of [n]");
  lengths_cmd->add_option("--n", a.n, "permutation size")->required()->check(CLI::Range(0, 14));

  auto* counts_cmd = verb("counts", "count paths of a class for lengths 0..max");
  counts_cmd->add_option("--class", a.cls, "path class")
      ->required()
      ->check(CLI::IsMember({"dyck", "esdp", "osdp", "little-schroeder", "big-schroeder", "little-hybrid",
                             "big-hybrid"}));
  counts_cmd->add_option("--max-length", a.max_length, "largest length")->check(CLI::NonNegativeNumber);
  counts_cmd->add_option("--mode", a.mode, "exhaustive or closed-form")
      ->check(CLI::IsMember({"exhaustive", "closed-form"}));
  counts_cmd->add_option("--format", a.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  counts_cmd->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);
  counts_cmd->add_option("--specials", a.specials, "exact number of special steps");
  counts_cmd->add_option("--horizontals", a.horizontals, "exact number of horizontal steps");
  counts_cmd->add_option("--limit", a.limit, "largest length exhaustive mode may enumerate")
      ->check(CLI::Range(0, kHardMaxLength));

  auto* series_cmd = verb("series", "generating function coefficients");
  series_cmd->add_option("--name", a.series_name, "s, S, E, O, L, B, R or conjecture")
      ->required()
      ->check(CLI::IsMember({"s", "S", "E", "O", "L", "B", "R", "conjecture"}));
  series_cmd->add_option("--order", a.order, "number of coefficients")->check(CLI::Range(1, 2000));

  auto* verify_cmd = verb("verify", "run invariant suites");
  verify_cmd->add_option("--suite", a.suite, "suite name")
      ->check(CLI::IsMember({"paths", "evolve", "matchings", "permutations", "series", "enumerate", "identities",
                             "conjecture", "all"}));
  verify_cmd->add_option("--max-length", a.verify_max_length, "length bound of the round-trip sweeps")
      ->check(CLI::Range(0, kDefaultMaxLength));
  verify_cmd->add_option("--n", a.verify_n, "largest n for the length distribution check")->check(CLI::Range(1, 13));
  verify_cmd->add_option("--threads", a.threads, "worker threads")->check(CLI::PositiveNumber);

  auto* render_cmd = verb("render", "draw a path");
  path_opt(render_cmd);
  render_cmd->add_option("--format", a.format, "tokens, ascii or svg")->check(CLI::IsMember({"tokens", "ascii", "svg"}));
  render_cmd->add_option("--out", a.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const Flavor flavor = parse_flavor(a.flavor);

    if (*classify_cmd) {
      const auto p = parse_path(a.path);
      Json j = path_class_to_json(classify(p));
      j["little_hybrid"] = is_hybrid(p, Flavor::Little);
      j["big_hybrid"] = is_hybrid(p, Flavor::Big);
      emit(a, j, class_list(p));
    } else if (*evolve_cmd || *trace_cmd) {
      const auto p = parse_path(a.path);
      if (a.trace || *trace_cmd) {
        const auto t = trace_of(p, flavor);
        if (a.trace || a.json)
          std::cout << trace_to_json(t).dump(2) << '\n';
        else
          std::cout << trace_text(t) << '\n';
      } else {
        const auto q = a.full ? trace_of(p, flavor).final_path() : evolve_step(p, flavor);
        emit(a, {{"path", to_tokens(p)}, {"result", to_tokens(q)}}, to_tokens(q));
      }
    } else if (*devolve_cmd) {
      const auto p = parse_path(a.path);
      const auto q = a.full ? devolve_full(p, flavor) : devolve_step(p, flavor);
      Json j{{"path", to_tokens(p)}, {"result", to_tokens(q)}};
      if (!a.full) j["last_added"] = last_added_horizontal(p, flavor);
      emit(a, j, to_tokens(q));
    } else if (*to_matching_cmd) {
      const auto m = path_to_matching(parse_path(a.path));
      emit(a, matching_to_json(m), format_matching(m));
    } else if (*from_matching_cmd) {
      HybridMatching m;
      if (!a.matching_file.empty()) {
        std::ifstream in(a.matching_file);
        if (!in) throw CLI::FileError::Missing(a.matching_file);
        Json j;
        try {
          j = Json::parse(in);
        } catch (const nlohmann::json::exception& e) {
          fail(ErrorCode::InvalidMatching, e.what());
        }
        m = matching_from_json(j);
      } else if (!a.matching.empty()) {
        m = parse_matching(a.matching);
      } else {
        std::cerr << "from-matching needs --matching or --file\n";
        return 2;
      }
      const auto p = matching_to_path(m);
      emit(a, {{"matching", format_matching(m)}, {"path", to_tokens(p)}}, to_tokens(p));
    } else if (*extract_cmd) {
      const auto pi = extract_permutation(parse_path(a.path), flavor);
      emit(a, {{"permutation", pi.entries()}}, format_permutation(pi));
    } else if (*build_cmd) {
      const auto pi = parse_permutation(a.perm);
      const auto p = flavor == Flavor::Little ? build_esdp(pi) : build_osdp(pi);
      emit(a, {{"permutation", pi.entries()}, {"path", to_tokens(p)}}, to_tokens(p));
    } else if (*lengths_cmd) {
      const auto d = length_distribution(a.n);
      Json counts = Json::object();
      for (auto it = d.counts.rbegin(); it != d.counts.rend(); ++it) counts[std::to_string(it->first)] = it->second;
      emit(a, {{"n", a.n}, {"polynomial", d.to_polynomial()}, {"counts", counts}}, d.to_polynomial());
    } else if (*counts_cmd) {
      if (a.max_length % 2 != 0) fail(ErrorCode::OutOfRange, "--max-length must be even");
      EnumerateOptions eo{a.limit, a.threads};
      CountTable table{parse_class(a.cls), {}};
      const auto mode = a.mode == "closed-form" ? CountMode::ClosedForm : CountMode::Exhaustive;
      for (int len = 0; len <= a.max_length; len += 2)
        table.rows.push_back({len, count({table.kind, len, a.specials, a.horizontals}, mode, eo)});
      const auto fmt = a.json ? TableFormat::Json : a.format.empty() ? TableFormat::Text : parse_table_format(a.format);
      std::cout << format_count_table(table, fmt);
    } else if (*series_cmd) {
      const auto f = named_series(a.series_name, a.order);
      const int scale = a.series_name == "conjecture" ? 2 : 1;
      emit(a, {{"name", a.series_name}, {"variable", scale == 2 ? "q" : "x"}, {"exponent_step", scale},
               {"coefficients", series_to_json(f)}},
           f.to_string(scale == 2 ? "q" : "x", scale));
    } else if (*verify_cmd) {
      return run_verify(a);
    } else if (*render_cmd) {
      const auto p = parse_path(a.path);
      const auto fmt = a.format == "svg" ? RenderFormat::Svg : a.format == "ascii" ? RenderFormat::Ascii
                                                                                   : RenderFormat::Tokens;
      const std::string body = render_path(p, fmt);
      if (a.out.empty()) {
        if (a.json)
          std::cout << Json{{"path", to_tokens(p)}, {"format", a.format.empty() ? "tokens" : a.format},
                            {"output", body}}
                           .dump(2)
                    << '\n';
        else
          std::cout << body << (body.empty() || body.back() != '\n' ? "\n" : "");
      } else {
        std::ofstream out(a.out);
        if (!out) {
          std::cerr << "cannot write " << a.out << '\n';
          return 1;
        }
        out << body;
        emit(a, {{"path", to_tokens(p)}, {"out", a.out}}, "wrote " + a.out);
      }
    }
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 0;
}
