#include "schroeder/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <thread>

#include "schroeder/enumerate.hpp"
#include "schroeder/errors.hpp"
#include "schroeder/evolve.hpp"
#include "schroeder/matchings.hpp"
#include "schroeder/permutations.hpp"
#include "schroeder/series.hpp"

namespace schroeder {

namespace {

constexpr std::array<std::string_view, 9> kSuiteNames = {
    "paths", "evolve", "matchings", "permutations", "series", "enumerate", "identities", "conjecture", "all",
};

using Failure = std::optional<std::string>;

// Runs `check` on every item, splitting the items across threads. Reports
// the number of failures and the lowest-index failure message.
template <class T, class F>
CheckResult sweep(std::string name, const std::vector<T>& items, unsigned threads, F check) {
  struct Part {
    std::size_t failures = 0;
    std::size_t first = static_cast<std::size_t>(-1);
    std::string message;
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(items.size())));
  std::vector<Part> parts(n);
  auto run = [&](unsigned t) {
    for (std::size_t i = t; i < items.size(); i += n) {
      Failure f;
      try {
        f = check(items[i]);
      } catch (const std::exception& e) {
        f = std::string(e.what());
      }
      if (!f) continue;
      ++parts[t].failures;
      if (i < parts[t].first) {
        parts[t].first = i;
        parts[t].message = *f;
      }
    }
  };
  if (n == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(run, t);
    for (auto& th : pool) th.join();
  }
  Part total;
  for (const auto& p : parts) {
    total.failures += p.failures;
    if (p.first < total.first) {
      total.first = p.first;
      total.message = p.message;
    }
  }
  std::string detail = std::to_string(items.size()) + " cases, " + std::to_string(total.failures) + " failures";
  if (total.failures > 0) detail += "; first: " + total.message;
  return {std::move(name), total.failures == 0, std::move(detail)};
}

CheckResult single(std::string name, const std::function<Failure()>& body, std::string ok_detail = "ok") {
  try {
    if (auto f = body()) return {std::move(name), false, *f};
  } catch (const std::exception& e) {
    return {std::move(name), false, e.what()};
  }
  return {std::move(name), true, std::move(ok_detail)};
}

std::string range_label(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

PathClassKind hybrid_kind(Flavor f) {
  return f == Flavor::Little ? PathClassKind::LittleHybrid : PathClassKind::BigHybrid;
}
PathClassKind start_kind(Flavor f) { return f == Flavor::Little ? PathClassKind::Esdp : PathClassKind::Osdp; }
PathClassKind schroeder_kind(Flavor f) {
  return f == Flavor::Little ? PathClassKind::LittleSchroeder : PathClassKind::BigSchroeder;
}

EnumerateOptions enum_options(const VerifyOptions& o) {
  EnumerateOptions e;
  e.threads = o.threads;
  e.max_length = std::max(kDefaultMaxLength, std::max(o.census_length, o.closure_length));
  return e;
}

std::vector<LatticePath> all_of_kind(PathClassKind kind, int max_length, const EnumerateOptions& e) {
  std::vector<LatticePath> out;
  for (int len = 0; len <= max_length; len += 2) {
    auto g = generate({kind, len}, e);
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

std::size_t specials_of(const LatticePath& p) { return p.count(Step::SpecialDown); }
std::size_t horizontals_of(const LatticePath& p) { return p.count(Step::Horiz); }

Failure expect_eq(const std::string& what, const std::string& got, const std::string& want) {
  if (got == want) return std::nullopt;
  return what + ": got " + got + ", expected " + want;
}

// ---------------------------------------------------------------- paths

SuiteReport paths_suite(const VerifyOptions& o) {
  const auto e = enum_options(o);
  SuiteReport r{Suite::Paths, {}, 0};
  std::vector<LatticePath> pool = all_of_kind(PathClassKind::BigHybrid, o.max_length, e);
  {
    auto more = all_of_kind(PathClassKind::BigSchroeder, o.max_length, e);
    pool.insert(pool.end(), more.begin(), more.end());
  }

  r.checks.push_back(sweep("token and packed round trip", pool, o.threads, [](const LatticePath& p) -> Failure {
    if (parse_path(to_tokens(p)) != p) return "token round trip failed for " + to_tokens(p);
    if (LatticePath(unpack(pack(p.steps()), p.length())) != p) return "pack round trip failed for " + to_tokens(p);
    return std::nullopt;
  }));

  r.checks.push_back(sweep("match is an involution", pool, o.threads, [](const LatticePath& p) -> Failure {
    const auto h = p.heights();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] == Step::Horiz) continue;
      const std::size_t m = match_index(p.steps(), h, i);
      if (m == p.size() || match_index(p.steps(), h, m) != i)
        return to_tokens(p) + " at step " + std::to_string(i);
    }
    return std::nullopt;
  }));

  std::vector<int> ns(static_cast<std::size_t>(o.max_length / 2));
  std::iota(ns.begin(), ns.end(), 1);
  r.checks.push_back(sweep("Dyck paths by ravines are Narayana", ns, o.threads, [&](int n) -> Failure {
    std::map<int, Integer> by_ravines;
    for (const auto& p : generate({PathClassKind::Dyck, 2 * n}, e)) {
      const auto [peaks, ravines] = peaks_and_ravines(p);
      if (peaks != ravines + 1) return "peaks != ravines + 1 for " + to_tokens(p);
      by_ravines[ravines] += 1;
    }
    for (int k = 0; k < n; ++k)
      if (by_ravines[k] != narayana(n, k)) return "n=" + std::to_string(n) + " k=" + std::to_string(k);
    return std::nullopt;
  }));

  r.checks.push_back(single("classification of generated classes", [&]() -> Failure {
    for (int len = 0; len <= o.max_length; len += 2) {
      for (int k = 0; k <= 4; ++k) {
        const auto kind = static_cast<PathClassKind>(k);
        for (const auto& p : generate({kind, len}, e)) {
          const auto c = classify(p);
          const bool ok = kind == PathClassKind::Dyck ? c.dyck
                          : kind == PathClassKind::Esdp ? c.esdp
                          : kind == PathClassKind::Osdp ? c.osdp
                          : kind == PathClassKind::LittleSchroeder ? c.little_schroeder
                                                                     : c.big_schroeder;
          if (!ok) return std::string(class_name(kind)) + " misclassified: " + to_tokens(p);
        }
      }
    }
    return std::nullopt;
  }));
  return r;
}

// ---------------------------------------------------------------- evolve

CheckResult image_census(Flavor f, const VerifyOptions& o, const EnumerateOptions& e) {
  const std::string name = std::string(f == Flavor::Little ? "e" : "E") + "-infinity image census, lengths " +
                           range_label(0, o.census_length);
  return single(name, [&]() -> Failure {
    for (int len = 0; len <= o.census_length; len += 2) {
      const auto starts = generate({start_kind(f), len}, e);
      std::vector<std::uint64_t> finals;
      std::map<std::size_t, std::size_t> by_specials;
      for (const auto& s : starts) {
        const auto t = evolve_full(s, f);
        const std::size_t j = specials_of(s);
        if (t.snapshots.size() != j || t.creation_order.size() != j) return "trace length for " + to_tokens(s);
        for (const auto& snap : t.snapshots)
          if (specials_of(snap) + horizontals_of(snap) != j || snap.length() != s.length())
            return "conservation for " + to_tokens(s);
        const auto& fin = t.final_path();
        if (specials_of(fin) != 0) return "specials left in " + to_tokens(fin);
        finals.push_back(pack(fin.steps()));
        ++by_specials[j];
      }
      std::sort(finals.begin(), finals.end());
      if (std::adjacent_find(finals.begin(), finals.end()) != finals.end())
        return "two starts share an image at length " + std::to_string(len);
      if (finals != generate_codes({schroeder_kind(f), len}, e))
        return "image differs from the Schröder paths at length " + std::to_string(len);
      for (const auto& [j, c] : by_specials) {
        const auto want = generate_codes({schroeder_kind(f), len, std::nullopt, static_cast<int>(j)}, e).size();
        if (want != c) return "refinement by horizontals at length " + std::to_string(len);
      }
    }
    return std::nullopt;
  });
}

SuiteReport evolve_suite(const VerifyOptions& o) {
  const auto e = enum_options(o);
  SuiteReport r{Suite::Evolve, {}, 0};
  for (Flavor f : {Flavor::Little, Flavor::Big}) {
    const std::string fl(flavor_name(f));
    r.checks.push_back(image_census(f, o, e));

    const auto hybrids = all_of_kind(hybrid_kind(f), o.max_length, e);
    r.checks.push_back(sweep(fl + " evolve/devolve round trips, lengths " + range_label(0, o.max_length), hybrids,
                             o.threads, [f](const LatticePath& p) -> Failure {
      if (specials_of(p) > 0) {
        const auto q = evolve_step(p, f);
        if (specials_of(q) + 1 != specials_of(p) || horizontals_of(q) != horizontals_of(p) + 1 ||
            q.length() != p.length())
          return "conservation for " + to_tokens(p);
        if (devolve_step(q, f) != p) return "devolve(evolve) != id for " + to_tokens(p);
      }
      if (horizontals_of(p) > 0) {
        const auto q = devolve_step(p, f);
        if (evolve_step(q, f) != p) return "evolve(devolve) != id for " + to_tokens(p);
      }
      const auto start = devolve_full(p, f);
      const auto c = classify(start);
      if (!(f == Flavor::Little ? c.esdp : c.osdp)) return "devolve_full left the start class for " + to_tokens(p);
      if (evolve_full(start, f).final_path() != evolve_to_schroeder(p, f).final_path())
        return "lineage mismatch for " + to_tokens(p);
      return std::nullopt;
    }));

    r.checks.push_back(sweep(fl + " last added horizontal is the created one", hybrids, o.threads,
                             [f](const LatticePath& p) -> Failure {
      if (specials_of(p) == 0) return std::nullopt;
      auto steps = p.steps();
      const auto idx = evolve_in_place(steps, f);
      const LatticePath q(steps);
      if (!idx || q.unit_position(*idx) != last_added_horizontal(q, f)) return "for " + to_tokens(q);
      return std::nullopt;
    }));

    r.checks.push_back(sweep(fl + " closure members are recognised", hybrids, o.threads,
                             [f](const LatticePath& p) -> Failure {
      if (!is_hybrid(p, f)) return to_tokens(p);
      return std::nullopt;
    }));

    r.checks.push_back(single(fl + " evolve_step is a bijection per (j, k) level", [&]() -> Failure {
      for (int len = 2; len <= o.max_length; len += 2) {
        for (int j = 1; j <= len / 2; ++j) {
          for (int k = 0; j + k <= len / 2; ++k) {
            std::vector<std::uint64_t> image;
            for (const auto& p : generate({hybrid_kind(f), len, j, k}, e))
              image.push_back(pack(evolve_step(p, f).steps()));
            std::sort(image.begin(), image.end());
            if (image != generate_codes({hybrid_kind(f), len, j - 1, k + 1}, e))
              return "length " + std::to_string(len) + " j=" + std::to_string(j) + " k=" + std::to_string(k);
          }
        }
      }
      return std::nullopt;
    }));
  }
  return r;
}

// ---------------------------------------------------------------- matchings

SuiteReport matchings_suite(const VerifyOptions& o) {
  const auto e = enum_options(o);
  SuiteReport r{Suite::Matchings, {}, 0};
  const auto hybrids = all_of_kind(PathClassKind::LittleHybrid, o.max_length, e);

  r.checks.push_back(sweep("path/matching round trip, lengths " + range_label(0, o.max_length), hybrids, o.threads,
                           [](const LatticePath& p) -> Failure {
    const auto m = path_to_matching(p);
    if (static_cast<std::size_t>(m.special_edges().size()) != specials_of(p)) return "special edges for " + to_tokens(p);
    if (!k_distant_crossings(m, 2).empty()) return "2-distant crossing for " + to_tokens(p);
    if (matching_to_path(m) != p) return "round trip for " + to_tokens(p);
    return std::nullopt;
  }));

  r.checks.push_back(sweep("matching evolution commutes with evolve_step", hybrids, o.threads,
                           [](const LatticePath& p) -> Failure {
    if (specials_of(p) == 0) return std::nullopt;
    if (path_to_matching(evolve_step(p, Flavor::Little)) != matching_evolve_step(path_to_matching(p)))
      return "for " + to_tokens(p);
    return std::nullopt;
  }));

  const auto schroeder = all_of_kind(PathClassKind::LittleSchroeder, o.census_length, e);
  r.checks.push_back(sweep("Schröder matchings are 2-distant noncrossing, lengths " + range_label(0, o.census_length),
                           schroeder, o.threads, [](const LatticePath& p) -> Failure {
    const auto m = path_to_matching(p);
    if (!k_distant_crossings(m, 2).empty()) return "2-distant crossing for " + to_tokens(p);
    if (k_distant_crossings(m, 1).size() != horizontals_of(p)) return "crossing count for " + to_tokens(p);
    return std::nullopt;
  }));

  r.checks.push_back(sweep("outer vertices agree with the matching", hybrids, o.threads,
                           [](const LatticePath& p) -> Failure {
    if (horizontals_of(p) == 0) return std::nullopt;
    const auto m = path_to_matching(p);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] != Step::Horiz) continue;
      const int v = p.unit_position(i);
      const auto got = crossing_outer_vertices(p, v);
      const std::pair<int, int> want{m.edge_at(v + 1).left, m.edge_at(v).right};
      if (got != want) return to_tokens(p) + " at " + std::to_string(v);
    }
    return std::nullopt;
  }));

  r.checks.push_back(single("worked examples", []() -> Failure {
    if (auto f = expect_eq("UHHUDHHD", format_matching(path_to_matching(parse_path("UHHUDHHD"))),
                           "(1,3),(2,7),(4,5),(6,8)"))
      return f;
    if (auto f = expect_eq("UUdUUUDDdD", format_matching(path_to_matching(parse_path("UUdUUUDDdD"))),
                           "(1,10),(2,3)*,(4,9)*,(5,8),(6,7)"))
      return f;
    const auto m = parse_matching("(1,5),(2,3),(4,7),(6,8)");
    if (transitive_left_endpoint(m, {6, 8}) != 1) return std::string("transitive left endpoint of (6,8)");
    if (crossing_outer_vertices(parse_path("UUDHHUHHDUUDDD"), 4).second != 14)
      return std::string("right outer vertex at 4 in UUDHHUHHDUUDDD");
    if (crossing_outer_vertices(parse_path("UHHUDHHD"), 2).second != 7)
      return std::string("right outer vertex of the first horizontal in UHHUDHHD");
    return std::nullopt;
  }));
  return r;
}

// ---------------------------------------------------------------- permutations

const std::array<const char*, 6> kLengthPolynomials = {
    "q^2",
    "q^6 + q^4",
    "q^10 + 3q^8 + q^6",
    "q^14 + 6q^12 + 6q^10 + q^8",
    "q^18 + 10q^16 + 20q^14 + 10q^12 + q^10",
    "q^22 + 15q^20 + 50q^18 + 50q^16 + 15q^14 + q^12",
};

SuiteReport permutations_suite(const VerifyOptions& o) {
  const auto e = enum_options(o);
  SuiteReport r{Suite::Permutations, {}, 0};
  for (Flavor f : {Flavor::Little, Flavor::Big}) {
    const auto starts = all_of_kind(start_kind(f), o.max_length, e);
    r.checks.push_back(sweep(std::string(flavor_name(f)) + " extracted permutations avoid 231", starts, o.threads,
                             [f](const LatticePath& p) -> Failure {
      if (!avoids_231(extract_permutation(p, f))) return to_tokens(p);
      return std::nullopt;
    }));
  }

  std::vector<Permutation> perms;
  for (int n = 0; n <= o.perm_n; ++n) {
    auto a = avoiders_231(n);
    perms.insert(perms.end(), a.begin(), a.end());
  }
  r.checks.push_back(sweep("extract after build is the identity, n " + range_label(0, o.perm_n), perms, o.threads,
                           [](const Permutation& p) -> Failure {
    const auto osdp = build_osdp(p);
    if (!classify(osdp).osdp || specials_of(osdp) != p.size()) return "not an OSDP for " + format_permutation(p);
    if (extract_permutation(osdp, Flavor::Big) != p) return "big flavor for " + format_permutation(p);
    if (extract_permutation(build_esdp(p), Flavor::Little) != p) return "little flavor for " + format_permutation(p);
    return std::nullopt;
  }));

  r.checks.push_back(sweep("specials on the axis mark prefix permutations", perms, o.threads,
                           [](const Permutation& p) -> Failure {
    const auto path = build_osdp(p);
    const auto h = path.heights();
    std::size_t k = 0;
    int prefix_max = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
      if (path[i] != Step::SpecialDown) continue;
      prefix_max = std::max(prefix_max, p[k]);
      ++k;
      const bool on_axis = h[i + 1] == 0;
      if (on_axis != (prefix_max == static_cast<int>(k))) return format_permutation(p) + " at k=" + std::to_string(k);
    }
    return std::nullopt;
  }));

  r.checks.push_back(single("avoider counts and good insertions", [&]() -> Failure {
    for (int n = 0; n <= o.perm_n; ++n) {
      std::vector<int> id(static_cast<std::size_t>(n));
      std::iota(id.begin(), id.end(), 1);
      std::size_t brute = 0;
      do {
        brute += avoids_231(Permutation(id));
      } while (std::next_permutation(id.begin(), id.end()));
      const auto avoiders = avoiders_231(n);
      if (Integer(static_cast<unsigned long>(avoiders.size())) != catalan(n) || brute != avoiders.size())
        return "count at n=" + std::to_string(n);
      if (n == 0 || n >= o.perm_n) continue;
      for (const auto& p : avoiders) {
        std::vector<int> good;
        for (int k = 0; k < n; ++k) {
          auto q = p.entries();
          q.insert(q.begin() + k, n + 1);
          if (avoids_231(Permutation(q))) good.push_back(k);
        }
        if (good != good_insertion_positions(p)) return "good insertions of " + format_permutation(p);
      }
    }
    return std::nullopt;
  }));

  for (Flavor f : {Flavor::Little, Flavor::Big}) {
    const auto hybrids = all_of_kind(hybrid_kind(f), o.max_length, e);
    r.checks.push_back(sweep(std::string(flavor_name(f)) + " creation order of special pairs", hybrids, o.threads,
                             [f](const LatticePath& p) -> Failure {
      std::vector<int> specials;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] == Step::SpecialDown) specials.push_back(p.unit_position(i));
      if (specials.size() < 2) return std::nullopt;
      const auto t = evolve_to_schroeder(p, f);
      for (std::size_t a = 0; a < specials.size(); ++a)
        for (std::size_t b = a + 1; b < specials.size(); ++b) {
          const bool observed = t.creation_order[b] < t.creation_order[a];
          if (horiz_order_precedes(p, specials[a], specials[b]) != observed)
            return to_tokens(p) + " a=" + std::to_string(specials[a]) + " b=" + std::to_string(specials[b]);
        }
      return std::nullopt;
    }));
  }

  r.checks.push_back(single("length polynomials, n " + range_label(1, o.table_n), [&]() -> Failure {
    for (int n = 1; n <= std::min<int>(o.table_n, static_cast<int>(kLengthPolynomials.size())); ++n)
      if (auto f = expect_eq("n=" + std::to_string(n), length_distribution(n).to_polynomial(),
                             kLengthPolynomials[static_cast<std::size_t>(n - 1)]))
        return f;
    return std::nullopt;
  }));
  return r;
}

// ---------------------------------------------------------------- series

const std::array<long, 12> kLittleRow = {1, 1, 4, 18, 87, 439, 2278, 12052, 64669, 350733, 1918152, 10560678};
const std::array<long, 12> kBigRow = {1, 3, 11, 47, 219, 1075, 5459, 28383, 150131, 804515, 4355163, 23768079};

SuiteReport series_suite(const VerifyOptions&) {
  SuiteReport r{Suite::Series, {}, 0};
  for (Flavor f : {Flavor::Little, Flavor::Big}) {
    r.checks.push_back(single(std::string(flavor_name(f)) + " hybrid series through length 22", [f]() -> Failure {
      const auto& row = f == Flavor::Little ? kLittleRow : kBigRow;
      const auto c = gf_hybrid(f, row.size()).integer_coefficients();
      for (std::size_t i = 0; i < row.size(); ++i)
        if (c[i] != row[i]) return "length " + std::to_string(2 * i) + ": " + c[i].get_str();
      return std::nullopt;
    }));
  }

  constexpr std::size_t order = 30;
  r.checks.push_back(single("catalog identities to order 30", []() -> Failure {
    const auto g = gf_catalog(order);
    const auto one = FormalPowerSeries::constant(1, order);
    if (g.E != g.s) return std::string("E != s");
    if (g.O != g.S) return std::string("O != S");
    if (g.S != 2 * g.s - one) return std::string("S != 2s - 1");
    if (g.R * g.R != FormalPowerSeries::polynomial({1, -6, 1}, order)) return std::string("R^2 != 1 - 6x + x^2");
    for (const auto* f : {&g.s, &g.S, &g.L, &g.B}) {
      if (!f->is_integral()) return std::string("non-integral coefficient");
      for (const auto& c : f->coefficients())
        if (sgn(c) < 0) return std::string("negative coefficient");
    }
    return std::nullopt;
  }));

  r.checks.push_back(single("big Schröder recurrence to order 30", []() -> Failure {
    const auto S = big_schroeder_series(order).integer_coefficients();
    for (std::size_t n = 1; n + 1 < order; ++n) {
      const Integer lhs = Integer(static_cast<unsigned long>(n + 2)) * S[n + 1];
      const Integer rhs = Integer(static_cast<unsigned long>(3 * (2 * n + 1))) * S[n] -
                          Integer(static_cast<unsigned long>(n - 1)) * S[n - 1];
      if (lhs != rhs) return "n=" + std::to_string(n);
    }
    return std::nullopt;
  }));

  r.checks.push_back(single("square roots square back", []() -> Failure {
    const auto a = FormalPowerSeries::polynomial({4, -3, 7, 1, -2}, order);
    const auto b = fps_sqrt(a);
    if (b * b != a) return std::string("sqrt(4 - 3x + 7x^2 + x^3 - 2x^4)^2");
    const auto m = fps_sqrt(FormalPowerSeries::polynomial({1, -2, -1, -2, 1}, order));
    if (m * m != FormalPowerSeries::polynomial({1, -2, -1, -2, 1}, order)) return std::string("conjecture radicand");
    return std::nullopt;
  }));
  return r;
}

// ---------------------------------------------------------------- enumerate

SuiteReport enumerate_suite(const VerifyOptions& o) {
  const auto e = enum_options(o);
  SuiteReport r{Suite::Enumerate, {}, 0};
  for (Flavor f : {Flavor::Little, Flavor::Big}) {
    r.checks.push_back(single(std::string(flavor_name(f)) + " closure counts equal the series, lengths " +
                                  range_label(0, o.closure_length),
                              [&]() -> Failure {
      const auto g = gf_hybrid(f, static_cast<std::size_t>(o.closure_length / 2 + 1)).integer_coefficients();
      for (int len = 0; len <= o.closure_length; len += 2) {
        const Integer c = count({hybrid_kind(f), len}, CountMode::Exhaustive, e);
        const int n = len / 2;
        if (c != g[static_cast<std::size_t>(n)] || c != hybrid_count_weighted(f, n))
          return "length " + std::to_string(len) + ": closure " + c.get_str();
      }
      return std::nullopt;
    }));
  }

  r.checks.push_back(single("start classes by specials, n 0..8", [&]() -> Failure {
    for (int n = 1; n <= 8; ++n)
      for (int j = 0; j <= n; ++j) {
        if (count({PathClassKind::Esdp, 2 * n, j}, CountMode::Exhaustive, e) != esdp_count(n, j))
          return "ESDP n=" + std::to_string(n) + " j=" + std::to_string(j);
        if (count({PathClassKind::Osdp, 2 * n, j}, CountMode::Exhaustive, e) != osdp_count(n, j))
          return "OSDP n=" + std::to_string(n) + " j=" + std::to_string(j);
      }
    return std::nullopt;
  }));

  r.checks.push_back(single("Dyck and Schröder counts, n 0..9", [&]() -> Failure {
    for (int n = 0; n <= 9; ++n) {
      if (count({PathClassKind::Dyck, 2 * n}, CountMode::Exhaustive, e) != catalan(n)) return "Dyck n=" + std::to_string(n);
      if (count({PathClassKind::LittleSchroeder, 2 * n}, CountMode::Exhaustive, e) != little_schroeder(n))
        return "little n=" + std::to_string(n);
      if (count({PathClassKind::BigSchroeder, 2 * n}, CountMode::Exhaustive, e) != big_schroeder(n))
        return "big n=" + std::to_string(n);
    }
    return std::nullopt;
  }));

  r.checks.push_back(single("closed form and exhaustive counts agree, lengths " + range_label(0, o.max_length),
                            [&]() -> Failure {
    for (int k = 0; k < 7; ++k) {
      const auto kind = static_cast<PathClassKind>(k);
      for (int len = 0; len <= o.max_length; len += 2) {
        std::vector<PathClassQuery> qs{{kind, len}};
        for (int a = 0; a <= len / 2; ++a) {
          qs.push_back({kind, len, a, std::nullopt});
          qs.push_back({kind, len, std::nullopt, a});
          for (int b = 0; a + b <= len / 2; ++b) qs.push_back({kind, len, a, b});
        }
        for (const auto& q : qs)
          if (count(q, CountMode::Exhaustive, e) != count(q, CountMode::ClosedForm, e))
            return std::string(class_name(kind)) + " length " + std::to_string(len);
      }
    }
    return std::nullopt;
  }));

  r.checks.push_back(single("big hybrid lower bound, n 1.." + std::to_string(o.closure_length / 2), [&]() -> Failure {
    for (int n = 1; n <= o.closure_length / 2; ++n) {
      const auto b = bound_check(n, e);
      if (!b.passed()) return "n=" + std::to_string(n) + ": " + b.big_hybrids.get_str() + " vs " + b.bound.get_str();
    }
    return std::nullopt;
  }));

  r.checks.push_back(single("generated lists are sorted and distinct", [&]() -> Failure {
    for (int k = 0; k < 7; ++k)
      for (int len = 0; len <= o.max_length; len += 2) {
        const auto g = generate({static_cast<PathClassKind>(k), len}, e);
        if (std::adjacent_find(g.begin(), g.end(), [](const auto& a, const auto& b) { return !(a < b); }) != g.end())
          return std::string(class_name(static_cast<PathClassKind>(k))) + " length " + std::to_string(len);
      }
    return std::nullopt;
  }));
  return r;
}

// ---------------------------------------------------------------- identities

CheckResult identity_check(Identity id, int n_max) {
  const std::string name(identity_name(id));
  const auto report = check_identity(id, n_max);
  std::string detail = std::to_string(report.rows.size()) + " rows";
  for (const auto& row : report.rows)
    if (!row.pass) {
      detail += "; first failing n=" + std::to_string(row.n) + (row.j >= 0 ? " j=" + std::to_string(row.j) : "") +
                ": " + row.lhs.get_str() + " vs " + row.rhs.get_str();
      break;
    }
  return {name + ", n up to " + std::to_string(n_max), report.passed(), detail};
}

SuiteReport identities_suite(const VerifyOptions& o) {
  const auto e = enum_options(o);
  SuiteReport r{Suite::Identities, {}, 0};
  r.checks.push_back(identity_check(Identity::Eq1, o.identity_n));
  r.checks.push_back(identity_check(Identity::Eq2, o.identity_n));
  r.checks.push_back(identity_check(Identity::Eq3, o.identity_j_n));
  r.checks.push_back(identity_check(Identity::Eq4, o.identity_j_n));
  for (Flavor f : {Flavor::Little, Flavor::Big}) {
    r.checks.push_back(single(std::string(flavor_name(f)) + " weighted sums equal closure counts, n 0.." +
                                  std::to_string(o.identity_j_n),
                              [&]() -> Failure {
      for (int n = 0; n <= o.identity_j_n; ++n)
        if (hybrid_count_weighted(f, n) != count({hybrid_kind(f), 2 * n}, CountMode::Exhaustive, e))
          return "n=" + std::to_string(n);
      return std::nullopt;
    }));
  }
  return r;
}

// ---------------------------------------------------------------- conjecture

SuiteReport conjecture_suite(const VerifyOptions& o) {
  SuiteReport r{Suite::Conjecture, {}, 0};
  for (int n = 1; n <= o.conjecture_n; ++n) {
    r.checks.push_back(single("length distribution is Narayana row n=" + std::to_string(n), [n]() -> Failure {
      const auto d = length_distribution(n);
      std::uint64_t total = 0;
      for (const auto& [len, c] : d.counts) {
        if (len < 2 * n || len > 4 * n - 2 || len % 2 != 0) return "length " + std::to_string(len) + " out of range";
        if (Integer(static_cast<unsigned long>(c)) != narayana(n, (len - 2 * n) / 2))
          return "length " + std::to_string(len) + ": " + std::to_string(c);
        total += c;
      }
      if (Integer(static_cast<unsigned long>(total)) != catalan(n)) return std::string("total is not Catalan");
      return std::nullopt;
    }));
  }
  auto c = identity_check(Identity::Eq10, o.conjecture_exponent / 2);
  c.name = "aggregate length series through q^" + std::to_string(o.conjecture_exponent);
  r.checks.push_back(std::move(c));
  return r;
}

}  // namespace

std::string_view suite_name(Suite s) noexcept { return kSuiteNames[static_cast<std::size_t>(s)]; }

Suite parse_suite(std::string_view text) {
  for (std::size_t i = 0; i < kSuiteNames.size(); ++i)
    if (kSuiteNames[i] == text) return static_cast<Suite>(i);
  fail(ErrorCode::OutOfRange, "unknown suite '" + std::string(text) + "'");
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<SuiteReport> run_suite(Suite suite, const VerifyOptions& options) {
  if (suite == Suite::All) {
    std::vector<SuiteReport> out;
    for (int s = 0; s < static_cast<int>(Suite::All); ++s) {
      auto part = run_suite(static_cast<Suite>(s), options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const auto t0 = std::chrono::steady_clock::now();
  SuiteReport report;
  switch (suite) {
    case Suite::Paths: report = paths_suite(options); break;
    case Suite::Evolve: report = evolve_suite(options); break;
    case Suite::Matchings: report = matchings_suite(options); break;
    case Suite::Permutations: report = permutations_suite(options); break;
    case Suite::Series: report = series_suite(options); break;
    case Suite::Enumerate: report = enumerate_suite(options); break;
    case Suite::Identities: report = identities_suite(options); break;
    case Suite::Conjecture: report = conjecture_suite(options); break;
    case Suite::All: break;
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {report};
}

}  // namespace schroeder
