#include <doctest.h>

#include "oracles.hpp"
#include "schroeder/enumerate.hpp"
#include "schroeder/errors.hpp"
#include "schroeder/evolve.hpp"
#include "schroeder/matchings.hpp"

using namespace schroeder;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalMismatch;
}

std::string matching_of(const char* path) { return format_matching(path_to_matching(parse_path(path))); }

}  // namespace

TEST_CASE("matching construction and validation") {
  const HybridMatching m(4, {{2, 4}, {1, 3}}, {{1, 3}});
  CHECK(m.edges() == std::vector<Edge>{{1, 3}, {2, 4}});
  CHECK(m.is_special({1, 3}));
  CHECK_FALSE(m.is_special({2, 4}));
  CHECK(m.edge_at(4) == Edge{2, 4});
  CHECK(code_of([] { HybridMatching(4, {{1, 2}, {2, 3}}); }) == ErrorCode::InvalidMatching);
  CHECK(code_of([] { HybridMatching(4, {{1, 2}}); }) == ErrorCode::InvalidMatching);
  CHECK(code_of([] { HybridMatching(2, {{1, 2}}, {{3, 4}}); }) == ErrorCode::InvalidMatching);
  CHECK(code_of([] { HybridMatching(2, {{2, 1}}); }) == ErrorCode::InvalidMatching);
}

TEST_CASE("k-distant crossings") {
  const HybridMatching fig(12, {{1, 2}, {3, 4}, {5, 7}, {6, 11}, {8, 12}, {9, 10}});
  const auto three = k_distant_crossings(fig, 3);
  REQUIRE(three.size() == 1);
  CHECK(three[0].left_edge == Edge{6, 11});
  CHECK(three[0].right_edge == Edge{8, 12});
  CHECK(three[0].distance == 3);

  const HybridMatching small(8, {{1, 4}, {2, 5}, {3, 7}, {6, 8}});
  bool found = false;
  for (const auto& c : k_distant_crossings(small, 1))
    if (c.left_edge == Edge{1, 4} && c.right_edge == Edge{3, 7}) found = c.distance == 1;
  CHECK(found);

  const HybridMatching flat(6, {{1, 6}, {2, 3}, {4, 5}});
  for (int k = 1; k <= 4; ++k) CHECK(k_distant_crossings(flat, k).empty());
}

TEST_CASE("path_to_matching examples") {
  CHECK(matching_of("UHHUDHHD") == "(1,3),(2,7),(4,5),(6,8)");
  CHECK(matching_of("UUdUUUDDdD") == "(1,10),(2,3)*,(4,9)*,(5,8),(6,7)");
  CHECK(matching_of("UUDHHUHHDUUDDD") == "(1,5),(2,3),(4,14),(6,8),(7,9),(10,13),(11,12)");
  CHECK(code_of([] { path_to_matching(parse_path("HH")); }) == ErrorCode::NotLittleHybrid);
  CHECK(code_of([] { path_to_matching(parse_path("UUDd")); }) == ErrorCode::NotLittleHybrid);
}

TEST_CASE("matching_to_path examples") {
  CHECK(to_tokens(matching_to_path(parse_matching("(1,3),(2,7),(4,5),(6,8)"))) == "UHHUDHHD");
  CHECK(to_tokens(matching_to_path(parse_matching("(1,2)"))) == "UD");
  CHECK(to_tokens(matching_to_path(parse_matching("(1,3),(2,4)"))) == "UHHD");
  CHECK(code_of([] { matching_to_path(parse_matching("(1,4),(2,5),(3,6)")); }) == ErrorCode::HasKDistantCrossing);
  // UUDd: the special leaves from odd height.
  CHECK(code_of([] { matching_to_path(parse_matching("(1,4)*,(2,3)")); }) == ErrorCode::NotLittleHybrid);
}

TEST_CASE("immediately nesting edge") {
  const auto m = parse_matching("(1,10),(2,3),(4,9),(5,8),(6,7)");
  CHECK(immediately_nesting_edge(m, {5, 8}) == Edge{4, 9});
  CHECK(immediately_nesting_edge(m, {6, 7}) == Edge{5, 8});
  CHECK_FALSE(immediately_nesting_edge(m, {1, 10}).has_value());
  CHECK_FALSE(immediately_nesting_edge(parse_matching("(1,2),(3,4)"), {3, 4}).has_value());
}

TEST_CASE("transitive left endpoint") {
  const auto m = parse_matching("(1,5),(2,3),(4,7),(6,8)");
  CHECK(transitive_left_endpoint(m, {6, 8}) == 1);
  CHECK(transitive_left_endpoint(m, {2, 3}) == 2);
  CHECK(transitive_left_endpoint(m, {4, 7}) == 1);
  CHECK(transitive_left_endpoint(m, {1, 5}) == 1);
}

TEST_CASE("matching_evolve_step examples") {
  CHECK(format_matching(matching_evolve_step(parse_matching("(1,4),(2,3)*"))) == "(1,3),(2,4)");
  CHECK(matching_evolve_step(parse_matching("(1,4),(2,3)*")) == path_to_matching(parse_path("UHHD")));
  const auto m = parse_matching("(1,10),(2,3)*,(4,9)*,(5,8),(6,7)");
  const auto next = matching_evolve_step(m);
  CHECK(next.is_special({4, 9}));
  CHECK(next.special_edges().size() == 1);
  CHECK(next == path_to_matching(evolve_step(parse_path("UUdUUUDDdD"), Flavor::Little)));
  CHECK(code_of([] { matching_evolve_step(parse_matching("(1,2)")); }) == ErrorCode::NoSpecialEdge);
}

TEST_CASE("crossing outer vertices") {
  CHECK(crossing_outer_vertices(parse_path("UUDHHUHHDUUDDD"), 4) == std::pair{1, 14});
  CHECK(crossing_outer_vertices(parse_path("UHHUDHHD"), 2).second == 7);
  CHECK(crossing_outer_vertices(parse_path("UHHD"), 2) == std::pair{1, 4});
  CHECK(code_of([] { crossing_outer_vertices(parse_path("UUDD"), 2); }) == ErrorCode::NotHoriz);
}

TEST_CASE("text format") {
  const auto m = parse_matching("(1,10),(2,3)★,(4,9)*,(5,8),(6,7)");
  CHECK(format_matching(m) == "(1,10),(2,3)*,(4,9)*,(5,8),(6,7)");
  CHECK(m.n_vertices() == 10);
  CHECK(code_of([] { parse_matching("(1,2),(3"); }) == ErrorCode::InvalidMatching);
}

TEST_CASE("matching images map back through the definition oracle, lengths up to 12") {
  for (int len = 0; len <= 12; len += 2) {
    for (const auto& p : generate({PathClassKind::LittleHybrid, len})) {
      const auto m = path_to_matching(p);
      std::vector<std::pair<int, int>> edges;
      std::set<std::pair<int, int>> special;
      for (const auto& e : m.edges()) {
        edges.emplace_back(e.left, e.right);
        if (m.is_special(e)) special.emplace(e.left, e.right);
      }
      CHECK(oracle::path_of_matching(m.n_vertices(), edges, special) == to_tokens(p));
      CHECK(matching_to_path(m) == p);
      CHECK(k_distant_crossings(m, 2).empty());
      if (p.count(Step::SpecialDown) > 0)
        CHECK(path_to_matching(evolve_step(p, Flavor::Little)) == matching_evolve_step(m));
    }
  }
}

TEST_CASE("Schröder matchings: one crossing per horizontal, lengths up to 14") {
  for (int len = 0; len <= 14; len += 2) {
    for (const auto& p : generate({PathClassKind::LittleSchroeder, len})) {
      const auto m = path_to_matching(p);
      CHECK(k_distant_crossings(m, 2).empty());
      CHECK(k_distant_crossings(m, 1).size() == p.count(Step::Horiz));
    }
  }
}
