#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "schroeder/paths.hpp"

namespace schroeder {

/// An arc (left, right) with left < right; vertices are 1-indexed.
struct Edge {
  int left = 0;
  int right = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Perfect matching on [n_vertices] with a distinguished set of special
/// edges. Edges are kept sorted by left endpoint.
class HybridMatching {
 public:
  HybridMatching() = default;
  /// Throws InvalidMatching unless `edges` cover [n_vertices] exactly once
  /// and `special` is a subset of `edges`.
  HybridMatching(int n_vertices, std::vector<Edge> edges, std::vector<Edge> special = {});

  int n_vertices() const noexcept { return n_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::vector<Edge> special_edges() const;
  bool is_special(const Edge& e) const;
  bool contains(const Edge& e) const;
  /// Edge incident to vertex v.
  Edge edge_at(int v) const;

  friend bool operator==(const HybridMatching&, const HybridMatching&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<bool> special_;  // parallel to edges_
};

struct CrossingPair {
  Edge left_edge;
  Edge right_edge;
  int distance = 0;  // left_edge.right - right_edge.left

  friend bool operator==(const CrossingPair&, const CrossingPair&) = default;
};

/// Crossing pairs i1 < i2 < j1 < j2 with j1 - i2 >= k, ascending by (i1, i2).
std::vector<CrossingPair> k_distant_crossings(const HybridMatching& m, int k);

/// Throws NotLittleHybrid.
HybridMatching path_to_matching(const LatticePath& path);
/// The stack construction without the hybrid-membership check; requires
/// only that no horizontal lies on the axis.
HybridMatching path_to_matching_unchecked(const LatticePath& path);

/// Throws HasKDistantCrossing or NotLittleHybrid.
LatticePath matching_to_path(const HybridMatching& m);

std::optional<Edge> immediately_nesting_edge(const HybridMatching& m, const Edge& e);
int transitive_left_endpoint(const HybridMatching& m, const Edge& e);

/// Matching analogue of evolve_step for LITTLE paths. Throws NoSpecialEdge
/// or NotLittleHybrid.
HybridMatching matching_evolve_step(const HybridMatching& m);

/// (left outer vertex, right outer vertex) of the 1-distant crossing that
/// the horizontal at `horiz_pos` induces. Throws NotHoriz.
std::pair<int, int> crossing_outer_vertices(const LatticePath& path, int horiz_pos);

/// "(1,10),(2,3)*,(4,9)*" style text. A trailing '★' is accepted in place
/// of '*'. The vertex count is the largest vertex mentioned.
HybridMatching parse_matching(std::string_view text);
std::string format_matching(const HybridMatching& m);

}  // namespace schroeder
