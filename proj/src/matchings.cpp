#include "schroeder/matchings.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "schroeder/errors.hpp"
#include "schroeder/evolve.hpp"

namespace schroeder {

HybridMatching::HybridMatching(int n_vertices, std::vector<Edge> edges, std::vector<Edge> special)
    : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 0 || n_ % 2 != 0)
    fail(ErrorCode::InvalidMatching, "vertex count " + std::to_string(n_) + " is not even");
  std::vector<int> seen(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& e : edges_) {
    if (e.left < 1 || e.right > n_ || e.left >= e.right)
      fail(ErrorCode::InvalidMatching,
           "bad edge (" + std::to_string(e.left) + "," + std::to_string(e.right) + ")");
    if (seen[static_cast<std::size_t>(e.left)]++ || seen[static_cast<std::size_t>(e.right)]++)
      fail(ErrorCode::InvalidMatching, "edges are not vertex-disjoint");
  }
  if (edges_.size() * 2 != static_cast<std::size_t>(n_))
    fail(ErrorCode::InvalidMatching, "edges do not cover every vertex");
  std::sort(edges_.begin(), edges_.end());
  special_.assign(edges_.size(), false);
  for (const auto& s : special) {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), s);
    if (it == edges_.end() || *it != s)
      fail(ErrorCode::InvalidMatching, "special edge is not an edge");
    special_[static_cast<std::size_t>(it - edges_.begin())] = true;
  }
}

std::vector<Edge> HybridMatching::special_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (special_[i]) out.push_back(edges_[i]);
  return out;
}

bool HybridMatching::is_special(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  return it != edges_.end() && *it == e && special_[static_cast<std::size_t>(it - edges_.begin())];
}

bool HybridMatching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

Edge HybridMatching::edge_at(int v) const {
  for (const auto& e : edges_)
    if (e.left == v || e.right == v) return e;
  fail(ErrorCode::OutOfRange, "vertex " + std::to_string(v));
}

std::vector<CrossingPair> k_distant_crossings(const HybridMatching& m, int k) {
  std::vector<CrossingPair> out;
  const auto& es = m.edges();
  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const Edge& a = es[i];
      const Edge& b = es[j];
      if (a.left < b.left && b.left < a.right && a.right < b.right && a.right - b.left >= k)
        out.push_back({a, b, a.right - b.left});
    }
  return out;
}

HybridMatching path_to_matching_unchecked(const LatticePath& path) {
  std::vector<int> open;
  std::vector<Edge> edges, special;
  int v = 1;
  for (auto s : path.steps()) {
    switch (s) {
      case Step::Up: open.push_back(v); break;
      case Step::Down:
      case Step::SpecialDown:
        edges.push_back({open.back(), v});
        if (s == Step::SpecialDown) special.push_back(edges.back());
        open.pop_back();
        break;
      case Step::Horiz:
        if (open.empty()) fail(ErrorCode::NotLittleHybrid, "horizontal step on the axis");
        edges.push_back({open.back(), v + 1});
        open.back() = v;
        break;
    }
    v += step_width(s);
  }
  return HybridMatching(path.length(), std::move(edges), std::move(special));
}

HybridMatching path_to_matching(const LatticePath& path) {
  if (!is_hybrid(path, Flavor::Little)) fail(ErrorCode::NotLittleHybrid, to_tokens(path));
  return path_to_matching_unchecked(path);
}

LatticePath matching_to_path(const HybridMatching& m) {
  if (!k_distant_crossings(m, 2).empty()) fail(ErrorCode::HasKDistantCrossing, format_matching(m));

  const auto n = static_cast<std::size_t>(m.n_vertices());
  std::vector<bool> horiz_start(n + 2, false);
  for (const auto& c : k_distant_crossings(m, 1))
    horiz_start[static_cast<std::size_t>(c.right_edge.left)] = true;

  std::vector<bool> is_left(n + 1, false), is_special_right(n + 1, false);
  for (const auto& e : m.edges()) is_left[static_cast<std::size_t>(e.left)] = true;
  for (const auto& e : m.special_edges()) is_special_right[static_cast<std::size_t>(e.right)] = true;

  std::vector<Step> steps;
  for (std::size_t v = 1; v <= n;) {
    if (horiz_start[v]) {
      steps.push_back(Step::Horiz);
      v += 2;
    } else {
      steps.push_back(is_left[v] ? Step::Up : is_special_right[v] ? Step::SpecialDown : Step::Down);
      ++v;
    }
  }

  LatticePath path;
  try {
    path = LatticePath(std::move(steps));
  } catch (const Error&) {
    fail(ErrorCode::NotLittleHybrid, format_matching(m));
  }
  if (!is_hybrid(path, Flavor::Little) || path_to_matching_unchecked(path) != m)
    fail(ErrorCode::NotLittleHybrid, format_matching(m));
  return path;
}

std::optional<Edge> immediately_nesting_edge(const HybridMatching& m, const Edge& e) {
  const auto nests = [](const Edge& outer, const Edge& inner) {
    return outer.left < inner.left && inner.right < outer.right;
  };
  std::vector<Edge> nesting;
  for (const auto& a : m.edges())
    if (nests(a, e)) nesting.push_back(a);
  for (const auto& a : nesting) {
    bool immediate = true;
    for (const auto& other : nesting)
      if (other != a && !nests(other, a)) immediate = false;
    if (immediate) return a;
  }
  return std::nullopt;
}

int transitive_left_endpoint(const HybridMatching& m, const Edge& e) {
  Edge cur = e;
  // cur is the right edge of a 1-distant crossing exactly when the vertex
  // after its left endpoint closes an edge that opened before it.
  while (cur.left + 1 < cur.right) {
    const Edge f = m.edge_at(cur.left + 1);
    if (f.right != cur.left + 1 || f.left >= cur.left) break;
    cur = f;
  }
  return cur.left;
}

HybridMatching matching_evolve_step(const HybridMatching& m) {
  const auto specials = m.special_edges();
  if (specials.empty()) fail(ErrorCode::NoSpecialEdge, format_matching(m));
  try {
    matching_to_path(m);
  } catch (const Error&) {
    fail(ErrorCode::NotLittleHybrid, format_matching(m));
  }

  const Edge target = *std::min_element(specials.begin(), specials.end(),
                                        [](const Edge& x, const Edge& y) { return x.right < y.right; });
  // Special status belongs to the right endpoint (the special downstep).
  std::set<int> special_rights;
  for (const auto& s : specials)
    if (s != target) special_rights.insert(s.right);

  std::vector<Edge> edges;
  if (target.right == target.left + 1) {
    // flatten: swap tails with the immediately nesting edge
    const int c = target.left;
    const auto outer = immediately_nesting_edge(m, target);
    if (!outer) fail(ErrorCode::NotLittleHybrid, "special edge is not nested");
    for (const auto& e : m.edges())
      if (e != target && e != *outer) edges.push_back(e);
    edges.push_back({c, outer->right});
    edges.push_back({outer->left, c + 1});
  } else {
    // slide: vertices c+1 .. b-1 move right by one, (a, c+1) closes the gap
    const int a = target.left;
    const int b = target.right;
    const Edge before = m.edge_at(b - 1);
    if (before.right != b - 1) fail(ErrorCode::NotLittleHybrid, "special edge not preceded by a closing vertex");
    const int c = transitive_left_endpoint(m, before);
    const auto shift = [&](int v) { return v > c && v < b ? v + 1 : v; };
    for (const auto& e : m.edges())
      if (e != target) edges.push_back({shift(e.left), shift(e.right)});
    edges.push_back({a, c + 1});
    std::set<int> moved;
    for (int v : special_rights) moved.insert(shift(v));
    special_rights = std::move(moved);
  }

  std::vector<Edge> special;
  for (const auto& e : edges)
    if (special_rights.count(e.right)) special.push_back(e);
  return HybridMatching(m.n_vertices(), std::move(edges), std::move(special));
}

std::pair<int, int> crossing_outer_vertices(const LatticePath& path, int horiz_pos) {
  const std::size_t x = path.index_at(horiz_pos);
  if (path[x] != Step::Horiz) fail(ErrorCode::NotHoriz, "unit position " + std::to_string(horiz_pos));
  const auto h = path.heights();
  const int level = h[x];
  if (level == 0) fail(ErrorCode::NotLittleHybrid, "horizontal step on the axis");

  const auto& steps = path.steps();
  const std::size_t d = match_index(steps, h, x);
  const std::size_t u = match_index(steps, h, d);

  int right = path.unit_position(d);
  for (std::size_t i = x + 1; i < d; ++i)
    if (steps[i] == Step::Horiz && h[i] == level) {
      right = path.unit_position(i) + 1;
      break;
    }
  int left = path.unit_position(u);
  for (std::size_t i = x; i-- > u + 1;)
    if (steps[i] == Step::Horiz && h[i] == level) {
      left = path.unit_position(i);
      break;
    }
  return {left, right};
}

HybridMatching parse_matching(std::string_view text) {
  std::vector<Edge> edges, special;
  int n = 0;
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };
  const auto read_int = [&]() -> int {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) fail(ErrorCode::InvalidMatching, "expected a vertex number");
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  const auto expect = [&](char c) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= text.size() || text[i] != c)
      fail(ErrorCode::InvalidMatching, std::string("expected '") + c + "'");
    ++i;
  };

  for (skip_ws(); i < text.size(); skip_ws()) {
    expect('(');
    Edge e;
    e.left = read_int();
    expect(',');
    e.right = read_int();
    expect(')');
    if (e.left > e.right) std::swap(e.left, e.right);
    edges.push_back(e);
    n = std::max(n, e.right);
    if (i < text.size() && text[i] == '*') {
      special.push_back(e);
      ++i;
    } else if (text.substr(i, 3) == "\xE2\x98\x85") {
      special.push_back(e);
      i += 3;
    }
  }
  return HybridMatching(n, std::move(edges), std::move(special));
}

std::string format_matching(const HybridMatching& m) {
  std::string out;
  for (const auto& e : m.edges()) {
    if (!out.empty()) out += ',';
    out += '(' + std::to_string(e.left) + ',' + std::to_string(e.right) + ')';
    if (m.is_special(e)) out += '*';
  }
  return out;
}

}  // namespace schroeder
