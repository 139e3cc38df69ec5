#include "schroeder/permutations.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "schroeder/errors.hpp"

namespace schroeder {

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  std::vector<bool> seen(entries_.size() + 1, false);
  for (int v : entries_) {
    if (v < 1 || static_cast<std::size_t>(v) > entries_.size() || seen[static_cast<std::size_t>(v)])
      fail(ErrorCode::InvalidPermutation, "entries are not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> entries;
  if (text.find(',') != std::string_view::npos) {
    std::string token;
    std::stringstream ss{std::string(text)};
    while (std::getline(ss, token, ',')) {
      token.erase(std::remove_if(token.begin(), token.end(),
                                 [](unsigned char c) { return std::isspace(c); }),
                  token.end());
      if (token.empty() || !std::all_of(token.begin(), token.end(),
                                        [](unsigned char c) { return std::isdigit(c); }))
        fail(ErrorCode::InvalidPermutation, "bad entry '" + token + "'");
      entries.push_back(std::stoi(token));
    }
  } else {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (!std::isdigit(static_cast<unsigned char>(c)))
        fail(ErrorCode::InvalidPermutation, std::string("bad character '") + c + "'");
      entries.push_back(c - '0');
    }
  }
  return Permutation(std::move(entries));
}

std::string format_permutation(const Permutation& p) {
  std::string out;
  const bool digits = p.size() <= 9;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

bool avoids_231(const Permutation& p) {
  // Single-stack sortable iff 231-avoiding.
  std::vector<int> stack;
  int next_out = 1;
  for (int v : p.entries()) {
    while (!stack.empty() && stack.back() < v) {
      if (stack.back() != next_out) return false;
      stack.pop_back();
      ++next_out;
    }
    stack.push_back(v);
  }
  while (!stack.empty()) {
    if (stack.back() != next_out) return false;
    stack.pop_back();
    ++next_out;
  }
  return true;
}

Permutation extract_permutation(const LatticePath& start, Flavor flavor) {
  return Permutation(evolve_full(start, flavor).times_left_to_right());
}

namespace {

// Prefix test: first k entries form a permutation of [k] iff their maximum is k.
std::vector<int> good_positions_unchecked(const std::vector<int>& p) {
  std::vector<int> out{0};
  int max_so_far = 0;
  for (std::size_t k = 1; k < p.size(); ++k) {
    max_so_far = std::max(max_so_far, p[k - 1]);
    if (max_so_far == static_cast<int>(k)) out.push_back(static_cast<int>(k));
  }
  return out;
}

// Visits every 231-avoider of [n] with the number of lifts its path needs.
void grow(std::vector<int>& p, int lifts, int n,
          const std::function<void(const std::vector<int>&, int)>& visit) {
  if (static_cast<int>(p.size()) == n) {
    visit(p, lifts);
    return;
  }
  const int next = static_cast<int>(p.size()) + 1;
  if (!p.empty()) {
    for (int k : good_positions_unchecked(p)) {
      p.insert(p.begin() + k, next);
      grow(p, lifts + 1, n, visit);
      p.erase(p.begin() + k);
    }
  }
  p.push_back(next);
  grow(p, lifts, n, visit);
  p.pop_back();
}

LatticePath build_osdp_unchecked(const std::vector<int>& p) {
  if (p.empty()) return {};
  const int n = static_cast<int>(p.size());
  const auto top = std::find(p.begin(), p.end(), n);
  const auto k = static_cast<std::size_t>(top - p.begin());
  std::vector<int> rest(p.begin(), top);
  rest.insert(rest.end(), top + 1, p.end());
  auto steps = build_osdp_unchecked(rest).steps();

  if (k + 1 == p.size()) {
    // append
    steps.push_back(Step::Up);
    steps.push_back(Step::SpecialDown);
    return LatticePath(std::move(steps));
  }
  // lift after the k-th special step
  std::size_t split = 0;
  for (std::size_t seen = 0; seen < k; ++split)
    if (steps[split] == Step::SpecialDown) ++seen;
  if (start_heights(steps)[split] != 0)
    fail(ErrorCode::InternalMismatch, "lift point is not on the axis");
  const auto at = steps.begin() + static_cast<std::ptrdiff_t>(split);
  steps.insert(at, {Step::Up, Step::Up});
  steps.push_back(Step::Down);
  steps.push_back(Step::SpecialDown);
  return LatticePath(std::move(steps));
}

}  // namespace

std::vector<int> good_insertion_positions(const Permutation& p) {
  if (!avoids_231(p)) fail(ErrorCode::Not231Avoiding, format_permutation(p));
  if (p.size() == 0) return {};
  return good_positions_unchecked(p.entries());
}

LatticePath build_osdp(const Permutation& p) {
  if (!avoids_231(p)) fail(ErrorCode::Not231Avoiding, format_permutation(p));
  return build_osdp_unchecked(p.entries());
}

LatticePath build_esdp(const Permutation& p) {
  auto steps = build_osdp(p).steps();
  steps.insert(steps.begin(), Step::Up);
  steps.push_back(Step::Down);
  return LatticePath(std::move(steps));
}

std::vector<Permutation> avoiders_231(int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative size");
  std::vector<Permutation> out;
  std::vector<int> p;
  grow(p, 0, n, [&](const std::vector<int>& q, int) { out.emplace_back(q); });
  std::sort(out.begin(), out.end());
  return out;
}

std::string LengthDistribution::to_polynomial() const {
  std::string out;
  for (auto it = counts.rbegin(); it != counts.rend(); ++it) {
    if (!out.empty()) out += " + ";
    if (it->second != 1) out += std::to_string(it->second);
    out += "q^" + std::to_string(it->first);
  }
  return out.empty() ? "0" : out;
}

LengthDistribution length_distribution(int n) {
  if (n < 0) fail(ErrorCode::OutOfRange, "negative size");
  LengthDistribution dist;
  dist.n = n;
  std::vector<int> p;
  grow(p, 0, n, [&](const std::vector<int>&, int lifts) { ++dist.counts[2 * n + 2 * lifts]; });
  return dist;
}

bool horiz_order_precedes(const LatticePath& path, int a, int b) {
  const std::size_t ia = path.index_at(a);
  const std::size_t ib = path.index_at(b);
  if (path[ia] != Step::SpecialDown) fail(ErrorCode::NotSpecial, "unit position " + std::to_string(a));
  if (path[ib] != Step::SpecialDown) fail(ErrorCode::NotSpecial, "unit position " + std::to_string(b));
  if (ia >= ib) fail(ErrorCode::OutOfRange, "first special must lie left of the second");
  if (!is_down(path[ib - 1])) return false;
  const auto h = path.heights();
  const std::size_t u = match_index(path.steps(), h, ib - 1);
  return u < ia;
}

}  // namespace schroeder
