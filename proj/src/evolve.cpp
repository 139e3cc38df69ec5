#include "schroeder/evolve.hpp"

#include <algorithm>
#include <numeric>

#include "schroeder/errors.hpp"

namespace schroeder {

std::string_view flavor_name(Flavor f) noexcept { return f == Flavor::Little ? "little" : "big"; }

Flavor parse_flavor(std::string_view text) {
  if (text == "little" || text == "e" || text == "LITTLE") return Flavor::Little;
  if (text == "big" || text == "E" || text == "BIG") return Flavor::Big;
  fail(ErrorCode::OutOfRange, "unknown flavor '" + std::string(text) + "'");
}

std::vector<int> EvolutionTrace::times_left_to_right() const {
  std::vector<int> times(creation_order.size());
  std::iota(times.begin(), times.end(), 1);
  std::sort(times.begin(), times.end(), [&](int a, int b) {
    return creation_order[static_cast<std::size_t>(a - 1)] <
           creation_order[static_cast<std::size_t>(b - 1)];
  });
  return times;
}

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

std::size_t first_special(std::span<const Step> steps) {
  for (std::size_t i = 0; i < steps.size(); ++i)
    if (steps[i] == Step::SpecialDown) return i;
  return npos;
}

// Necessary conditions every hybrid path of the flavor satisfies: specials
// keep the parity they had in the starting Dyck path, every horizontal lies
// left of every special, each special follows an up or a down, and little
// paths never have a horizontal on the axis.
bool plausible(std::span<const Step> steps, std::span<const int> h, Flavor flavor) {
  bool seen_special = false;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    switch (steps[i]) {
      case Step::SpecialDown:
        if (h[i] % 2 != special_parity(flavor)) return false;
        if (i == 0 || (steps[i - 1] != Step::Up && steps[i - 1] != Step::Down)) return false;
        seen_special = true;
        break;
      case Step::Horiz:
        if (seen_special) return false;
        if (flavor == Flavor::Little && h[i] == 0) return false;
        break;
      default: break;
    }
  }
  return true;
}

// Identification of the last-added horizontal within steps [begin, end).
// Heights are absolute, so a recursive call on a hill keeps the parities of
// the enclosing path.
std::optional<std::size_t> locate_last(std::span<const Step> steps, std::span<const int> h,
                                       std::size_t begin, std::size_t end, Flavor flavor) {
  // Blocks: runs of non-horizontal steps, or a horizontal through its
  // matching down. The first active subpath is the rightmost block that
  // contains a horizontal.
  std::size_t active = npos, active_end = npos;
  for (std::size_t i = begin; i < end;) {
    if (steps[i] != Step::Horiz) {
      ++i;
      continue;
    }
    if (h[i] == 0) {
      active = i;
      active_end = i + 1;
      ++i;
      continue;
    }
    const std::size_t m = match_index(steps, h, i);
    if (m >= end) return std::nullopt;
    active = i;
    active_end = m + 1;
    i = m + 1;
  }
  if (active == npos) return std::nullopt;

  const int level = h[active];
  if (level == 0) {
    // Only flattens create axis horizontals.
    if (flavor == Flavor::Little) return std::nullopt;
    return active;
  }
  // Slides create horizontals at the special parity.
  if (level % 2 == special_parity(flavor)) return active;

  // Partition the active block (minus its matching down) into valleys and
  // hills; the second active subpath is the rightmost one with a horizontal.
  const std::size_t stop = active_end - 1;
  std::size_t second = npos, second_end = npos;
  bool second_is_hill = false;
  for (std::size_t k = active; k < stop;) {
    if (steps[k] == Step::Horiz && h[k] == level) {
      const std::size_t start = k;
      while (k < stop && steps[k] == Step::Horiz && h[k] == level) ++k;
      second = start;
      second_end = k;
      second_is_hill = false;
    } else if (steps[k] == Step::Up) {
      const std::size_t m = match_index(steps, h, k);
      if (m >= stop) return std::nullopt;
      if (std::find(steps.begin() + static_cast<std::ptrdiff_t>(k),
                    steps.begin() + static_cast<std::ptrdiff_t>(m), Step::Horiz) !=
          steps.begin() + static_cast<std::ptrdiff_t>(m)) {
        second = k;
        second_end = m + 1;
        second_is_hill = true;
      }
      k = m + 1;
    } else {
      return std::nullopt;
    }
  }
  if (!second_is_hill) return second_end - 1;
  return locate_last(steps, h, second, second_end, flavor);
}

bool applies_to(std::span<const Step> candidate, std::span<const Step> target, Flavor flavor) {
  std::vector<Step> forward(candidate.begin(), candidate.end());
  try {
    if (!evolve_in_place(forward, flavor)) return false;
  } catch (const Error&) {
    return false;
  }
  return std::equal(forward.begin(), forward.end(), target.begin(), target.end());
}

}  // namespace

std::optional<std::size_t> evolve_in_place(std::vector<Step>& steps, Flavor flavor,
                                           std::vector<int>* tags, int tag) {
  const std::size_t s = first_special(steps);
  if (s == npos) return std::nullopt;
  const auto h = start_heights(steps);
  if (!plausible(steps, h, flavor))
    fail(ErrorCode::NotHybrid, "not a " + std::string(flavor_name(flavor)) + " hybrid path");

  const auto at = [](auto& v, std::size_t i) { return v.begin() + static_cast<std::ptrdiff_t>(i); };
  if (steps[s - 1] == Step::Up) {
    // flatten
    steps[s - 1] = Step::Horiz;
    steps.erase(at(steps, s));
    if (tags) {
      (*tags)[s - 1] = tag;
      tags->erase(at(*tags, s));
    }
    return s - 1;
  }
  // slide: U P D s  ->  H P D. P keeps its indices.
  const std::size_t d = s - 1;
  const std::size_t u = match_index(steps, h, d);
  steps[u] = Step::Horiz;
  steps[s] = Step::Down;
  steps.erase(at(steps, d));
  if (tags) {
    (*tags)[u] = tag;
    tags->erase(at(*tags, d));
  }
  return u;
}

std::optional<std::size_t> last_added_index(std::span<const Step> steps, Flavor flavor) {
  const auto h = start_heights(steps);
  if (!plausible(steps, h, flavor)) return std::nullopt;
  return locate_last(steps, h, 0, steps.size(), flavor);
}

std::optional<std::vector<Step>> try_devolve(std::span<const Step> steps, Flavor flavor) {
  const auto last = last_added_index(steps, flavor);
  if (!last) return std::nullopt;
  const std::size_t x = *last;
  const auto h = start_heights(steps);
  const auto it = [&](std::size_t i) { return steps.begin() + static_cast<std::ptrdiff_t>(i); };

  std::vector<std::vector<Step>> candidates;
  // un-flatten: H -> U d
  {
    std::vector<Step> c(steps.begin(), it(x));
    c.push_back(Step::Up);
    c.push_back(Step::SpecialDown);
    c.insert(c.end(), it(x + 1), steps.end());
    candidates.push_back(std::move(c));
  }
  // un-slide: H P D -> U P D d
  if (h[x] > 0) {
    const std::size_t m = match_index(steps, h, x);
    if (m < steps.size() && steps[m] == Step::Down) {
      std::vector<Step> c(steps.begin(), it(x));
      c.push_back(Step::Up);
      c.insert(c.end(), it(x + 1), it(m));
      c.push_back(Step::Down);
      c.push_back(Step::SpecialDown);
      c.insert(c.end(), it(m + 1), steps.end());
      candidates.push_back(std::move(c));
    }
  }

  std::optional<std::vector<Step>> found;
  for (auto& c : candidates) {
    const auto ch = start_heights(c);
    if (*std::min_element(ch.begin(), ch.end()) < 0) continue;
    if (!plausible(c, ch, flavor)) continue;
    if (!applies_to(c, steps, flavor)) continue;
    if (!is_hybrid_steps(c, flavor)) continue;
    if (found) fail(ErrorCode::InternalMismatch, "two hybrid preimages");
    found = std::move(c);
  }
  return found;
}

bool is_hybrid_steps(std::span<const Step> steps, Flavor flavor) {
  const auto h = start_heights(steps);
  if (!plausible(steps, h, flavor)) return false;
  if (std::find(steps.begin(), steps.end(), Step::Horiz) == steps.end()) return true;
  return try_devolve(steps, flavor).has_value();
}

LatticePath evolve_step(const LatticePath& path, Flavor flavor) {
  auto steps = path.steps();
  evolve_in_place(steps, flavor);
  return LatticePath(std::move(steps));
}

int last_added_horizontal(const LatticePath& path, Flavor flavor) {
  if (path.count(Step::Horiz) == 0) fail(ErrorCode::NoHorizontal, to_tokens(path));
  const auto last = last_added_index(path.steps(), flavor);
  if (!last) fail(ErrorCode::NotHybrid, to_tokens(path));
  return path.unit_position(*last);
}

LatticePath devolve_step(const LatticePath& path, Flavor flavor) {
  if (path.count(Step::Horiz) == 0) fail(ErrorCode::NoHorizontal, to_tokens(path));
  auto pre = try_devolve(path.steps(), flavor);
  if (!pre) fail(ErrorCode::NotHybrid, to_tokens(path));
  return LatticePath(std::move(*pre));
}

EvolutionTrace evolve_to_schroeder(const LatticePath& path, Flavor flavor) {
  EvolutionTrace trace;
  trace.flavor = flavor;
  trace.start = path;
  auto steps = path.steps();
  std::vector<int> tags(steps.size(), 0);
  for (int t = 1; evolve_in_place(steps, flavor, &tags, t); ++t)
    trace.snapshots.emplace_back(steps);

  const auto& final_path = trace.final_path();
  trace.creation_order.assign(trace.snapshots.size(), 0);
  for (std::size_t i = 0; i < tags.size(); ++i)
    if (tags[i] > 0)
      trace.creation_order[static_cast<std::size_t>(tags[i] - 1)] = final_path.unit_position(i);
  return trace;
}

EvolutionTrace evolve_full(const LatticePath& path, Flavor flavor) {
  const auto cls = classify(path);
  if (!(flavor == Flavor::Little ? cls.esdp : cls.osdp))
    fail(ErrorCode::WrongStartClass,
         to_tokens(path) + " is not an " + (flavor == Flavor::Little ? "ESDP" : "OSDP"));
  return evolve_to_schroeder(path, flavor);
}

LatticePath devolve_full(const LatticePath& path, Flavor flavor) {
  if (!is_hybrid(path, flavor)) fail(ErrorCode::NotHybrid, to_tokens(path));
  auto steps = path.steps();
  while (std::find(steps.begin(), steps.end(), Step::Horiz) != steps.end()) {
    auto pre = try_devolve(steps, flavor);
    if (!pre) fail(ErrorCode::NotHybrid, to_tokens(path));
    steps = std::move(*pre);
  }
  return LatticePath(std::move(steps));
}

bool is_hybrid(const LatticePath& path, Flavor flavor) {
  return is_hybrid_steps(path.steps(), flavor);
}

}  // namespace schroeder
