#include "schroeder/enumerate.hpp"

#include <algorithm>
#include <array>
#include <thread>

#include "schroeder/errors.hpp"

namespace schroeder {

namespace {

constexpr std::array<std::string_view, 7> kClassNames = {
    "dyck", "esdp", "osdp", "little-schroeder", "big-schroeder", "little-hybrid", "big-hybrid",
};

bool is_hybrid_kind(PathClassKind k) {
  return k == PathClassKind::LittleHybrid || k == PathClassKind::BigHybrid;
}

struct StepRules {
  bool horiz = false;
  bool horiz_on_axis = false;
  int special_parity = -1;  // -1: no specials
};

StepRules rules_for(PathClassKind k) {
  switch (k) {
    case PathClassKind::Dyck: return {};
    case PathClassKind::Esdp: return {false, false, 0};
    case PathClassKind::Osdp: return {false, false, 1};
    case PathClassKind::LittleSchroeder: return {true, false, -1};
    case PathClassKind::BigSchroeder: return {true, true, -1};
    default: return {};
  }
}

// Depth-first generation in token order D < H < U < d.
class Generator {
 public:
  Generator(int length, StepRules rules, std::optional<int> specials, std::optional<int> horizontals,
            std::vector<std::uint64_t>& out)
      : length_(length), rules_(rules), want_d_(specials), want_h_(horizontals), out_(out) {}

  void run() { visit(0, 0, 0, 0); }

 private:
  void visit(int pos, int h, int nd, int nh) {
    const int left = length_ - pos;
    if (left == 0) {
      if (h == 0 && (!want_d_ || nd == *want_d_) && (!want_h_ || nh == *want_h_))
        out_.push_back(pack(steps_));
      return;
    }
    if (h > left) return;
    if (h > 0) descend(Step::Down, pos, h, nd, nh);
    if (rules_.horiz && left - 2 >= h && (h > 0 || rules_.horiz_on_axis) && (!want_h_ || nh < *want_h_))
      descend(Step::Horiz, pos, h, nd, nh);
    if (left - 1 >= h + 1) descend(Step::Up, pos, h, nd, nh);
    if (rules_.special_parity >= 0 && h > 0 && h % 2 == rules_.special_parity &&
        (!want_d_ || nd < *want_d_))
      descend(Step::SpecialDown, pos, h, nd, nh);
  }

  void descend(Step s, int pos, int h, int nd, int nh) {
    steps_.push_back(s);
    visit(pos + step_width(s), h + step_delta(s), nd + (s == Step::SpecialDown),
          nh + (s == Step::Horiz));
    steps_.pop_back();
  }

  int length_;
  StepRules rules_;
  std::optional<int> want_d_, want_h_;
  std::vector<std::uint64_t>& out_;
  std::vector<Step> steps_;
};

void check_length(const PathClassQuery& q, const EnumerateOptions& o) {
  if (q.length < 0) fail(ErrorCode::OutOfRange, "negative length");
  if (q.length % 2 != 0) fail(ErrorCode::OutOfRange, "length must be even");
  const int cap = std::min(o.max_length, kHardMaxLength);
  if (q.length > cap)
    fail(ErrorCode::LengthTooLarge, std::to_string(q.length) + " > " + std::to_string(cap));
}

std::vector<std::uint64_t> plain_codes(PathClassKind kind, int length, std::optional<int> specials,
                                       std::optional<int> horizontals) {
  std::vector<std::uint64_t> out;
  Generator(length, rules_for(kind), specials, horizontals, out).run();
  return out;
}

void sort_unique(std::vector<std::uint64_t>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Every intermediate path of the evolutions of the start paths, filtered
// by the number of specials and horizontals.
std::vector<std::uint64_t> closure_codes(const PathClassQuery& q, unsigned threads) {
  const Flavor flavor = q.kind == PathClassKind::LittleHybrid ? Flavor::Little : Flavor::Big;
  std::optional<int> start_specials;
  if (q.specials && q.horizontals) start_specials = *q.specials + *q.horizontals;
  const auto starts = plain_codes(flavor == Flavor::Little ? PathClassKind::Esdp : PathClassKind::Osdp,
                                  q.length, start_specials, std::nullopt);

  auto keep = [&](int nd, int nh) {
    return (!q.specials || nd == *q.specials) && (!q.horizontals || nh == *q.horizontals);
  };
  auto work = [&](std::size_t begin, std::size_t end, std::vector<std::uint64_t>& out) {
    for (std::size_t i = begin; i < end; ++i) {
      auto steps = unpack(starts[i], q.length);
      int nd = static_cast<int>(std::count(steps.begin(), steps.end(), Step::SpecialDown));
      int nh = 0;
      while (true) {
        if (keep(nd, nh)) out.push_back(pack(steps));
        if (nd == 0) break;
        if (!evolve_in_place(steps, flavor))
          fail(ErrorCode::InternalMismatch, "evolution stopped early");
        --nd;
        ++nh;
      }
    }
  };

  const unsigned n_threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(starts.size())));
  std::vector<std::vector<std::uint64_t>> parts(n_threads);
  if (n_threads == 1) {
    work(0, starts.size(), parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (starts.size() + n_threads - 1) / n_threads;
    for (unsigned t = 0; t < n_threads; ++t) {
      const std::size_t b = std::min(starts.size(), t * chunk);
      const std::size_t e = std::min(starts.size(), b + chunk);
      pool.emplace_back(work, b, e, std::ref(parts[t]));
    }
    for (auto& th : pool) th.join();
  }
  std::vector<std::uint64_t> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  sort_unique(out);
  return out;
}

Integer closed_form(const PathClassQuery& q) {
  const int n = q.length / 2;
  const bool both_free = !q.specials && !q.horizontals;
  auto start_count = [&](int j) -> Integer {
    // Counts of ESDPs / OSDPs with j specials; n = 0 has only the empty path.
    if (n == 0) return j == 0 ? 1 : 0;
    return q.kind == PathClassKind::Esdp || q.kind == PathClassKind::LittleSchroeder ||
                   q.kind == PathClassKind::LittleHybrid
               ? esdp_count(n, j)
               : osdp_count(n, j);
  };
  switch (q.kind) {
    case PathClassKind::Dyck:
      if ((q.specials && *q.specials != 0) || (q.horizontals && *q.horizontals != 0)) return 0;
      return catalan(n);
    case PathClassKind::Esdp:
    case PathClassKind::Osdp: {
      if (q.horizontals && *q.horizontals != 0) return 0;
      if (q.specials) return start_count(*q.specials);
      return q.kind == PathClassKind::Esdp ? little_schroeder(n) : big_schroeder(n);
    }
    case PathClassKind::LittleSchroeder:
    case PathClassKind::BigSchroeder: {
      if (q.specials && *q.specials != 0) return 0;
      if (q.horizontals) return start_count(*q.horizontals);
      return q.kind == PathClassKind::LittleSchroeder ? little_schroeder(n) : big_schroeder(n);
    }
    case PathClassKind::LittleHybrid:
    case PathClassKind::BigHybrid: {
      const Flavor f = q.kind == PathClassKind::LittleHybrid ? Flavor::Little : Flavor::Big;
      if (both_free) return hybrid_count_weighted(f, n);
      if (q.specials && q.horizontals) return start_count(*q.specials + *q.horizontals);
      // One of the two fixed: each start with m >= fixed specials contributes once.
      const int fixed = q.specials ? *q.specials : *q.horizontals;
      Integer total = 0;
      for (int m = fixed; m <= n; ++m) total += start_count(m);
      return total;
    }
  }
  return 0;
}

}  // namespace

std::string_view class_name(PathClassKind kind) noexcept {
  return kClassNames[static_cast<std::size_t>(kind)];
}

PathClassKind parse_class(std::string_view text) {
  for (std::size_t i = 0; i < kClassNames.size(); ++i)
    if (kClassNames[i] == text) return static_cast<PathClassKind>(i);
  fail(ErrorCode::OutOfRange, "unknown path class '" + std::string(text) + "'");
}

std::vector<std::uint64_t> generate_codes(const PathClassQuery& query, const EnumerateOptions& options) {
  check_length(query, options);
  if ((query.specials && *query.specials < 0) || (query.horizontals && *query.horizontals < 0))
    fail(ErrorCode::OutOfRange, "negative step count");
  if (is_hybrid_kind(query.kind)) return closure_codes(query, options.threads);
  auto codes = plain_codes(query.kind, query.length, query.specials, query.horizontals);
  // DFS in step order already yields sorted codes.
  return codes;
}

std::vector<LatticePath> generate(const PathClassQuery& query, const EnumerateOptions& options) {
  const auto codes = generate_codes(query, options);
  std::vector<LatticePath> out;
  out.reserve(codes.size());
  for (auto c : codes) out.emplace_back(unpack(c, query.length));
  return out;
}

Integer count(const PathClassQuery& query, CountMode mode, const EnumerateOptions& options) {
  if (mode == CountMode::Exhaustive) return Integer(static_cast<unsigned long>(generate_codes(query, options).size()));
  if (query.length < 0 || query.length % 2 != 0) fail(ErrorCode::OutOfRange, "length must be even and nonnegative");
  if ((query.specials && *query.specials < 0) || (query.horizontals && *query.horizontals < 0))
    fail(ErrorCode::OutOfRange, "negative step count");
  return closed_form(query);
}

BoundReport bound_check(int n, const EnumerateOptions& options) {
  BoundReport r;
  r.n = n;
  r.big_hybrids = count({PathClassKind::BigHybrid, 2 * n, std::nullopt, std::nullopt},
                        CountMode::Exhaustive, options);
  r.bound = 2 * big_schroeder(n) - catalan(n);
  r.holds = r.big_hybrids >= r.bound;
  r.strict = r.big_hybrids > r.bound;
  return r;
}

}  // namespace schroeder
