#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "schroeder/paths.hpp"
#include "schroeder/series.hpp"

namespace schroeder {

enum class PathClassKind {
  Dyck,
  Esdp,
  Osdp,
  LittleSchroeder,
  BigSchroeder,
  LittleHybrid,
  BigHybrid,
};

/// "dyck", "esdp", "osdp", "little-schroeder", "big-schroeder",
/// "little-hybrid", "big-hybrid".
std::string_view class_name(PathClassKind kind) noexcept;
PathClassKind parse_class(std::string_view text);

struct PathClassQuery {
  PathClassKind kind = PathClassKind::Dyck;
  int length = 0;                   // unit steps, even
  std::optional<int> specials;      // exact number of special downsteps
  std::optional<int> horizontals;   // exact number of horizontal steps
};

inline constexpr int kDefaultMaxLength = 22;
// Packed path codes hold at most 32 steps.
inline constexpr int kHardMaxLength = 32;

struct EnumerateOptions {
  int max_length = kDefaultMaxLength;
  unsigned threads = 1;
};

/// Sorted, duplicate-free packed codes (see `pack`) of every path in the
/// query. Throws LengthTooLarge or OutOfRange (odd or negative length).
std::vector<std::uint64_t> generate_codes(const PathClassQuery& query,
                                          const EnumerateOptions& options = {});

/// All paths of the query in lexicographic token order.
std::vector<LatticePath> generate(const PathClassQuery& query, const EnumerateOptions& options = {});

enum class CountMode { Exhaustive, ClosedForm };

Integer count(const PathClassQuery& query, CountMode mode = CountMode::Exhaustive,
              const EnumerateOptions& options = {});

struct BoundReport {
  int n = 0;
  Integer big_hybrids;
  Integer bound;  // 2 S_n - C_n
  bool holds = false;
  bool strict = false;
  bool passed() const { return holds && (n < 2 || strict); }
};

/// Compares the exhaustive big hybrid count at length 2n with 2 S_n - C_n.
BoundReport bound_check(int n, const EnumerateOptions& options = {});

}  // namespace schroeder
