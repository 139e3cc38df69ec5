#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schroeder {

/// One step of a lattice path. The enumerator order is the lexicographic
/// order of the token characters ('D' < 'H' < 'U' < 'd'), so comparing step
/// sequences agrees with comparing token strings.
enum class Step : std::uint8_t {
  Down = 0,
  Horiz = 1,  // double horizontal step, two unit positions wide
  Up = 2,
  SpecialDown = 3,
};

constexpr int step_width(Step s) noexcept { return s == Step::Horiz ? 2 : 1; }

constexpr int step_delta(Step s) noexcept {
  switch (s) {
    case Step::Up: return 1;
    case Step::Horiz: return 0;
    default: return -1;
  }
}

constexpr bool is_down(Step s) noexcept {
  return s == Step::Down || s == Step::SpecialDown;
}

/// Height before each step; element `size()` is the final height.
std::vector<int> start_heights(std::span<const Step> steps);

/// A path from height 0 to height 0 that never goes below the axis.
/// Immutable once constructed.
class LatticePath {
 public:
  LatticePath() = default;
  /// Throws NegativeHeight / NonzeroFinalHeight.
  explicit LatticePath(std::vector<Step> steps);

  const std::vector<Step>& steps() const noexcept { return steps_; }
  std::size_t size() const noexcept { return steps_.size(); }
  bool empty() const noexcept { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  /// Length in unit steps (a horizontal counts two).
  int length() const noexcept;
  std::size_t count(Step kind) const noexcept;
  std::vector<int> heights() const { return start_heights(steps_); }

  /// 1-based unit position of the step at `index`.
  int unit_position(std::size_t index) const;
  /// Index of the step starting at 1-based unit position `pos`; throws
  /// OutOfRange when no step starts there.
  std::size_t index_at(int pos) const;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
  friend auto operator<=>(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Step> steps_;
};

struct PathClass {
  bool dyck = false;
  bool esdp = false;
  bool osdp = false;
  bool little_schroeder = false;
  bool big_schroeder = false;
};

enum class RenderFormat { Tokens, Ascii, Svg };

/// Parses the token grammar `(U | D | d | HH)*`; whitespace is skipped.
LatticePath parse_path(std::string_view text);
std::string to_tokens(const LatticePath& path);
std::string render_path(const LatticePath& path, RenderFormat format);

PathClass classify(const LatticePath& path);

/// Step-index form of `match_step`: the matching down for an up or a
/// horizontal at positive height, the matching up for a down.
/// Returns `steps.size()` when there is no match.
std::size_t match_index(std::span<const Step> steps, std::span<const int> heights,
                        std::size_t index);

/// Unit-position form; throws NoMatch (horizontal on the axis) or OutOfRange.
int match_step(const LatticePath& path, int unit_pos);

/// (peaks, ravines) of a Dyck path; throws NotDyck.
std::pair<int, int> peaks_and_ravines(const LatticePath& path);

/// Packs a path of at most 32 steps into 64 bits, two bits per step,
/// most significant first. Order-preserving and injective among paths of
/// equal length.
std::uint64_t pack(std::span<const Step> steps);
std::vector<Step> unpack(std::uint64_t code, int length);

}  // namespace schroeder

template <>
struct std::hash<schroeder::LatticePath> {
  std::size_t operator()(const schroeder::LatticePath& p) const noexcept {
    std::size_t h = p.size();
    for (auto s : p.steps()) h = h * 5 + static_cast<std::size_t>(s) + 1;
    return h;
  }
};
