#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schroeder/evolve.hpp"
#include "schroeder/paths.hpp"

namespace schroeder {

/// A permutation of {1..n} in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InvalidPermutation unless `entries` is a rearrangement of 1..n.
  explicit Permutation(std::vector<int> entries);

  const std::vector<int>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  int operator[](std::size_t i) const { return entries_[i]; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> entries_;
};

/// Digit string ("2413") or comma-separated list ("10,1,2,...").
Permutation parse_permutation(std::string_view text);
/// Digit string for n <= 9, comma-separated otherwise.
std::string format_permutation(const Permutation& p);

bool avoids_231(const Permutation& p);

/// Creation times of the horizontals of the Schröder path reached from an
/// ESDP (LITTLE) or OSDP (BIG), read left to right. Throws WrongStartClass.
Permutation extract_permutation(const LatticePath& start, Flavor flavor);

/// Positions k (insert after the k-th entry, end excluded) at which n may be
/// inserted into p in S_{n-1}(231) keeping 231-avoidance. Throws Not231Avoiding.
std::vector<int> good_insertion_positions(const Permutation& p);

/// OSDP whose evolution under E creates horizontals in the order p, built by
/// append and lift. Throws Not231Avoiding.
LatticePath build_osdp(const Permutation& p);
/// U + build_osdp(p) + D, an ESDP with the same permutation under e.
LatticePath build_esdp(const Permutation& p);

/// S_n(231) in lexicographic order, generated by good insertion.
std::vector<Permutation> avoiders_231(int n);

struct LengthDistribution {
  int n = 0;
  std::map<int, std::uint64_t> counts;  // path length -> number of permutations

  /// "q^14 + 6q^12 + 6q^10 + q^8": descending exponents.
  std::string to_polynomial() const;
};

LengthDistribution length_distribution(int n);

/// For specials at unit positions a < b of a hybrid path: true iff b is
/// preceded by a downstep whose matching upstep lies left of a, i.e. h(b)
/// will be created left of h(a). Throws NotSpecial.
bool horiz_order_precedes(const LatticePath& path, int a, int b);

}  // namespace schroeder
