#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "schroeder/paths.hpp"

namespace schroeder {

/// Which lineage a hybrid path belongs to: LITTLE paths descend from
/// even-special Dyck paths under e, BIG paths from odd-special Dyck paths
/// under E.
enum class Flavor { Little, Big };

std::string_view flavor_name(Flavor f) noexcept;
/// Accepts "little"/"big" (also "e"/"E"); throws OutOfRange otherwise.
Flavor parse_flavor(std::string_view text);

/// Parity of the height special downsteps leave from: 0 for LITTLE, 1 for BIG.
constexpr int special_parity(Flavor f) noexcept { return f == Flavor::Little ? 0 : 1; }

/// Record of a complete evolution. `creation_order[t - 1]` is the unit
/// position, in the final path, of the horizontal created by application t.
struct EvolutionTrace {
  Flavor flavor = Flavor::Big;
  LatticePath start;
  std::vector<LatticePath> snapshots;  // after each application
  std::vector<int> creation_order;

  const LatticePath& final_path() const { return snapshots.empty() ? start : snapshots.back(); }
  /// Creation times of the final path's horizontals, read left to right.
  std::vector<int> times_left_to_right() const;
};

/// One application of the flatten/slide map. Identity when there is no
/// special step. Throws NotHybrid when the leftmost special step cannot be
/// processed (wrong parity, not preceded by an up or a down, ...).
LatticePath evolve_step(const LatticePath& path, Flavor flavor);

/// Unit position of the horizontal step that the last application created.
/// Throws NoHorizontal, or NotHybrid when the partition procedure breaks down.
int last_added_horizontal(const LatticePath& path, Flavor flavor);

/// Inverse of evolve_step. Throws NoHorizontal or NotHybrid.
LatticePath devolve_step(const LatticePath& path, Flavor flavor);

/// Evolves an ESDP (LITTLE) / OSDP (BIG) into a Schröder path; throws
/// WrongStartClass for any other start.
EvolutionTrace evolve_full(const LatticePath& path, Flavor flavor);

/// Like evolve_full but accepts any hybrid path; horizontals already present
/// in `path` carry no creation time.
EvolutionTrace evolve_to_schroeder(const LatticePath& path, Flavor flavor);

/// Devolves a hybrid path back to its ESDP/OSDP. Throws NotHybrid.
LatticePath devolve_full(const LatticePath& path, Flavor flavor);

bool is_hybrid(const LatticePath& path, Flavor flavor);

// Step-vector forms used by the enumerators and verification sweeps.

/// Applies one step in place. Returns the index of the created horizontal,
/// or nullopt when the path has no special step. When `tags` is non-null it
/// is kept parallel to `steps` and the new horizontal receives `tag`.
std::optional<std::size_t> evolve_in_place(std::vector<Step>& steps, Flavor flavor,
                                           std::vector<int>* tags = nullptr, int tag = 0);

/// Index of the last-added horizontal, or nullopt when the steps are not a
/// hybrid path of the flavor in a way the procedure can detect.
std::optional<std::size_t> last_added_index(std::span<const Step> steps, Flavor flavor);

/// Unique hybrid preimage under evolve_step, or nullopt.
std::optional<std::vector<Step>> try_devolve(std::span<const Step> steps, Flavor flavor);

bool is_hybrid_steps(std::span<const Step> steps, Flavor flavor);

}  // namespace schroeder
