#pragma once

#include <utility>
#include <vector>

#include "adic/numbers.hpp"
#include "adic/tower.hpp"

namespace adic {

/// Finite prefix of a point's tower code: at each level n the tower index
/// and the 1-based position inside that tower's crossing word, position 1
/// being the bottom copy (largest entrance time) and the last position the
/// top (entrance time 0). Denotes the partition atom cut out by all levels.
struct PointCode {
    std::vector<std::pair<int, int>> pairs;  // (tower, position) at level k+1

    int depth() const { return static_cast<int>(pairs.size()); }
    int tower(int n) const { return pairs[static_cast<size_t>(n - 1)].first; }
    int position(int n) const { return pairs[static_cast<size_t>(n - 1)].second; }
};

enum class Fill { Min, Max };

// Range and downward-compatibility checks; throws IncompatibleCodeError
// naming the first failing level.
void validate_code(const TowerSystem& sys, const PointCode& code);

// Count of visits to each tower of level n-1 that remain after the current
// position inside the level-n word, i.e. the letters strictly past it.
std::vector<int> remaining_visits(const TowerSystem& sys, const PointCode& code, int n);

// First entrance time into the level-n roof: r_n = r_{n-1} + <s_{n-1}, H(n-1)>.
BigInt entrance_time(const TowerSystem& sys, const PointCode& code, int n);

// All entrance times r_1..r_depth in one pass.
std::vector<BigInt> entrance_times(const TowerSystem& sys, const PointCode& code);

// Adic successor: increment the lowest non-maximal position, reset lower
// levels to the bottom path. Every entrance time that was positive drops by
// exactly one. Throws CarryOverflowError on the all-maximal prefix.
PointCode successor(const TowerSystem& sys, const PointCode& code);

// Code with the given top tower, all positions minimal (bottom of every
// stage) or maximal (top, forcing tower 1 below by the last-letter rule).
PointCode canonical_code(const TowerSystem& sys, int depth, int top, Fill fill);

// Level-1 tower labels along the forward orbit, for systems whose level-1
// towers are single stages. Throws HeightNotUnitError otherwise and
// CarryOverflowError when the code is too shallow for K steps.
std::vector<int> orbit_labels(const TowerSystem& sys, const PointCode& code, long K);

// Two codes differing only in the selected even levels n, where the visit
// count difference is exactly the unit vector of the requested tower index.
// Requires all matrix entries >= 2 below `depth` (telescope first).
std::pair<PointCode, PointCode> witness_pair(const TowerSystem& sys,
                                             const std::vector<std::pair<int, int>>& selected,
                                             int depth);

}  // namespace adic
