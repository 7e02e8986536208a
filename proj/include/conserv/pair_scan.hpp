#pragma once

// Enumeration of ordered act pairs (f, g) on a grid for axioms whose
// premises and conclusions depend on the pair only through the utility
// difference d = u(f) - u(g).
//
// On an exhaustive grid the scan visits each distinct difference vector once
// and expands only the classes that produce a finding into concrete pairs.
// On a subsampled grid it falls back to visiting every pair. Both paths
// compute d from the same per-level utilities, so they return identical hits.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "conserv/grid.hpp"
#include "conserv/utility.hpp"

namespace conserv {

struct PairFinding {
    int clause = 0;
    std::array<double, 3> margins{};
};

struct PairHit {
    std::size_t f = 0;  // grid positions (ActGrid::act)
    std::size_t g = 0;
    PairFinding finding;

    bool operator<(const PairHit& o) const noexcept {
        if (f != o.f) return f < o.f;
        if (g != o.g) return g < o.g;
        return finding.clause < o.finding.clause;
    }
};

using PairPredicate = std::function<std::optional<PairFinding>(std::span<const double> diff)>;

/// All pairs f != g with a finding, sorted by (f, g).
std::vector<PairHit> scan_pairs(const ActGrid& grid, const UtilityFunction& u, const PairPredicate& predicate);

/// Reference implementation visiting every ordered pair.
std::vector<PairHit> scan_pairs_brute_force(const ActGrid& grid, const UtilityFunction& u,
                                            const PairPredicate& predicate);

/// Number of predicate evaluations scan_pairs performs on this grid.
std::size_t pair_classes(const ActGrid& grid, const UtilityFunction& u);

}  // namespace conserv
