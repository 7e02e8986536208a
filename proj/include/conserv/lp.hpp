#pragma once

// A small dense two-phase simplex solver (Bland's rule) for the
// convex-combination feasibility problems behind belief-set operations.

#include <span>
#include <vector>

#include "conserv/belief.hpp"

namespace conserv {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    double objective = 0.0;
    std::vector<double> x;
};

/// minimize c.x subject to A x = b, x >= 0. `a` is row-major, one row per
/// constraint.
LpResult minimize(const std::vector<std::vector<double>>& a, std::vector<double> b, const std::vector<double>& c);

/// Smallest t such that some convex combination of `points` lies within t
/// of `p` in every coordinate.
double hull_distance(std::span<const Belief> points, const Belief& p);

/// hull_distance <= kFitTolerance.
bool in_hull(std::span<const Belief> points, const Belief& p);

}  // namespace conserv
