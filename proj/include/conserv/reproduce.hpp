#pragma once

// Recomputes the worked examples from the built-in scenarios and checks
// them against their closed forms.

#include <string>
#include <string_view>
#include <vector>

namespace conserv {

struct ReproductionRow {
    std::vector<std::string> labels;
    double value = 0.0;
    double expected = 0.0;

    bool ok() const;  // within kReproduceTolerance
};

struct Reproduction {
    std::string name;
    std::vector<std::string> label_columns;
    std::vector<ReproductionRow> rows;

    bool ok() const;
};

inline constexpr double kReproduceTolerance = 1e-9;

/// "example1": marginal on R after r and b for five weights.
/// "example3": extreme marginals on R of the posterior sets, eleven weights.
/// "table3": certainty equivalents of a bet on R (x = 1) at both ends of
/// the alpha range; alpha weights the best case, so alpha = 0 is maxmin.
Reproduction reproduce(std::string_view name);

std::vector<std::string_view> reproduction_names();

}  // namespace conserv
