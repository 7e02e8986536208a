#include "conserv/pair_scan.hpp"

#include <algorithm>
#include <map>

namespace conserv {

namespace {

struct DiffClass {
    double value;
    std::vector<std::pair<std::size_t, std::size_t>> level_pairs;  // (level of f, level of g)
};

std::vector<double> level_utilities(const ActGrid& grid, const UtilityFunction& u) {
    std::vector<double> out;
    out.reserve(grid.levels().size());
    for (double x : grid.levels()) out.push_back(u(x));
    return out;
}

std::vector<DiffClass> difference_classes(const std::vector<double>& ul) {
    std::map<double, std::vector<std::pair<std::size_t, std::size_t>>> by_value;
    for (std::size_t a = 0; a < ul.size(); ++a)
        for (std::size_t b = 0; b < ul.size(); ++b) by_value[ul[a] - ul[b]].emplace_back(a, b);
    std::vector<DiffClass> out;
    out.reserve(by_value.size());
    for (auto& [v, pairs] : by_value) out.push_back({v, std::move(pairs)});
    return out;
}

}  // namespace

std::size_t pair_classes(const ActGrid& grid, const UtilityFunction& u) {
    if (!grid.exhaustive()) return grid.size() * (grid.size() - 1);
    const auto classes = difference_classes(level_utilities(grid, u));
    std::size_t n = 1;
    for (std::size_t s = 0; s < grid.dimension(); ++s) n *= classes.size();
    return n;
}

std::vector<PairHit> scan_pairs(const ActGrid& grid, const UtilityFunction& u, const PairPredicate& predicate) {
    if (!grid.exhaustive()) return scan_pairs_brute_force(grid, u, predicate);

    const std::size_t n = grid.dimension();
    const std::size_t levels = grid.levels().size();
    const auto classes = difference_classes(level_utilities(grid, u));

    std::vector<std::size_t> cls(n, 0);
    std::vector<double> diff(n, classes.front().value);
    std::vector<PairHit> hits;

    for (;;) {
        if (auto finding = predicate(diff)) {
            // Expand the Cartesian product of per-state level pairs.
            std::vector<std::size_t> pick(n, 0);
            for (;;) {
                std::size_t f = 0, g = 0;
                for (std::size_t s = 0; s < n; ++s) {
                    const auto& [a, b] = classes[cls[s]].level_pairs[pick[s]];
                    f = f * levels + a;
                    g = g * levels + b;
                }
                if (f != g) hits.push_back({f, g, *finding});
                std::size_t s = n;
                while (s-- > 0) {
                    if (++pick[s] < classes[cls[s]].level_pairs.size()) break;
                    pick[s] = 0;
                }
                if (s == static_cast<std::size_t>(-1)) break;
            }
        }
        std::size_t s = n;
        while (s-- > 0) {
            if (++cls[s] < classes.size()) {
                diff[s] = classes[cls[s]].value;
                break;
            }
            cls[s] = 0;
            diff[s] = classes[0].value;
        }
        if (s == static_cast<std::size_t>(-1)) break;
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

std::vector<PairHit> scan_pairs_brute_force(const ActGrid& grid, const UtilityFunction& u,
                                            const PairPredicate& predicate) {
    const std::size_t n = grid.dimension();
    const auto ul = level_utilities(grid, u);
    std::vector<std::vector<std::size_t>> idx(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) idx[i] = grid.level_indices(i);

    std::vector<double> diff(n);
    std::vector<PairHit> hits;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            if (i == j) continue;
            for (std::size_t s = 0; s < n; ++s) diff[s] = ul[idx[i][s]] - ul[idx[j][s]];
            if (auto finding = predicate(diff)) hits.push_back({i, j, *finding});
        }
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

}  // namespace conserv
