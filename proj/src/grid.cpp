#include "conserv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <unordered_set>

#include "conserv/errors.hpp"

namespace conserv {

namespace {

// Unbiased draw in [0, bound) straight from the engine, so the subsample does
// not depend on the standard library's distribution implementations.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

ActGrid::ActGrid(std::vector<double> levels, std::size_t dimension, std::size_t cap, std::uint64_t seed)
    : levels_(std::move(levels)), dimension_(dimension), cap_(cap), seed_(seed) {
    if (levels_.empty()) throw ValidationError("grid/levels", "no levels");
    if (dimension_ == 0) throw ValidationError("grid", "dimension must be positive");
    for (std::size_t i = 0; i < levels_.size(); ++i) {
        if (!std::isfinite(levels_[i])) throw ValidationError("grid/levels/" + std::to_string(i), "non-finite level");
        if (i > 0 && !(levels_[i] > levels_[i - 1]))
            throw ValidationError("grid/levels/" + std::to_string(i), "levels must be strictly ascending");
    }

    total_ = 1;
    bool overflow = false;
    for (std::size_t s = 0; s < dimension_; ++s) {
        if (total_ > std::numeric_limits<std::size_t>::max() / levels_.size()) {
            overflow = true;
            break;
        }
        total_ *= levels_.size();
    }
    if (overflow) total_ = std::numeric_limits<std::size_t>::max();

    exhaustive_ = (cap_ == 0 || total_ <= cap_) && !overflow;
    if (!exhaustive_) {
        if (cap_ == 0) throw ValidationError("grid", "grid too large to enumerate; set a cap");
        // Floyd's algorithm: cap distinct positions out of total.
        std::mt19937_64 rng(seed_);
        std::unordered_set<std::size_t> chosen;
        chosen.reserve(cap_ * 2);
        for (std::size_t j = total_ - cap_; j < total_; ++j) {
            const std::size_t t = static_cast<std::size_t>(bounded(rng, static_cast<std::uint64_t>(j) + 1));
            if (!chosen.insert(t).second) chosen.insert(j);
        }
        sampled_.assign(chosen.begin(), chosen.end());
        std::sort(sampled_.begin(), sampled_.end());
    }
}

ActGrid ActGrid::even(double lo, double hi, std::size_t count, std::size_t dimension, std::size_t cap,
                      std::uint64_t seed) {
    if (count < 2 || !(lo < hi)) throw ValidationError("grid", "need at least two levels over lo < hi");
    std::vector<double> levels(count);
    for (std::size_t i = 0; i < count; ++i)
        levels[i] = (i + 1 == count) ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    return ActGrid(std::move(levels), dimension, cap, seed);
}

std::vector<std::size_t> ActGrid::level_indices(std::size_t i) const {
    if (i >= size()) throw DomainError("act index out of range");
    std::size_t pos = full_position(i);
    std::vector<std::size_t> idx(dimension_);
    for (std::size_t s = dimension_; s-- > 0;) {
        idx[s] = pos % levels_.size();
        pos /= levels_.size();
    }
    return idx;
}

Act ActGrid::act(std::size_t i) const {
    const auto idx = level_indices(i);
    std::vector<double> out(dimension_);
    for (std::size_t s = 0; s < dimension_; ++s) out[s] = levels_[idx[s]];
    return Act(std::move(out));
}

std::vector<Act> ActGrid::acts() const {
    std::vector<Act> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) out.push_back(act(i));
    return out;
}

std::size_t ActGrid::full_index(const std::vector<std::size_t>& level_indices) const {
    if (level_indices.size() != dimension_) throw DomainError("level index vector has wrong length");
    std::size_t pos = 0;
    for (std::size_t s = 0; s < dimension_; ++s) {
        if (level_indices[s] >= levels_.size()) throw DomainError("level index out of range");
        pos = pos * levels_.size() + level_indices[s];
    }
    return pos;
}

}  // namespace conserv
