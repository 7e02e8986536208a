#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "conserv/act.hpp"

namespace conserv {

/// Acts whose outcomes are drawn from a fixed list of levels, enumerated in
/// lexicographic order (state 0 most significant). When levels^dimension
/// exceeds `cap` a deterministic seeded subsample of `cap` acts is kept, still
/// in lexicographic order.
class ActGrid {
public:
    /// Default cap: five levels on four states, i.e. 625 acts.
    static constexpr std::size_t kDefaultCap = 625;

    ActGrid(std::vector<double> levels, std::size_t dimension, std::size_t cap = kDefaultCap,
            std::uint64_t seed = 1);

    /// `count` evenly spaced levels over [lo, hi].
    static ActGrid even(double lo, double hi, std::size_t count, std::size_t dimension,
                        std::size_t cap = kDefaultCap, std::uint64_t seed = 1);

    const std::vector<double>& levels() const noexcept { return levels_; }
    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t cap() const noexcept { return cap_; }
    std::uint64_t seed() const noexcept { return seed_; }

    /// Number of acts on the full product grid (saturates at SIZE_MAX).
    std::size_t total() const noexcept { return total_; }
    std::size_t size() const noexcept { return exhaustive_ ? total_ : sampled_.size(); }
    bool exhaustive() const noexcept { return exhaustive_; }

    /// Level index per state for the i-th enumerated act.
    std::vector<std::size_t> level_indices(std::size_t i) const;
    Act act(std::size_t i) const;
    std::vector<Act> acts() const;

    /// Position of a full-grid act given its per-state level indices.
    std::size_t full_index(const std::vector<std::size_t>& level_indices) const;

private:
    std::size_t full_position(std::size_t i) const { return exhaustive_ ? i : sampled_[i]; }

    std::vector<double> levels_;
    std::size_t dimension_;
    std::size_t cap_;
    std::uint64_t seed_;
    std::size_t total_ = 0;
    bool exhaustive_ = true;
    std::vector<std::size_t> sampled_;
};

}  // namespace conserv
