#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conserv/belief.hpp"
#include "conserv/utility.hpp"

namespace conserv {

/// One real outcome per state.
class Act {
public:
    explicit Act(std::vector<double> outcomes);

    /// The act returning `x` in every state.
    static Act constant(std::size_t dimension, double x);

    std::size_t dimension() const noexcept { return outcomes_.size(); }
    std::span<const double> outcomes() const noexcept { return outcomes_; }
    double operator[](std::size_t s) const { return outcomes_[s]; }

    auto operator<=>(const Act&) const = default;

private:
    std::vector<double> outcomes_;
};

/// fAg: f on A, g on the complement.
Act splice(const Act& f, const Event& event, const Act& g);

/// Statewise w * f + (1 - w) * g.
Act mix_acts(const Act& f, const Act& g, double w);

/// Sum over states of mu(s) * u(f(s)).
double expected_utility(const Act& f, const Belief& mu, const UtilityFunction& u);

/// u(f(s)) for every state.
std::vector<double> utility_profile(const Act& f, const UtilityFunction& u);

double dot(std::span<const double> a, std::span<const double> b);

}  // namespace conserv
