#pragma once

// Hand-rolled generators shared by the property and acceptance tests.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "conserv/belief.hpp"
#include "conserv/model.hpp"
#include "conserv/multiprior.hpp"
#include "conserv/utility.hpp"

namespace conserv::testing {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }
    bool coin() { return (eng_() >> 63) != 0; }

private:
    std::mt19937_64 eng_;
};

/// Every weight at least `floor` before normalizing.
inline Belief interior_belief(Rng& rng, std::size_t n, double floor = 0.05) {
    std::vector<double> w(n);
    for (auto& x : w) x = rng.uniform(floor, 1.0);
    return Belief::from_weights(std::move(w));
}

/// A belief with zero mass on a random nonempty proper subset of states.
inline Belief boundary_belief(Rng& rng, std::size_t n) {
    std::vector<double> w(n);
    for (auto& x : w) x = rng.uniform(0.05, 1.0);
    const std::size_t zeros = 1 + rng.index(n - 1);
    for (std::size_t k = 0; k < zeros; ++k) w[rng.index(n)] = 0.0;
    bool any = false;
    for (double x : w) any = any || x > 0.0;
    if (!any) w[0] = 1.0;
    return Belief::from_weights(std::move(w));
}

/// Independent weight per non-null, non-full event.
inline std::map<Event, double> random_deltas(Rng& rng, const Belief& prior, double lo = 0.0, double hi = 1.0) {
    std::map<Event, double> out;
    for (const Event& e : nonempty_events(prior.dimension()))
        if (!e.is_full() && event_prob(prior, e) > 0.0) out.emplace(e, rng.uniform(lo, hi));
    return out;
}

inline UtilityFunction unit_linear() { return UtilityFunction::linear({0.0, 1.0}); }

inline ConservativeSeuModel random_model(Rng& rng, std::size_t n) {
    const Belief prior = interior_belief(rng, n);
    return ConservativeSeuModel(unit_linear(), prior, random_deltas(rng, prior));
}

inline BeliefSet random_belief_set(Rng& rng, std::size_t n, std::size_t max_points) {
    std::vector<Belief> pts;
    const std::size_t k = 1 + rng.index(max_points);
    for (std::size_t i = 0; i < k; ++i) pts.push_back(interior_belief(rng, n));
    return BeliefSet(std::move(pts));
}

// Urn priors used throughout, states ordered (R,r), (B,r), (R,b), (B,b).
inline Belief table1_prior() { return Belief({0.5, 0.125, 0.125, 0.25}); }
inline Belief table2_mu() { return Belief({0.4, 0.1, 0.2, 0.3}); }
inline Belief table2_mu_prime() { return Belief({0.3, 0.2, 0.3, 0.2}); }
inline Event event_r() { return Event(4, 0b0011); }
inline Event event_b() { return Event(4, 0b1100); }
inline Event event_R() { return Event(4, 0b0101); }

inline std::vector<double> values(const Act& f) { return {f.outcomes().begin(), f.outcomes().end()}; }

}  // namespace conserv::testing
