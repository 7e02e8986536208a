#include "conserv/act.hpp"

#include <cmath>

#include "conserv/errors.hpp"

namespace conserv {

Act::Act(std::vector<double> outcomes) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) throw ValidationError("", "act has no outcomes");
    for (std::size_t s = 0; s < outcomes_.size(); ++s)
        if (!std::isfinite(outcomes_[s])) throw ValidationError(std::to_string(s), "non-finite outcome");
}

Act Act::constant(std::size_t dimension, double x) { return Act(std::vector<double>(dimension, x)); }

Act splice(const Act& f, const Event& event, const Act& g) {
    if (f.dimension() != g.dimension() || f.dimension() != event.dimension())
        throw DomainError("splice: dimension mismatch");
    std::vector<double> out(f.dimension());
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = event.contains(s) ? f[s] : g[s];
    return Act(std::move(out));
}

Act mix_acts(const Act& f, const Act& g, double w) {
    if (f.dimension() != g.dimension()) throw DomainError("mix_acts: dimension mismatch");
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError("mix_acts: weight outside [0, 1]");
    std::vector<double> out(f.dimension());
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = w * f[s] + (1.0 - w) * g[s];
    return Act(std::move(out));
}

std::vector<double> utility_profile(const Act& f, const UtilityFunction& u) {
    std::vector<double> out(f.dimension());
    for (std::size_t s = 0; s < out.size(); ++s) out[s] = u(f[s]);
    return out;
}

double dot(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw DomainError("dot: dimension mismatch");
    double t = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
    return t;
}

double expected_utility(const Act& f, const Belief& mu, const UtilityFunction& u) {
    if (f.dimension() != mu.dimension()) throw DomainError("expected_utility: dimension mismatch");
    double t = 0.0;
    for (std::size_t s = 0; s < f.dimension(); ++s) t += mu[s] * u(f[s]);
    return t;
}

}  // namespace conserv
