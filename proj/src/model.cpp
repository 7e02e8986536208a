#include "conserv/model.hpp"

#include <cmath>

#include "conserv/errors.hpp"
#include "conserv/tolerances.hpp"

namespace conserv {

Ranking rank_values(double first, double second) {
    const double diff = first - second;
    if (diff > kCompareTolerance) return Ranking::prefer_first;
    if (diff < -kCompareTolerance) return Ranking::prefer_second;
    return Ranking::indifferent;
}

namespace {

void check_delta(double d, const std::string& path) {
    if (!std::isfinite(d) || d < 0.0 || d > 1.0) throw ValidationError(path, "delta must lie in [0, 1]");
}

}  // namespace

ConservativeSeuModel::ConservativeSeuModel(UtilityFunction u, Belief prior, std::map<Event, double> deltas,
                                           std::optional<double> default_delta)
    : u_(std::move(u)), prior_(std::move(prior)), deltas_(std::move(deltas)), default_delta_(default_delta) {
    if (default_delta_) check_delta(*default_delta_, "delta/default");
    for (const auto& [event, d] : deltas_) {
        const std::string path = "delta/" + std::to_string(event.mask());
        if (event.dimension() != prior_.dimension()) throw ValidationError(path, "event over a different state space");
        check_delta(d, path);
        if (event_prob(prior_, event) <= 0.0) throw ValidationError(path, "delta stored for a null event");
    }
}

ConservativeSeuModel ConservativeSeuModel::constant(UtilityFunction u, Belief prior, double delta) {
    return ConservativeSeuModel(std::move(u), std::move(prior), {}, delta);
}

bool ConservativeSeuModel::has_delta(const Event& event) const {
    return default_delta_.has_value() || deltas_.contains(event);
}

double ConservativeSeuModel::delta(const Event& event) const {
    if (auto it = deltas_.find(event); it != deltas_.end()) return it->second;
    if (default_delta_) return *default_delta_;
    throw DomainError("no conservatism weight stored for event mask " + std::to_string(event.mask()));
}

bool ConservativeSeuModel::is_null(const Event& event) const { return !(event_prob(prior_, event) > 0.0); }

bool ConservativeSeuModel::is_identified(const Event& event) const {
    return !is_null(event) && !is_null(event.complement());
}

Belief ConservativeSeuModel::posterior(const Event& event) const {
    if (is_null(event) || is_null(event.complement())) return prior_;
    return conservative_update(prior_, event, delta(event));
}

ConditionalSeu::ConditionalSeu(UtilityFunction u, Belief prior, PosteriorRule posterior)
    : u_(std::move(u)), prior_(std::move(prior)), rule_(std::move(posterior)) {
    if (!rule_) throw DomainError("ConditionalSeu: empty posterior rule");
}

ConditionalSeu::ConditionalSeu(const ConservativeSeuModel& model)
    : u_(model.utility()), prior_(model.prior()), rule_([model](const Event& e) { return model.posterior(e); }) {}

bool ConditionalSeu::is_null(const Event& event) const { return !(event_prob(prior_, event) > 0.0); }

Belief ConditionalSeu::posterior(const Event& event) const {
    if (event.dimension() != prior_.dimension()) throw DomainError("event over a different state space");
    if (event.is_full() || is_null(event)) return prior_;
    Belief b = rule_(event);
    if (b.dimension() != prior_.dimension()) throw DomainError("posterior rule returned a belief of wrong dimension");
    return b;
}

double conditional_value(const ConditionalSeu& prefs, const Act& f, const Event& event) {
    return expected_utility(f, prefs.posterior(event), prefs.utility());
}

Ranking prefers(const ConditionalSeu& prefs, const Act& f, const Act& g, const Event& event) {
    const Belief post = prefs.posterior(event);
    return rank_values(expected_utility(f, post, prefs.utility()), expected_utility(g, post, prefs.utility()));
}

double certainty_equivalent(const ConditionalSeu& prefs, const Act& f, const Event& event) {
    return prefs.utility().inverse(conditional_value(prefs, f, event));
}

}  // namespace conserv
