#pragma once

// Convex sets of beliefs given by their extreme points, unanimity
// preferences over them, set-valued updating and alpha-maxmin values.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "conserv/act.hpp"
#include "conserv/audit.hpp"
#include "conserv/belief.hpp"
#include "conserv/grid.hpp"
#include "conserv/utility.hpp"

namespace conserv {

/// The convex hull of finitely many beliefs, stored canonically: duplicates
/// (within kCompareTolerance) and points inside the hull of the others
/// (within kFitTolerance) are dropped, and the rest sorted lexicographically.
class BeliefSet {
public:
    explicit BeliefSet(std::vector<Belief> points);
    static BeliefSet singleton(Belief b) { return BeliefSet({std::move(b)}); }

    const std::vector<Belief>& extremes() const noexcept { return extremes_; }
    std::size_t dimension() const noexcept { return extremes_.front().dimension(); }
    std::size_t size() const noexcept { return extremes_.size(); }

    /// Lowest and highest probability of `event` over the set.
    std::pair<double, double> event_range(const Event& event) const;

private:
    std::vector<Belief> extremes_;
};

/// Every extreme of `inner` lies in the hull of `outer`.
bool contains(const BeliefSet& outer, const BeliefSet& inner);
bool contains(const BeliefSet& outer, const Belief& point);

/// Lowest and highest expected utility of f over the set.
std::pair<double, double> expected_utility_range(const BeliefSet& m, const UtilityFunction& u, const Act& f);

/// f >=* g: f is weakly better under every belief in the set.
bool unanimity_prefers(const BeliefSet& m, const UtilityFunction& u, const Act& f, const Act& g);
/// f >* g: unanimity holds and at least one belief strictly prefers f.
bool unanimity_strictly_prefers(const BeliefSet& m, const UtilityFunction& u, const Act& f, const Act& g);

/// Every belief in the set gives A positive probability.
bool unambiguously_nonnull(const BeliefSet& m, const Event& event);

/// Prior-by-prior Bayesian update. Throws AmbiguouslyNullError when some
/// member gives A zero probability.
BeliefSet set_bayes_update(const BeliefSet& m, const Event& event);

/// conv(M u B(M, A)).
BeliefSet hull_mix(const BeliefSet& m, const Event& event);

/// delta M + (1 - delta) B(M, A).
BeliefSet minkowski_mix(const BeliefSet& m, const Event& event, double delta);

/// {w mu + (1 - w) mu( . | A) : w in [w_lo, w_hi]}.
BeliefSet weight_segment(const Belief& mu, const Event& event, double w_lo, double w_hi);

/// Which extreme alpha weights.
enum class AlphaConvention {
    weight_on_min,  // alpha * min + (1 - alpha) * max
    weight_on_max,  // alpha * max + (1 - alpha) * min; alpha = 0 is maxmin
};

double alpha_meu_value(const BeliefSet& m, const UtilityFunction& u, const Act& f, double alpha,
                       AlphaConvention convention = AlphaConvention::weight_on_min);

/// Utility plus a prior set and a rule producing the posterior set after
/// each unambiguously non-null event.
class MultiPriorModel {
public:
    enum class Rule { hull, minkowski, segment, explicit_sets };

    /// Posterior conv(M u B(M, A)).
    static MultiPriorModel hull(UtilityFunction u, BeliefSet priors);
    /// Posterior delta(A) M + (1 - delta(A)) B(M, A).
    static MultiPriorModel minkowski(UtilityFunction u, BeliefSet priors, std::map<Event, double> deltas,
                                     std::optional<double> default_delta = std::nullopt);
    /// Single prior; posterior is the segment of weights W_A.
    static MultiPriorModel segment(UtilityFunction u, Belief prior, std::map<Event, std::pair<double, double>> weights,
                                   std::optional<std::pair<double, double>> default_weights = std::nullopt);
    /// Stored posterior sets; events without one fall back to the hull rule.
    static MultiPriorModel explicit_sets(UtilityFunction u, BeliefSet priors, std::map<Event, BeliefSet> posteriors);

    const UtilityFunction& utility() const noexcept { return u_; }
    const BeliefSet& priors() const noexcept { return priors_; }
    Rule rule() const noexcept { return rule_; }
    std::size_t dimension() const noexcept { return priors_.dimension(); }
    const std::map<Event, double>& deltas() const noexcept { return deltas_; }
    const std::optional<double>& default_delta() const noexcept { return default_delta_; }
    const std::map<Event, std::pair<double, double>>& weights() const noexcept { return weights_; }
    const std::optional<std::pair<double, double>>& default_weights() const noexcept { return default_weights_; }

    double delta(const Event& event) const;
    std::pair<double, double> weight_interval(const Event& event) const;

    /// The prior set for the sure event; throws AmbiguouslyNullError for
    /// events that are not unambiguously non-null.
    BeliefSet posterior_set(const Event& event) const;

private:
    MultiPriorModel(UtilityFunction u, BeliefSet priors, Rule rule);

    UtilityFunction u_;
    BeliefSet priors_;
    Rule rule_;
    std::map<Event, double> deltas_;
    std::optional<double> default_delta_;
    std::map<Event, std::pair<double, double>> weights_;
    std::optional<std::pair<double, double>> default_weights_;
    std::map<Event, BeliefSet> posteriors_;
};

/// f >=* g and fAg >=* g  =>  f >=*_A g, strict when both premises are
/// strict, with unanimity over the prior and posterior sets.
AuditReport audit_wuc(const MultiPriorModel& model, const Event& event, const ActGrid& grid,
                      const AuditOptions& options = {});

}  // namespace conserv
