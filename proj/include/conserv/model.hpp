#pragma once

#include <functional>
#include <map>
#include <optional>

#include "conserv/act.hpp"
#include "conserv/belief.hpp"
#include "conserv/utility.hpp"

namespace conserv {

/// Three-way outcome of a preference query.
enum class Ranking { prefer_first, prefer_second, indifferent };

/// Compares two utility values with the kCompareTolerance tie band.
Ranking rank_values(double first, double second);

/// Conservative SEU representation (u, mu, delta): after a non-null event A
/// the agent holds delta(A) * mu + (1 - delta(A)) * mu( . | A).
///
/// Weights are stored per event, with an optional fallback applied to every
/// event without an explicit entry. Conditioning on a null event leaves the
/// ex-ante belief in place. A weight on an event whose complement is null is
/// stored but not identified: it has no behavioral consequence.
class ConservativeSeuModel {
public:
    ConservativeSeuModel(UtilityFunction u, Belief prior, std::map<Event, double> deltas,
                         std::optional<double> default_delta = std::nullopt);

    /// Same weight on every event.
    static ConservativeSeuModel constant(UtilityFunction u, Belief prior, double delta);

    const UtilityFunction& utility() const noexcept { return u_; }
    const Belief& prior() const noexcept { return prior_; }
    const std::map<Event, double>& stored_deltas() const noexcept { return deltas_; }
    const std::optional<double>& default_delta() const noexcept { return default_delta_; }
    std::size_t dimension() const noexcept { return prior_.dimension(); }

    bool has_delta(const Event& event) const;
    /// Throws DomainError when no weight is available for a non-null event.
    double delta(const Event& event) const;

    bool is_null(const Event& event) const;
    /// A and its complement both non-null: the only events whose weight is pinned down by behavior.
    bool is_identified(const Event& event) const;

    /// Belief held after observing `event` (the prior for null events).
    Belief posterior(const Event& event) const;

private:
    UtilityFunction u_;
    Belief prior_;
    std::map<Event, double> deltas_;
    std::optional<double> default_delta_;
};

/// A family of conditional SEU preferences {>=_A}: a shared utility, an
/// ex-ante belief and an arbitrary posterior per event. Conservative models
/// are one instance; audits accept any family, so rules outside the
/// conservative class can be checked too.
class ConditionalSeu {
public:
    using PosteriorRule = std::function<Belief(const Event&)>;

    ConditionalSeu(UtilityFunction u, Belief prior, PosteriorRule posterior);
    ConditionalSeu(const ConservativeSeuModel& model);  // NOLINT: implicit by intent

    const UtilityFunction& utility() const noexcept { return u_; }
    const Belief& prior() const noexcept { return prior_; }
    std::size_t dimension() const noexcept { return prior_.dimension(); }

    bool is_null(const Event& event) const;
    /// The ex-ante belief for the sure event and for null events.
    Belief posterior(const Event& event) const;

private:
    UtilityFunction u_;
    Belief prior_;
    PosteriorRule rule_;
};

/// Expected utility of `f` after `event`.
double conditional_value(const ConditionalSeu& prefs, const Act& f, const Event& event);

/// f vs g under >=_A.
Ranking prefers(const ConditionalSeu& prefs, const Act& f, const Act& g, const Event& event);

/// u^{-1} of the conditional expected utility of f. Throws RangeError when
/// the value falls outside u(domain).
double certainty_equivalent(const ConditionalSeu& prefs, const Act& f, const Event& event);

}  // namespace conserv
