#include "conserv/identification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "conserv/act.hpp"
#include "conserv/errors.hpp"
#include "conserv/tolerances.hpp"

namespace conserv {

DeltaEstimate recover_delta(const Belief& prior, const Belief& posterior, const Event& event) {
    if (prior.dimension() != posterior.dimension() || event.dimension() != prior.dimension())
        throw DomainError("recover_delta: dimension mismatch");
    const Belief b = bayes_update(prior, event);
    const std::size_t n = prior.dimension();

    DeltaEstimate est{event};
    double vv = 0.0, pv = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        const double v = prior[s] - b[s];
        vv += v * v;
        pv += (posterior[s] - b[s]) * v;
    }
    if (max_abs_difference(prior, b) <= kSumTolerance) {
        est.value = est.raw = std::numeric_limits<double>::quiet_NaN();
        est.residual = euclidean_distance(posterior.probs(), b.probs());
        est.off_segment = est.residual > kFitTolerance;
        return est;
    }
    est.identified = true;
    est.raw = pv / vv;
    const double t = std::clamp(est.raw, 0.0, 1.0);
    est.clamped = est.raw < -kFitTolerance || est.raw > 1.0 + kFitTolerance;
    est.value = t;
    double r2 = 0.0;
    for (std::size_t s = 0; s < n; ++s) {
        const double fit = t * prior[s] + (1.0 - t) * b[s];
        r2 += (posterior[s] - fit) * (posterior[s] - fit);
    }
    est.residual = std::sqrt(r2);
    est.off_segment = est.residual > kFitTolerance;
    return est;
}

DeltaEstimate recover_delta_from_ce(const Belief& prior, const Event& event, const UtilityFunction& u, double x,
                                    double y, double ce) {
    const double p = event_prob(prior, event);
    if (!(p > 0.0) || !(p < 1.0)) throw DomainError("recover_delta_from_ce: event must have probability in (0, 1)");
    const double ux = u(x), uy = u(y);
    if (!(ux > uy)) throw DomainError("recover_delta_from_ce: x must be strictly preferred to y");
    DeltaEstimate est{event};
    est.identified = true;
    est.raw = (ux - u(ce)) / ((ux - uy) * (1.0 - p));
    est.clamped = est.raw < -kFitTolerance || est.raw > 1.0 + kFitTolerance;
    est.value = std::clamp(est.raw, 0.0, 1.0);
    return est;
}

namespace {

std::vector<std::pair<Event, double>> identified_weights(const ConservativeSeuModel& model) {
    std::vector<std::pair<Event, double>> out;
    for (const Event& e : nonempty_events(model.dimension()))
        if (model.is_identified(e) && model.has_delta(e)) out.emplace_back(e, model.delta(e));
    return out;
}

}  // namespace

ConstancyCheck is_constant_delta(const ConservativeSeuModel& model) {
    ConstancyCheck out;
    const auto w = identified_weights(model);
    if (w.empty()) return out;
    auto [lo, hi] = std::minmax_element(w.begin(), w.end(),
                                        [](const auto& a, const auto& b) { return a.second < b.second; });
    if (hi->second - lo->second > kCompareTolerance) {
        out.constant = false;
        if (hi->first < lo->first) std::swap(lo, hi);
        out.witness = std::make_pair(lo->first, hi->first);
    } else {
        out.delta = w.front().second;
    }
    return out;
}

std::optional<std::pair<Event, Event>> monotonicity_witness(const ConservativeSeuModel& model) {
    const auto w = identified_weights(model);
    for (const auto& [a, da] : w) {
        const double pa = event_prob(model.prior(), a);
        for (const auto& [b, db] : w) {
            if (a == b) continue;
            if (pa >= event_prob(model.prior(), b) - kCompareTolerance && da > db + kCompareTolerance)
                return std::make_pair(a, b);
        }
    }
    return std::nullopt;
}

const char* conservatism_name(Conservatism c) {
    switch (c) {
        case Conservatism::first_more: return "first-more";
        case Conservatism::second_more: return "second-more";
        case Conservatism::equal: return "equal";
        case Conservatism::incomparable: return "incomparable";
    }
    return "?";
}

ConservatismComparison compare_conservatism(const ConservativeSeuModel& m1, const ConservativeSeuModel& m2,
                                            const Event& event) {
    if (m1.dimension() != m2.dimension() || event.dimension() != m1.dimension())
        throw DomainError("compare_conservatism: dimension mismatch");
    const UtilityFunction& u = m1.utility();
    if (!affinely_equivalent(u, m2.utility()))
        throw IncompatibleTastesError("compare_conservatism: utilities are not affinely equivalent");

    ConservatismComparison out;
    if (!m1.is_identified(event) || !m2.is_identified(event)) return out;

    const auto& dom = u.domain();
    out.x = dom.hi;
    const double ux = u(out.x);
    const double spread = ux - u(dom.lo);
    const double k1 = 1.0 - event_prob(m1.prior(), event);
    const double k2 = 1.0 - event_prob(m2.prior(), event);
    // Equal ex-ante value: k1 (u(x) - u(y1)) = k2 (u(x) - u(y2)). The agent
    // with the smaller k gets the widest bet.
    const double stake = std::min(k1, k2) * spread;
    if (!(stake > 0.0)) throw DomainError("compare_conservatism: no matched bets in the outcome interval");
    out.y1 = (k1 <= k2) ? dom.lo : u.inverse(ux - stake / k1);
    out.y2 = (k2 < k1) ? dom.lo : u.inverse(ux - stake / k2);

    const std::size_t n = m1.dimension();
    const Act bet1 = splice(Act::constant(n, out.x), event, Act::constant(n, out.y1));
    const Act bet2 = splice(Act::constant(n, out.x), event, Act::constant(n, out.y2));
    out.ce1 = certainty_equivalent(ConditionalSeu(m1), bet1, event);
    out.ce2 = certainty_equivalent(ConditionalSeu(m2), bet2, event);
    // Conditional values are u(x) - delta_i * stake.
    out.gap = (u(out.ce2) - u(out.ce1)) / stake;
    if (out.gap > kCompareTolerance)
        out.order = Conservatism::first_more;
    else if (out.gap < -kCompareTolerance)
        out.order = Conservatism::second_more;
    else
        out.order = Conservatism::equal;
    return out;
}

}  // namespace conserv
