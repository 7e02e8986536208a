#include "conserv/multiprior.hpp"

#include <algorithm>
#include <limits>

#include "conserv/errors.hpp"
#include "conserv/lp.hpp"
#include "conserv/pair_scan.hpp"
#include "conserv/tolerances.hpp"

namespace conserv {

namespace {

constexpr double kEps = kCompareTolerance;

bool lex_less(const Belief& a, const Belief& b) {
    return std::lexicographical_compare(a.probs().begin(), a.probs().end(), b.probs().begin(), b.probs().end());
}

std::vector<Belief> canonical_extremes(std::vector<Belief> points) {
    if (points.empty()) throw ValidationError("priors", "belief set needs at least one point");
    const std::size_t d = points.front().dimension();
    for (const auto& p : points)
        if (p.dimension() != d) throw ValidationError("priors", "beliefs over different state spaces");

    std::vector<Belief> unique;
    for (auto& p : points) {
        const bool dup = std::any_of(unique.begin(), unique.end(),
                                     [&](const Belief& q) { return max_abs_difference(p, q) <= kEps; });
        if (!dup) unique.push_back(std::move(p));
    }
    // Drop points inside the hull of the remaining ones, one at a time.
    for (std::size_t i = 0; i < unique.size() && unique.size() > 1;) {
        std::vector<Belief> others;
        for (std::size_t j = 0; j < unique.size(); ++j)
            if (j != i) others.push_back(unique[j]);
        if (in_hull(others, unique[i]))
            unique.erase(unique.begin() + static_cast<std::ptrdiff_t>(i));
        else
            ++i;
    }
    std::sort(unique.begin(), unique.end(), lex_less);
    return unique;
}

void require_nonnull(const BeliefSet& m, const Event& event, const char* op) {
    if (event.dimension() != m.dimension()) throw DomainError(std::string(op) + ": event over a different state space");
    if (!unambiguously_nonnull(m, event))
        throw AmbiguouslyNullError(std::string(op) + ": event is null under some belief in the set");
}

void check_weight(double w, const char* op) {
    if (!(w >= 0.0 && w <= 1.0)) throw DomainError(std::string(op) + ": weight outside [0, 1]");
}

}  // namespace

BeliefSet::BeliefSet(std::vector<Belief> points) : extremes_(canonical_extremes(std::move(points))) {}

std::pair<double, double> BeliefSet::event_range(const Event& event) const {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& b : extremes_) {
        const double p = event_prob(b, event);
        lo = std::min(lo, p);
        hi = std::max(hi, p);
    }
    return {lo, hi};
}

bool contains(const BeliefSet& outer, const Belief& point) {
    if (point.dimension() != outer.dimension()) throw DomainError("contains: dimension mismatch");
    return in_hull(outer.extremes(), point);
}

bool contains(const BeliefSet& outer, const BeliefSet& inner) {
    return std::all_of(inner.extremes().begin(), inner.extremes().end(),
                       [&](const Belief& p) { return contains(outer, p); });
}

std::pair<double, double> expected_utility_range(const BeliefSet& m, const UtilityFunction& u, const Act& f) {
    const auto profile = utility_profile(f, u);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& b : m.extremes()) {
        if (b.dimension() != profile.size()) throw DomainError("expected_utility_range: dimension mismatch");
        const double v = dot(b.probs(), profile);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

namespace {

std::pair<double, double> difference_range(const BeliefSet& m, std::span<const double> d) {
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& b : m.extremes()) {
        const double v = dot(b.probs(), d);
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    return {lo, hi};
}

std::vector<double> utility_difference(const UtilityFunction& u, const Act& f, const Act& g) {
    if (f.dimension() != g.dimension()) throw DomainError("unanimity: act dimension mismatch");
    auto d = utility_profile(f, u);
    const auto ug = utility_profile(g, u);
    for (std::size_t s = 0; s < d.size(); ++s) d[s] -= ug[s];
    return d;
}

}  // namespace

bool unanimity_prefers(const BeliefSet& m, const UtilityFunction& u, const Act& f, const Act& g) {
    return difference_range(m, utility_difference(u, f, g)).first >= -kEps;
}

bool unanimity_strictly_prefers(const BeliefSet& m, const UtilityFunction& u, const Act& f, const Act& g) {
    const auto [lo, hi] = difference_range(m, utility_difference(u, f, g));
    return lo >= -kEps && hi > kEps;
}

bool unambiguously_nonnull(const BeliefSet& m, const Event& event) { return m.event_range(event).first > 0.0; }

BeliefSet set_bayes_update(const BeliefSet& m, const Event& event) {
    require_nonnull(m, event, "set_bayes_update");
    std::vector<Belief> out;
    for (const auto& b : m.extremes()) out.push_back(bayes_update(b, event));
    return BeliefSet(std::move(out));
}

BeliefSet hull_mix(const BeliefSet& m, const Event& event) {
    require_nonnull(m, event, "hull_mix");
    std::vector<Belief> out(m.extremes());
    for (const auto& b : m.extremes()) out.push_back(bayes_update(b, event));
    return BeliefSet(std::move(out));
}

BeliefSet minkowski_mix(const BeliefSet& m, const Event& event, double delta) {
    check_weight(delta, "minkowski_mix");
    require_nonnull(m, event, "minkowski_mix");
    std::vector<Belief> updated;
    for (const auto& b : m.extremes()) updated.push_back(bayes_update(b, event));
    std::vector<Belief> out;
    for (const auto& p : m.extremes())
        for (const auto& q : updated) out.push_back(mix_beliefs(p, q, delta));
    return BeliefSet(std::move(out));
}

BeliefSet weight_segment(const Belief& mu, const Event& event, double w_lo, double w_hi) {
    check_weight(w_lo, "weight_segment");
    check_weight(w_hi, "weight_segment");
    if (w_lo > w_hi) throw DomainError("weight_segment: empty weight interval");
    const Belief b = bayes_update(mu, event);
    return BeliefSet({mix_beliefs(mu, b, w_lo), mix_beliefs(mu, b, w_hi)});
}

double alpha_meu_value(const BeliefSet& m, const UtilityFunction& u, const Act& f, double alpha,
                       AlphaConvention convention) {
    check_weight(alpha, "alpha_meu_value");
    const auto [lo, hi] = expected_utility_range(m, u, f);
    if (convention == AlphaConvention::weight_on_max) return alpha * hi + (1.0 - alpha) * lo;
    return alpha * lo + (1.0 - alpha) * hi;
}

MultiPriorModel::MultiPriorModel(UtilityFunction u, BeliefSet priors, Rule rule)
    : u_(std::move(u)), priors_(std::move(priors)), rule_(rule) {}

MultiPriorModel MultiPriorModel::hull(UtilityFunction u, BeliefSet priors) {
    return MultiPriorModel(std::move(u), std::move(priors), Rule::hull);
}

MultiPriorModel MultiPriorModel::minkowski(UtilityFunction u, BeliefSet priors, std::map<Event, double> deltas,
                                           std::optional<double> default_delta) {
    MultiPriorModel m(std::move(u), std::move(priors), Rule::minkowski);
    for (const auto& [e, d] : deltas) {
        if (e.dimension() != m.dimension()) throw ValidationError("delta", "event over a different state space");
        if (!(d >= 0.0 && d <= 1.0)) throw ValidationError("delta", "delta must lie in [0, 1]");
    }
    if (default_delta && !(*default_delta >= 0.0 && *default_delta <= 1.0))
        throw ValidationError("delta/default", "delta must lie in [0, 1]");
    m.deltas_ = std::move(deltas);
    m.default_delta_ = default_delta;
    return m;
}

MultiPriorModel MultiPriorModel::segment(UtilityFunction u, Belief prior,
                                         std::map<Event, std::pair<double, double>> weights,
                                         std::optional<std::pair<double, double>> default_weights) {
    MultiPriorModel m(std::move(u), BeliefSet::singleton(std::move(prior)), Rule::segment);
    auto check = [](const std::pair<double, double>& w) {
        if (!(w.first >= 0.0 && w.first <= w.second && w.second <= 1.0))
            throw ValidationError("weights", "weight interval must satisfy 0 <= lo <= hi <= 1");
    };
    for (const auto& [e, w] : weights) check(w);
    if (default_weights) check(*default_weights);
    m.weights_ = std::move(weights);
    m.default_weights_ = default_weights;
    return m;
}

MultiPriorModel MultiPriorModel::explicit_sets(UtilityFunction u, BeliefSet priors,
                                               std::map<Event, BeliefSet> posteriors) {
    MultiPriorModel m(std::move(u), std::move(priors), Rule::explicit_sets);
    for (const auto& [e, s] : posteriors)
        if (s.dimension() != m.dimension()) throw ValidationError("posteriors", "set over a different state space");
    m.posteriors_ = std::move(posteriors);
    return m;
}

double MultiPriorModel::delta(const Event& event) const {
    if (auto it = deltas_.find(event); it != deltas_.end()) return it->second;
    if (default_delta_) return *default_delta_;
    throw DomainError("no conservatism weight stored for event mask " + std::to_string(event.mask()));
}

std::pair<double, double> MultiPriorModel::weight_interval(const Event& event) const {
    if (auto it = weights_.find(event); it != weights_.end()) return it->second;
    if (default_weights_) return *default_weights_;
    throw DomainError("no weight interval stored for event mask " + std::to_string(event.mask()));
}

BeliefSet MultiPriorModel::posterior_set(const Event& event) const {
    require_nonnull(priors_, event, "posterior_set");
    if (event.is_full()) return priors_;
    switch (rule_) {
        case Rule::hull: return hull_mix(priors_, event);
        case Rule::minkowski: return minkowski_mix(priors_, event, delta(event));
        case Rule::segment: {
            const auto [lo, hi] = weight_interval(event);
            return weight_segment(priors_.extremes().front(), event, lo, hi);
        }
        case Rule::explicit_sets:
            if (auto it = posteriors_.find(event); it != posteriors_.end()) return it->second;
            return hull_mix(priors_, event);
    }
    return priors_;
}

AuditReport audit_wuc(const MultiPriorModel& model, const Event& event, const ActGrid& grid,
                      const AuditOptions& options) {
    if (grid.dimension() != model.dimension()) throw DomainError("audit_wuc: grid dimension differs from the model");
    AuditReport rep;
    rep.axiom = Axiom::unambiguous_conservatism;
    rep.acts_enumerated = grid.size();
    rep.acts_total = grid.total();
    const BeliefSet& priors = model.priors();
    const BeliefSet post = model.posterior_set(event);
    const std::size_t n = model.dimension();

    std::vector<std::vector<double>> restricted;
    for (const auto& b : priors.extremes()) {
        std::vector<double> w(n, 0.0);
        for (std::size_t s = 0; s < n; ++s)
            if (event.contains(s)) w[s] = b[s];
        restricted.push_back(std::move(w));
    }
    auto restricted_range = [&](std::span<const double> d) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& w : restricted) {
            const double v = dot(w, d);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        return std::make_pair(lo, hi);
    };

    std::size_t evaluated = 0;
    const auto hits = scan_pairs(grid, model.utility(), [&](std::span<const double> d) -> std::optional<PairFinding> {
        ++evaluated;
        const auto [ex_lo, ex_hi] = difference_range(priors, d);
        if (ex_lo < -kEps) return std::nullopt;
        const auto [sp_lo, sp_hi] = restricted_range(d);
        if (sp_lo < -kEps) return std::nullopt;
        const auto [c_lo, c_hi] = difference_range(post, d);
        if (c_lo < -kEps) return PairFinding{0, {ex_lo, sp_lo, c_lo}};
        if (ex_hi > kEps && sp_hi > kEps && c_hi <= kEps) return PairFinding{1, {ex_hi, sp_hi, c_hi}};
        return std::nullopt;
    });
    rep.cases_checked = evaluated;
    rep.violation_count = hits.size();
    const Event sure = Event::full(n);
    const std::size_t keep = std::min(hits.size(), options.max_reported);
    for (std::size_t i = 0; i < keep; ++i) {
        const Act f = grid.act(hits[i].f);
        const Act g = grid.act(hits[i].g);
        const auto& m = hits[i].finding.margins;
        Violation v;
        v.axiom = Axiom::unambiguous_conservatism;
        v.events = {event};
        v.roles = {"f", "g", "fAg"};
        v.acts = {f, g, splice(f, event, g)};
        auto st = [&](std::size_t l, Relation r, std::size_t rh, const Event& given, double margin) {
            PreferenceStatement s;
            s.lhs = l;
            s.relation = r;
            s.rhs = rh;
            s.given = given;
            s.unanimous = true;
            s.margin = margin;
            return s;
        };
        if (hits[i].finding.clause == 0) {
            v.clause = "weak";
            v.statements = {st(0, Relation::weakly_prefers, 1, sure, m[0]), st(2, Relation::weakly_prefers, 1, sure, m[1]),
                            st(0, Relation::not_weakly_prefers, 1, event, m[2])};
        } else {
            v.clause = "strict";
            v.statements = {st(0, Relation::strictly_prefers, 1, sure, m[0]),
                            st(2, Relation::strictly_prefers, 1, sure, m[1]),
                            st(1, Relation::weakly_prefers, 0, event, -m[2])};
        }
        rep.violations.push_back(std::move(v));
    }
    return rep;
}

}  // namespace conserv
