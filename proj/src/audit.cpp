#include "conserv/audit.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>

#include "conserv/errors.hpp"
#include "conserv/pair_scan.hpp"
#include "conserv/tolerances.hpp"

namespace conserv {

namespace {

constexpr double kEps = kCompareTolerance;

std::vector<double> restricted_weights(const Belief& mu, const Event& event) {
    std::vector<double> w(mu.dimension(), 0.0);
    for (std::size_t s = 0; s < w.size(); ++s)
        if (event.contains(s)) w[s] = mu[s];
    return w;
}

std::vector<double> as_vector(const Belief& b) { return {b.probs().begin(), b.probs().end()}; }

AuditReport start_report(Axiom axiom, const ConditionalSeu& prefs, const ActGrid& grid) {
    if (grid.dimension() != prefs.dimension()) throw DomainError("audit: grid dimension differs from the model");
    AuditReport rep;
    rep.axiom = axiom;
    rep.acts_enumerated = grid.size();
    rep.acts_total = grid.total();
    return rep;
}

PreferenceStatement statement(std::size_t lhs, Relation r, std::size_t rhs, const Event& given, double margin) {
    PreferenceStatement st;
    st.lhs = lhs;
    st.relation = r;
    st.rhs = rhs;
    st.given = given;
    st.margin = margin;
    return st;
}

// Per-event pair audit driver: scan, count, then materialize up to the limit.
template <class Build>
AuditReport run_pair_audit(Axiom axiom, const ConditionalSeu& prefs, const Event& event, const ActGrid& grid,
                           const AuditOptions& options, const PairPredicate& predicate, Build build) {
    AuditReport rep = start_report(axiom, prefs, grid);
    if (event.dimension() != prefs.dimension()) throw DomainError("audit: event over a different state space");
    if (prefs.is_null(event)) return rep;  // the axioms quantify over non-null events only
    std::size_t evaluated = 0;
    const auto hits = scan_pairs(grid, prefs.utility(), [&](std::span<const double> d) {
        ++evaluated;
        return predicate(d);
    });
    rep.cases_checked = evaluated;
    rep.violation_count = hits.size();
    const std::size_t keep = std::min(hits.size(), options.max_reported);
    rep.violations.reserve(keep);
    for (std::size_t i = 0; i < keep; ++i) {
        const Act f = grid.act(hits[i].f);
        const Act g = grid.act(hits[i].g);
        rep.violations.push_back(build(f, g, hits[i].finding));
    }
    return rep;
}

}  // namespace

std::string_view axiom_id(Axiom axiom) {
    switch (axiom) {
        case Axiom::dynamic_consistency: return "dc";
        case Axiom::consequentialism: return "c";
        case Axiom::dynamic_conservatism: return "dom-c";
        case Axiom::weak_consequentialism: return "wc";
        case Axiom::confirmation_bias: return "gcb";
        case Axiom::unambiguous_conservatism: return "wuc";
    }
    return "?";
}

std::optional<Axiom> parse_axiom(std::string_view id) {
    for (Axiom a : {Axiom::dynamic_consistency, Axiom::consequentialism, Axiom::dynamic_conservatism,
                    Axiom::weak_consequentialism, Axiom::confirmation_bias, Axiom::unambiguous_conservatism})
        if (axiom_id(a) == id) return a;
    return std::nullopt;
}

std::string_view relation_symbol(Relation r) {
    switch (r) {
        case Relation::weakly_prefers: return ">=";
        case Relation::strictly_prefers: return ">";
        case Relation::indifferent: return "~";
        case Relation::not_weakly_prefers: return "!>=";
    }
    return "?";
}

void AuditReport::merge(AuditReport other) {
    violation_count += other.violation_count;
    cases_checked += other.cases_checked;
    for (auto& v : other.violations) violations.push_back(std::move(v));
}

AuditReport audit_dc(const ConditionalSeu& prefs, const Event& event, const ActGrid& grid,
                     const AuditOptions& options) {
    const Event sure = Event::full(prefs.dimension());
    const auto wa = restricted_weights(prefs.prior(), event);
    const auto post = as_vector(prefs.posterior(event));
    auto predicate = [&](std::span<const double> d) -> std::optional<PairFinding> {
        const double ex_spliced = dot(wa, d);  // EU(fAg) - EU(g)
        if (ex_spliced < -kEps) return std::nullopt;
        const double cond = dot(post, d);
        if (cond >= -kEps) return std::nullopt;
        return PairFinding{0, {ex_spliced, cond, 0.0}};
    };
    auto build = [&](const Act& f, const Act& g, const PairFinding& pf) {
        Violation v;
        v.axiom = Axiom::dynamic_consistency;
        v.events = {event};
        v.roles = {"f", "g", "fAg"};
        v.acts = {f, g, splice(f, event, g)};
        v.statements = {statement(2, Relation::weakly_prefers, 1, sure, pf.margins[0]),
                        statement(1, Relation::strictly_prefers, 0, event, -pf.margins[1])};
        return v;
    };
    return run_pair_audit(Axiom::dynamic_consistency, prefs, event, grid, options, predicate, build);
}

AuditReport audit_consequentialism(const ConditionalSeu& prefs, const Event& event, const ActGrid& grid,
                                   const AuditOptions& options) {
    const auto members = event.members();
    const auto post = as_vector(prefs.posterior(event));
    auto predicate = [&](std::span<const double> d) -> std::optional<PairFinding> {
        for (std::size_t s : members)
            if (d[s] != 0.0) return std::nullopt;
        const double cond = dot(post, d);
        if (cond <= kEps) return std::nullopt;
        return PairFinding{0, {cond, 0.0, 0.0}};
    };
    auto build = [&](const Act& f, const Act& g, const PairFinding& pf) {
        Violation v;
        v.axiom = Axiom::consequentialism;
        v.events = {event};
        v.roles = {"f", "g"};
        v.acts = {f, g};
        v.statements = {statement(0, Relation::strictly_prefers, 1, event, pf.margins[0])};
        return v;
    };
    return run_pair_audit(Axiom::consequentialism, prefs, event, grid, options, predicate, build);
}

AuditReport audit_dom_c(const ConditionalSeu& prefs, const Event& event, const ActGrid& grid,
                        const AuditOptions& options) {
    const Event sure = Event::full(prefs.dimension());
    const auto prior = as_vector(prefs.prior());
    const auto wa = restricted_weights(prefs.prior(), event);
    const auto post = as_vector(prefs.posterior(event));
    auto predicate = [&](std::span<const double> d) -> std::optional<PairFinding> {
        const double ex = dot(prior, d);
        if (ex < -kEps) return std::nullopt;
        const double ex_spliced = dot(wa, d);
        if (ex_spliced < -kEps) return std::nullopt;
        const double cond = dot(post, d);
        if (cond < -kEps) return PairFinding{0, {ex, ex_spliced, cond}};
        if (ex > kEps && ex_spliced > kEps && cond <= kEps) return PairFinding{1, {ex, ex_spliced, cond}};
        return std::nullopt;
    };
    auto build = [&](const Act& f, const Act& g, const PairFinding& pf) {
        Violation v;
        v.axiom = Axiom::dynamic_conservatism;
        v.events = {event};
        v.roles = {"f", "g", "fAg"};
        v.acts = {f, g, splice(f, event, g)};
        const auto& m = pf.margins;
        if (pf.clause == 0) {
            v.clause = "weak";
            v.statements = {statement(0, Relation::weakly_prefers, 1, sure, m[0]),
                            statement(2, Relation::weakly_prefers, 1, sure, m[1]),
                            statement(1, Relation::strictly_prefers, 0, event, -m[2])};
        } else {
            v.clause = "strict";
            v.statements = {statement(0, Relation::strictly_prefers, 1, sure, m[0]),
                            statement(2, Relation::strictly_prefers, 1, sure, m[1]),
                            statement(0, Relation::indifferent, 1, event, m[2])};
        }
        return v;
    };
    return run_pair_audit(Axiom::dynamic_conservatism, prefs, event, grid, options, predicate, build);
}

namespace {

// Shared setup for the three-event axioms.
struct EventTriples {
    std::vector<Event> non_null;
    std::map<std::uint64_t, std::vector<double>> posterior;
};

EventTriples non_null_events(const ConditionalSeu& prefs) {
    EventTriples t;
    for (const Event& e : nonempty_events(prefs.dimension())) {
        if (prefs.is_null(e)) continue;
        t.non_null.push_back(e);
        t.posterior.emplace(e.mask(), as_vector(prefs.posterior(e)));
    }
    return t;
}

// Utility profile of "h on C, y elsewhere" given per-state utilities on C.
struct BetOnC {
    std::vector<std::size_t> c_levels;  // level index per member of C
    std::size_t y = 0;
};

struct TripleRecord {
    std::uint64_t a, b, c;
    std::vector<std::size_t> c_levels;
    std::size_t y;
    std::size_t x;  // gcb only
    double z;
    double margin_a, margin_b;

    auto key() const { return std::tie(a, b, c, c_levels, y, x, z); }
    bool operator<(const TripleRecord& o) const { return key() < o.key(); }
};

std::vector<double> candidate_constants(const std::vector<double>& levels, std::initializer_list<double> extra) {
    std::vector<double> z(levels);
    z.insert(z.end(), extra.begin(), extra.end());
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    return z;
}

Act bet_act(std::size_t n, const Event& c, const std::vector<double>& levels, const std::vector<std::size_t>& c_levels,
            std::size_t y) {
    std::vector<double> out(n, levels[y]);
    std::size_t k = 0;
    for (std::size_t s = 0; s < n; ++s)
        if (c.contains(s)) out[s] = levels[c_levels[k++]];
    return Act(std::move(out));
}

}  // namespace

AuditReport audit_wc(const ConditionalSeu& prefs, const ActGrid& grid, const AuditOptions& options) {
    AuditReport rep = start_report(Axiom::weak_consequentialism, prefs, grid);
    const std::size_t n = prefs.dimension();
    const auto& u = prefs.utility();
    const auto& levels = grid.levels();
    std::vector<double> ul;
    for (double x : levels) ul.push_back(u(x));

    const EventTriples ev = non_null_events(prefs);
    std::vector<TripleRecord> records;
    std::vector<double> h(n);

    for (const Event& c : ev.non_null) {
        if (c.is_full()) continue;
        std::vector<const Event*> candidates;
        for (const Event& e : ev.non_null)
            if (e.disjoint_from(c)) candidates.push_back(&e);
        const auto c_members = c.members();

        for (std::size_t i = 0; i < candidates.size(); ++i) {
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                const Event& a = *candidates[i];
                const Event& b = *candidates[j];
                const auto& pa = ev.posterior.at(a.mask());
                const auto& pb = ev.posterior.at(b.mask());

                std::vector<std::size_t> on_c(c_members.size(), 0);
                for (;;) {
                    for (std::size_t y = 0; y < levels.size(); ++y) {
                        std::fill(h.begin(), h.end(), ul[y]);
                        for (std::size_t k = 0; k < c_members.size(); ++k) h[c_members[k]] = ul[on_c[k]];
                        const double va = dot(pa, h);
                        const double vb = dot(pb, h);
                        for (double z : candidate_constants(levels, {u.inverse(va), u.inverse(vb)})) {
                            ++rep.cases_checked;
                            const double uz = u(z);
                            if (va >= uz - kEps && vb < uz - kEps)
                                records.push_back({a.mask(), b.mask(), c.mask(), on_c, y, 0, z, va - uz, uz - vb});
                            else if (vb >= uz - kEps && va < uz - kEps)
                                records.push_back({b.mask(), a.mask(), c.mask(), on_c, y, 0, z, vb - uz, uz - va});
                        }
                    }
                    std::size_t k = on_c.size();
                    while (k-- > 0) {
                        if (++on_c[k] < levels.size()) break;
                        on_c[k] = 0;
                    }
                    if (k == static_cast<std::size_t>(-1)) break;
                }
            }
        }
    }

    std::sort(records.begin(), records.end());
    rep.violation_count = records.size();
    const std::size_t keep = std::min(records.size(), options.max_reported);
    for (std::size_t i = 0; i < keep; ++i) {
        const auto& r = records[i];
        const Event a(n, r.a), b(n, r.b), c(n, r.c);
        Violation v;
        v.axiom = Axiom::weak_consequentialism;
        v.events = {a, b, c};
        v.roles = {"fCy", "z"};
        v.acts = {bet_act(n, c, levels, r.c_levels, r.y), Act::constant(n, r.z)};
        v.statements = {statement(0, Relation::weakly_prefers, 1, a, r.margin_a),
                        statement(1, Relation::strictly_prefers, 0, b, r.margin_b)};
        rep.violations.push_back(std::move(v));
    }
    return rep;
}

AuditReport audit_gcb(const ConditionalSeu& prefs, const ActGrid& grid, const AuditOptions& options) {
    AuditReport rep = start_report(Axiom::confirmation_bias, prefs, grid);
    const std::size_t n = prefs.dimension();
    const Event sure = Event::full(n);
    const auto& u = prefs.utility();
    const auto& levels = grid.levels();
    std::vector<double> ul;
    for (double x : levels) ul.push_back(u(x));

    const EventTriples ev = non_null_events(prefs);
    std::vector<TripleRecord> records;
    std::vector<double> h(n);

    for (const Event& c : ev.non_null) {
        if (c.is_full()) continue;
        std::vector<const Event*> candidates;
        for (const Event& e : ev.non_null)
            if (e.disjoint_from(c)) candidates.push_back(&e);
        const auto c_members = c.members();

        for (const Event* a : candidates) {
            for (const Event* b : candidates) {
                if (a == b) continue;
                if (likelihood_order(prefs, *a, *b) == Likelihood::second_more_likely) continue;
                const auto& pa = ev.posterior.at(a->mask());
                const auto& pb = ev.posterior.at(b->mask());
                for (std::size_t x = 0; x < levels.size(); ++x) {
                    for (std::size_t y = 0; y < x; ++y) {
                        std::fill(h.begin(), h.end(), ul[y]);
                        for (std::size_t s : c_members) h[s] = ul[x];
                        const double va = dot(pa, h);
                        const double vb = dot(pb, h);
                        for (double z : candidate_constants(levels, {u.inverse(va)})) {
                            ++rep.cases_checked;
                            const double uz = u(z);
                            if (va >= uz - kEps && vb < uz - kEps) {
                                std::vector<std::size_t> on_c(c_members.size(), x);
                                records.push_back({a->mask(), b->mask(), c.mask(), on_c, y, x, z, va - uz, uz - vb});
                            }
                        }
                    }
                }
            }
        }
    }

    std::sort(records.begin(), records.end());
    rep.violation_count = records.size();
    const std::size_t keep = std::min(records.size(), options.max_reported);
    for (std::size_t i = 0; i < keep; ++i) {
        const auto& r = records[i];
        const Event a(n, r.a), b(n, r.b), c(n, r.c);
        Violation v;
        v.axiom = Axiom::confirmation_bias;
        v.events = {a, b, c};
        v.roles = {"xCy", "z", "x", "y"};
        v.acts = {bet_act(n, c, levels, r.c_levels, r.y), Act::constant(n, r.z), Act::constant(n, levels[r.x]),
                  Act::constant(n, levels[r.y])};
        v.statements = {statement(2, Relation::strictly_prefers, 3, sure, ul[r.x] - ul[r.y]),
                        statement(0, Relation::weakly_prefers, 1, a, r.margin_a),
                        statement(1, Relation::strictly_prefers, 0, b, r.margin_b)};
        rep.violations.push_back(std::move(v));
    }
    return rep;
}

AuditReport audit_all_events(Axiom axiom, const ConditionalSeu& prefs, const ActGrid& grid,
                             const AuditOptions& options) {
    AuditReport total = start_report(axiom, prefs, grid);
    for (const Event& e : nonempty_events(prefs.dimension())) {
        if (prefs.is_null(e)) continue;
        AuditOptions remaining = options;
        remaining.max_reported = options.max_reported - std::min(options.max_reported, total.violations.size());
        switch (axiom) {
            case Axiom::dynamic_consistency: total.merge(audit_dc(prefs, e, grid, remaining)); break;
            case Axiom::consequentialism: total.merge(audit_consequentialism(prefs, e, grid, remaining)); break;
            case Axiom::dynamic_conservatism: total.merge(audit_dom_c(prefs, e, grid, remaining)); break;
            default: throw DomainError("audit_all_events: axiom is not audited per event");
        }
    }
    return total;
}

Likelihood likelihood_order(const ConditionalSeu& prefs, const Event& a, const Event& b) {
    switch (rank_values(event_prob(prefs.prior(), a), event_prob(prefs.prior(), b))) {
        case Ranking::prefer_first: return Likelihood::first_more_likely;
        case Ranking::prefer_second: return Likelihood::second_more_likely;
        case Ranking::indifferent: break;
    }
    return Likelihood::equally_likely;
}

bool statement_holds(const ConditionalSeu& prefs, const Violation& v, const PreferenceStatement& st) {
    const Belief b = prefs.posterior(st.given);
    const double diff = expected_utility(v.acts.at(st.lhs), b, prefs.utility()) -
                        expected_utility(v.acts.at(st.rhs), b, prefs.utility());
    switch (st.relation) {
        case Relation::weakly_prefers: return diff >= -kEps;
        case Relation::strictly_prefers: return diff > kEps;
        case Relation::indifferent: return std::abs(diff) <= kEps;
        case Relation::not_weakly_prefers: return diff < -kEps;
    }
    return false;
}

}  // namespace conserv
