#pragma once

// Brute-force checks of the updating axioms against the conditional
// preferences induced by a model, over finite grids of acts.
//
// Every comparison uses the kCompareTolerance band: a premise "f >= g" holds
// when EU(f) >= EU(g) - eps, "f > g" when EU(f) > EU(g) + eps, and a
// violation is reported only when the required conclusion fails by more
// than eps.

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conserv/act.hpp"
#include "conserv/belief.hpp"
#include "conserv/grid.hpp"
#include "conserv/model.hpp"

namespace conserv {

enum class Axiom {
    dynamic_consistency,       // dc
    consequentialism,          // c
    dynamic_conservatism,      // dom-c
    weak_consequentialism,     // wc
    confirmation_bias,         // gcb
    unambiguous_conservatism,  // wuc
};

std::string_view axiom_id(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view id);

enum class Relation { weakly_prefers, strictly_prefers, indifferent, not_weakly_prefers };

std::string_view relation_symbol(Relation r);

/// "acts[lhs] <relation> acts[rhs]" under the preference conditioned on
/// `given` (the full event for the ex-ante preference). `unanimous` marks
/// statements about multi-prior unanimity preferences. `margin` is the
/// expected-utility difference lhs - rhs (for unanimity, the minimum over
/// the belief set).
struct PreferenceStatement {
    std::size_t lhs = 0;
    Relation relation = Relation::weakly_prefers;
    std::size_t rhs = 0;
    Event given = Event::full(1);
    bool unanimous = false;
    double margin = 0.0;
};

/// A witness that a preference family breaks an axiom. Replaying the
/// statements through the preference relations reproduces the conflict.
struct Violation {
    Axiom axiom = Axiom::dynamic_consistency;
    std::string clause;               // "weak" or "strict" for two-part axioms
    std::vector<Event> events;        // A; or (A, B, C) for wc / gcb
    std::vector<std::string> roles;   // names of the witness acts, e.g. "f", "g", "fAg"
    std::vector<Act> acts;
    std::vector<PreferenceStatement> statements;
};

struct AuditOptions {
    /// Violations materialized in the report; the count is always exact.
    std::size_t max_reported = std::numeric_limits<std::size_t>::max();
};

struct AuditReport {
    Axiom axiom = Axiom::dynamic_consistency;
    std::vector<Violation> violations;  // lexicographic by witness
    std::size_t violation_count = 0;
    std::size_t acts_enumerated = 0;
    std::size_t acts_total = 0;
    std::size_t cases_checked = 0;

    bool clean() const noexcept { return violation_count == 0; }
    void merge(AuditReport other);
};

/// fAg >= g  =>  f >=_A g.
AuditReport audit_dc(const ConditionalSeu& prefs, const Event& event, const ActGrid& grid,
                     const AuditOptions& options = {});

/// f = g on A  =>  f ~_A g. Each unordered pair is reported once, with the
/// conditionally preferred act first.
AuditReport audit_consequentialism(const ConditionalSeu& prefs, const Event& event, const ActGrid& grid,
                                   const AuditOptions& options = {});

/// f >= g and fAg >= g  =>  f >=_A g, strict when both premises are strict.
AuditReport audit_dom_c(const ConditionalSeu& prefs, const Event& event, const ActGrid& grid,
                        const AuditOptions& options = {});

/// fCy >=_A z  <=>  fCy >=_B z for non-null A, B, C with C disjoint from A u B.
/// y and z are constant acts; f varies over the grid restricted to C. Besides
/// the grid constants, z also takes the conditional certainty equivalents of
/// fCy after A and after B, so a gap between two conditional values is found
/// even when no grid level falls inside it.
AuditReport audit_wc(const ConditionalSeu& prefs, const ActGrid& grid, const AuditOptions& options = {});

/// x > y and A >=_l B  =>  (xCy >=_A z  =>  xCy >=_B z), constants x, y, z:
/// a bet on C is valued at least as highly after the less likely event.
/// z also takes the certainty equivalent of xCy after A.
AuditReport audit_gcb(const ConditionalSeu& prefs, const ActGrid& grid, const AuditOptions& options = {});

/// Runs a per-event audit (dc, c, dom-c) on every non-null event.
AuditReport audit_all_events(Axiom axiom, const ConditionalSeu& prefs, const ActGrid& grid,
                             const AuditOptions& options = {});

enum class Likelihood { first_more_likely, second_more_likely, equally_likely };

/// Qualitative likelihood A vs B: under SEU this is mu(A) vs mu(B).
Likelihood likelihood_order(const ConditionalSeu& prefs, const Event& a, const Event& b);

/// Checks a statement against the SEU family it was produced from.
bool statement_holds(const ConditionalSeu& prefs, const Violation& v, const PreferenceStatement& st);

}  // namespace conserv
