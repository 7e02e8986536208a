#pragma once

// Scenario files: JSON descriptions of a state space, a utility, beliefs,
// conservatism parameters, named acts and events, and an audit grid. See
// docs/scenario-schema.md.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conserv/act.hpp"
#include "conserv/belief.hpp"
#include "conserv/grid.hpp"
#include "conserv/model.hpp"
#include "conserv/multiprior.hpp"
#include "conserv/utility.hpp"

namespace conserv {

struct GridSpec {
    std::vector<double> levels;
    std::size_t cap = ActGrid::kDefaultCap;
    std::uint64_t seed = 1;
};

struct Scenario {
    StateSpace states{{"s0", "s1"}};
    OutcomeInterval outcomes{};
    UtilityFunction utility = UtilityFunction::linear({});

    // Exactly one of `prior` and `priors` is set.
    std::optional<Belief> prior;
    std::vector<Belief> priors;
    // Posterior rule for sets of beliefs: hull, minkowski or segment. Unset
    // means conservative SEU for a single prior and hull otherwise.
    std::optional<std::string> rule;

    std::map<std::string, double> delta;  // by event name
    std::optional<double> default_delta;
    std::map<std::string, std::pair<double, double>> weights;
    std::optional<std::pair<double, double>> default_weights;

    std::map<std::string, Event> events;
    std::map<std::string, Act> acts;
    GridSpec grid;

    bool multi_prior() const noexcept { return !prior.has_value(); }
};

/// Throws ParseError for malformed JSON (path "line:column") and
/// ValidationError naming the offending field otherwise.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);

/// Canonical JSON text; numbers carry enough digits to round-trip exactly.
std::string serialize_scenario(const Scenario& sc);

/// Same content, with beliefs compared within a few ulps.
bool equivalent(const Scenario& a, const Scenario& b);

/// A named event, or a state label standing for its singleton. Throws
/// ValidationError for unknown names.
Event resolve_event(const Scenario& sc, const std::string& name);
const Act& resolve_act(const Scenario& sc, const std::string& name);

/// Name of `event` in the scenario, or its member labels in braces.
std::string event_name(const Scenario& sc, const Event& event);

/// The single-prior model. Throws ValidationError for multi-prior scenarios.
ConservativeSeuModel seu_model(const Scenario& sc);
MultiPriorModel multi_prior_model(const Scenario& sc);
BeliefSet prior_set(const Scenario& sc);

/// Beliefs held after `event`: the conservative SEU posterior for a single
/// prior without a rule, otherwise the rule's posterior set.
BeliefSet posterior_set(const Scenario& sc, const Event& event);

ActGrid make_grid(const Scenario& sc);

/// A decimal or a fraction "p/q". Throws ValidationError.
double parse_number(std::string_view text);

}  // namespace conserv
