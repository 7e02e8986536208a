#pragma once

// Recovering conservatism weights from observed beliefs or certainty
// equivalents, and ranking two agents by how conservative they are.

#include <optional>
#include <utility>
#include <vector>

#include "conserv/belief.hpp"
#include "conserv/model.hpp"
#include "conserv/utility.hpp"

namespace conserv {

struct DeltaEstimate {
    Event event;
    double value = 0.0;     // NaN when not identified
    double residual = 0.0;  // distance of the observation from the updating segment
    bool identified = false;
    bool off_segment = false;  // residual > kFitTolerance
    bool clamped = false;      // raw weight fell outside [0, 1] by more than kFitTolerance
    double raw = 0.0;          // weight before clamping
};

/// Projects `posterior` onto the segment [mu( . | A), mu] and reads off the
/// weight on mu. Not identified when mu( . | A) = mu. Throws NullEventError
/// when A is null under `prior`.
DeltaEstimate recover_delta(const Belief& prior, const Belief& posterior, const Event& event);

/// Weight implied by the conditional certainty equivalent `ce` of the bet
/// "x on A, y otherwise": the bet is worth u(x) - delta (1 - mu(A)) (u(x) - u(y)).
/// Throws DomainError when mu(A) is 0 or 1 or u(x) <= u(y).
DeltaEstimate recover_delta_from_ce(const Belief& prior, const Event& event, const UtilityFunction& u, double x,
                                    double y, double ce);

struct ConstancyCheck {
    bool constant = true;
    std::optional<double> delta;                        // common weight, if any event is identified
    std::optional<std::pair<Event, Event>> witness;     // two identified events with different weights
};

/// Compares the weights of all identified events.
ConstancyCheck is_constant_delta(const ConservativeSeuModel& model);

/// Two identified events A, B with mu(A) >= mu(B) but delta(A) > delta(B)
/// (beyond kCompareTolerance), or nothing when delta is weakly decreasing in mu.
std::optional<std::pair<Event, Event>> monotonicity_witness(const ConservativeSeuModel& model);

enum class Conservatism { first_more, second_more, equal, incomparable };

const char* conservatism_name(Conservatism c);

struct ConservatismComparison {
    Conservatism order = Conservatism::incomparable;
    double x = 0.0;   // prize on A
    double y1 = 0.0;  // consolation for the first agent
    double y2 = 0.0;  // consolation for the second agent, matching ex-ante values
    double ce1 = 0.0;
    double ce2 = 0.0;
    double gap = 0.0;  // estimated delta1(A) - delta2(A)
};

/// Offers each agent a bet on A with equal ex-ante value and compares the
/// conditional certainty equivalents after A; the more conservative agent
/// values the bet less. Incomparable when A or its complement is null for
/// either agent. Throws IncompatibleTastesError when the utilities are not
/// affinely equivalent.
ConservatismComparison compare_conservatism(const ConservativeSeuModel& m1, const ConservativeSeuModel& m2,
                                            const Event& event);

}  // namespace conserv
