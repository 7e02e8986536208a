#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "conserv/errors.hpp"
#include "conserv/identification.hpp"
#include "conserv/tolerances.hpp"
#include "support.hpp"

using namespace conserv;
using namespace conserv::testing;

TEST_CASE("weight recovered from an observed posterior") {
    const Belief mu = table1_prior();
    const DeltaEstimate est = recover_delta(mu, Belief({0.65, 0.1625, 0.0625, 0.125}), event_r());
    CHECK(est.identified);
    CHECK(est.value == doctest::Approx(0.5));
    CHECK(est.residual < 1e-12);
    CHECK_FALSE(est.off_segment);
    CHECK_FALSE(est.clamped);
}

TEST_CASE("weight recovered from a certainty equivalent") {
    // Bet pays 1 on r (mu = 5/8) and 0 otherwise; worth 1 - delta * 3/8.
    const DeltaEstimate est = recover_delta_from_ce(table1_prior(), event_r(), unit_linear(), 1.0, 0.0, 0.85);
    CHECK(est.identified);
    CHECK(est.value == doctest::Approx(0.4));
    CHECK_THROWS_AS(recover_delta_from_ce(table1_prior(), event_r(), unit_linear(), 0.0, 1.0, 0.5), DomainError);
    CHECK_THROWS_AS(recover_delta_from_ce(table1_prior(), Event::full(4), unit_linear(), 1.0, 0.0, 0.5), DomainError);
    // A certainty equivalent above the prize implies a negative weight.
    const DeltaEstimate low = recover_delta_from_ce(table1_prior(), event_r(), unit_linear(), 0.8, 0.0, 0.9);
    CHECK(low.clamped);
    CHECK(low.raw < 0.0);
    CHECK(low.value == 0.0);
}

TEST_CASE("estimate flags") {
    const Belief mu = table1_prior();
    // Bayes posterior coincides with the prior: nothing to identify.
    const DeltaEstimate none = recover_delta(Belief({0.5, 0.5, 0.0, 0.0}), Belief({0.5, 0.5, 0.0, 0.0}), event_r());
    CHECK_FALSE(none.identified);
    CHECK(std::isnan(none.value));

    const DeltaEstimate off = recover_delta(mu, Belief({0.25, 0.25, 0.25, 0.25}), event_r());
    CHECK(off.off_segment);
    CHECK(off.residual > kFitTolerance);

    // Past the prior, away from the Bayes posterior.
    std::vector<double> w(4);
    const Belief b = bayes_update(mu, event_r());
    for (std::size_t s = 0; s < 4; ++s) w[s] = 1.2 * mu[s] - 0.2 * b[s];
    const DeltaEstimate over = recover_delta(mu, Belief(w), event_r());
    CHECK(over.clamped);
    CHECK(over.raw == doctest::Approx(1.2));
    CHECK(over.value == 1.0);

    CHECK_THROWS_AS(recover_delta(Belief({1.0, 0.0}), Belief({1.0, 0.0}), Event(2, 0b10)), NullEventError);
}

TEST_CASE("property: posterior and certainty-equivalent round trips") {
    Rng rng(21);
    const auto u = UtilityFunction::power({0.0, 2.0}, 0.5);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 2 + rng.index(4);
        const Belief mu = interior_belief(rng, n);
        const auto events = nonempty_events(n);
        const Event& e = events[rng.index(events.size() - 1)];  // never the sure event
        const double d = rng.uniform();
        const Belief post = conservative_update(mu, e, d);
        CHECK(std::abs(recover_delta(mu, post, e).value - d) <= 1e-9);

        const double x = rng.uniform(1.0, 2.0), y = rng.uniform(0.0, 0.9);
        const Act bet = splice(Act::constant(n, x), e, Act::constant(n, y));
        const double ce = u.inverse(expected_utility(bet, post, u));
        CHECK(std::abs(recover_delta_from_ce(mu, e, u, x, y, ce).value - d) <= 1e-9);
    }
}

TEST_CASE("constancy and monotonicity of weights") {
    const Belief mu = table1_prior();
    const auto flat = ConservativeSeuModel::constant(unit_linear(), mu, 0.3);
    const ConstancyCheck c = is_constant_delta(flat);
    CHECK(c.constant);
    REQUIRE(c.delta.has_value());
    CHECK(*c.delta == doctest::Approx(0.3));
    CHECK_FALSE(monotonicity_witness(flat).has_value());

    const ConservativeSeuModel split(unit_linear(), mu, {{event_r(), 0.2}, {event_b(), 0.8}}, 0.5);
    const ConstancyCheck s = is_constant_delta(split);
    CHECK_FALSE(s.constant);
    REQUIRE(s.witness.has_value());
    CHECK(split.delta(s.witness->first) != split.delta(s.witness->second));

    // b is less likely than r and carries the larger weight: fine. The
    // reverse assignment is not.
    const ConservativeSeuModel rising(unit_linear(), mu, {{event_r(), 0.8}, {event_b(), 0.2}}, 0.5);
    const auto w = monotonicity_witness(rising);
    REQUIRE(w.has_value());
    CHECK(event_prob(mu, w->first) >= event_prob(mu, w->second));
    CHECK(rising.delta(w->first) > rising.delta(w->second));
}

TEST_CASE("comparative conservatism") {
    const Event a = Event(2, 0b01);
    const auto m1 = ConservativeSeuModel::constant(unit_linear(), Belief({0.7, 0.3}), 0.4);
    const auto m2 = ConservativeSeuModel::constant(unit_linear(), Belief({0.5, 0.5}), 0.4);
    const auto m3 = ConservativeSeuModel::constant(unit_linear(), Belief({0.5, 0.5}), 0.1);
    CHECK(compare_conservatism(m1, m2, a).order == Conservatism::equal);
    CHECK(compare_conservatism(m1, m3, a).order == Conservatism::first_more);
    CHECK(compare_conservatism(m3, m1, a).order == Conservatism::second_more);
    const auto cmp = compare_conservatism(m1, m3, a);
    CHECK(cmp.gap == doctest::Approx(0.3));
    CHECK(cmp.ce1 < cmp.ce2);

    const auto certain = ConservativeSeuModel::constant(unit_linear(), Belief({1.0, 0.0}), 0.4);
    CHECK(compare_conservatism(m1, certain, a).order == Conservatism::incomparable);

    const auto concave = ConservativeSeuModel::constant(UtilityFunction::power({0.0, 1.0}, 0.5), Belief({0.5, 0.5}), 0.4);
    CHECK_THROWS_AS(compare_conservatism(m1, concave, a), IncompatibleTastesError);
    CHECK(std::string(conservatism_name(Conservatism::first_more)) == "first-more");
}

TEST_CASE("property: comparison is invariant to affine rescaling of utility") {
    Rng rng(22);
    for (int k = 0; k < 50; ++k) {
        const auto u = UtilityFunction::power({0.0, 1.0}, rng.uniform(0.3, 1.5));
        const auto v = u.affine(rng.uniform(0.5, 4.0), rng.uniform(-2.0, 2.0));
        const Belief p1 = interior_belief(rng, 3), p2 = interior_belief(rng, 3);
        const auto d1 = random_deltas(rng, p1), d2 = random_deltas(rng, p2);
        const ConservativeSeuModel a(u, p1, d1), b(u, p2, d2), b_scaled(v, p2, d2);
        for (const Event& e : nonempty_events(3)) {
            if (e.is_full()) continue;
            const auto plain = compare_conservatism(a, b, e);
            const auto scaled = compare_conservatism(a, b_scaled, e);
            CHECK(plain.order == scaled.order);
            CHECK(std::abs(plain.gap - scaled.gap) <= 1e-9);
        }
    }
}
