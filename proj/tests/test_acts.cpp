#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "conserv/act.hpp"
#include "conserv/errors.hpp"
#include "conserv/model.hpp"
#include "support.hpp"

using namespace conserv;
using namespace conserv::testing;

namespace {

const Act bet_R({1, 0, 1, 0});
const Act bet_B({0, 1, 0, 1});

}  // namespace

TEST_CASE("splicing and expected utility") {
    const Act joined = splice(bet_R, event_R(), bet_B);
    CHECK(values(joined) == std::vector<double>{1, 1, 1, 1});
    CHECK(values(splice(bet_R, event_r(), bet_B)) == std::vector<double>{1, 0, 0, 1});
    CHECK(expected_utility(bet_R, table1_prior(), unit_linear()) == doctest::Approx(0.625));
    CHECK(values(mix_acts(bet_R, bet_B, 0.25)) == std::vector<double>{0.25, 0.75, 0.25, 0.75});
    CHECK_THROWS_AS(splice(bet_R, Event(3, 1), bet_B), DomainError);
}

TEST_CASE("conditional preferences of the urn agent") {
    const auto model = ConservativeSeuModel::constant(unit_linear(), table1_prior(), 0.5);
    const ConditionalSeu prefs(model);
    CHECK(conditional_value(prefs, bet_R, event_r()) == doctest::Approx(0.7125));
    CHECK(prefers(prefs, bet_R, Act::constant(4, 0.70), event_r()) == Ranking::prefer_first);
    CHECK(prefers(prefs, bet_R, Act::constant(4, 0.72), event_r()) == Ranking::prefer_second);
    CHECK(prefers(prefs, bet_R, bet_R, event_b()) == Ranking::indifferent);
    CHECK(certainty_equivalent(prefs, bet_R, Event::full(4)) == doctest::Approx(0.625));
}

TEST_CASE("certainty equivalent under concave utility") {
    const auto u = UtilityFunction::power({0.0, 1.0}, 0.5);
    const ConditionalSeu prefs(u, Belief::uniform(2), [](const Event&) { return Belief::uniform(2); });
    CHECK(certainty_equivalent(prefs, Act({1.0, 0.0}), Event::full(2)) == doctest::Approx(0.25));
}

TEST_CASE("utility families") {
    const auto lin = UtilityFunction::linear({0.0, 10.0}, 2.0, 1.0);
    CHECK(lin(3.0) == doctest::Approx(7.0));
    CHECK(lin.inverse(7.0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(lin.inverse(25.0), RangeError);
    CHECK_THROWS_AS(lin(11.0), DomainError);

    const auto pw = UtilityFunction::power({0.0, 4.0}, 0.5);
    CHECK(pw(4.0) == doctest::Approx(2.0));
    CHECK(pw.inverse(1.5) == doctest::Approx(2.25));

    const auto pl = UtilityFunction::piecewise_linear({{0, 0}, {1, 2}, {3, 3}});
    CHECK(pl(0.5) == doctest::Approx(1.0));
    CHECK(pl(2.0) == doctest::Approx(2.5));
    CHECK(pl.inverse(2.5) == doctest::Approx(2.0));

    CHECK(affinely_equivalent(pw, pw.affine(3.0, -1.0)));
    CHECK_FALSE(affinely_equivalent(pw, UtilityFunction::linear({0.0, 4.0})));
}

TEST_CASE("property: constant acts keep their ranking after any non-null event") {
    Rng rng(11);
    const std::vector<double> levels{0.0, 0.2, 0.5, 0.55, 1.0};
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 2 + rng.index(4);
        const auto model = random_model(rng, n);
        const ConditionalSeu prefs(model);
        for (const Event& e : nonempty_events(n)) {
            if (prefs.is_null(e)) continue;
            for (double x : levels)
                for (double y : levels)
                    CHECK(prefers(prefs, Act::constant(n, x), Act::constant(n, y), e) ==
                          prefers(prefs, Act::constant(n, x), Act::constant(n, y), Event::full(n)));
        }
    }
}

TEST_CASE("property: expected utility is linear in outcome mixtures under linear utility") {
    Rng rng(12);
    const auto u = unit_linear();
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 2 + rng.index(5);
        const Belief mu = interior_belief(rng, n);
        std::vector<double> a(n), b(n);
        for (std::size_t s = 0; s < n; ++s) {
            a[s] = rng.uniform();
            b[s] = rng.uniform();
        }
        const double w = rng.uniform();
        const Act f(a), g(b);
        CHECK(std::abs(expected_utility(mix_acts(f, g, w), mu, u) -
                       (w * expected_utility(f, mu, u) + (1 - w) * expected_utility(g, mu, u))) <= 1e-12);
    }
}

TEST_CASE("property: certainty equivalents are monotone in outcomes") {
    Rng rng(13);
    const auto u = UtilityFunction::power({0.0, 1.0}, 0.7);
    for (int k = 0; k < 200; ++k) {
        const std::size_t n = 2 + rng.index(4);
        const Belief mu = interior_belief(rng, n);
        const ConditionalSeu prefs(u, mu, [mu](const Event&) { return mu; });
        std::vector<double> a(n), b(n);
        for (std::size_t s = 0; s < n; ++s) {
            a[s] = rng.uniform(0.0, 0.9);
            b[s] = std::min(1.0, a[s] + rng.uniform(0.0, 0.1));
        }
        const double lo = certainty_equivalent(prefs, Act(a), Event::full(n));
        const double hi = certainty_equivalent(prefs, Act(b), Event::full(n));
        CHECK(lo <= hi + 1e-12);
        CHECK(lo >= *std::min_element(a.begin(), a.end()) - 1e-12);
        CHECK(lo <= *std::max_element(a.begin(), a.end()) + 1e-12);
    }
}
