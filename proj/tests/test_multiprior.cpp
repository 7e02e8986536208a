#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "conserv/errors.hpp"
#include "conserv/lp.hpp"
#include "conserv/multiprior.hpp"
#include "conserv/reproduce.hpp"
#include "support.hpp"

using namespace conserv;
using namespace conserv::testing;

namespace {

const ActGrid& grid5() {
    static const ActGrid g = ActGrid::even(0.0, 1.0, 5, 4);
    return g;
}

BeliefSet table2_set() { return BeliefSet({table2_mu(), table2_mu_prime()}); }

}  // namespace

TEST_CASE("simplex solver") {
    // min -x - y  s.t. x + y + s = 4, x + 3y + t = 6
    const auto r = minimize({{1, 1, 1, 0}, {1, 3, 0, 1}}, {4, 6}, {-1, -1, 0, 0});
    REQUIRE(r.status == LpStatus::optimal);
    CHECK(r.objective == doctest::Approx(-4.0));

    const auto bad = minimize({{1, 1}}, {-1}, {1, 1});
    CHECK(bad.status == LpStatus::infeasible);

    const auto open = minimize({{1, -1}}, {0}, {-1, 0});
    CHECK(open.status == LpStatus::unbounded);
}

TEST_CASE("hull distance and membership") {
    const std::vector<Belief> pts{Belief({1.0, 0.0}), Belief({0.5, 0.5})};
    CHECK(hull_distance(pts, Belief({0.7, 0.3})) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(hull_distance(pts, Belief({0.2, 0.8})) == doctest::Approx(0.3));
    CHECK(in_hull(pts, Belief({0.5, 0.5})));
    CHECK_FALSE(in_hull(pts, Belief({0.49, 0.51})));
}

TEST_CASE("belief sets are canonical") {
    const Belief a({0.5, 0.5, 0.0}), b({0.0, 0.5, 0.5}), mid({0.25, 0.5, 0.25});
    const BeliefSet s({b, mid, a, Belief({0.5 + 1e-12, 0.5 - 1e-12, 0.0})});
    REQUIRE(s.size() == 2);
    CHECK(s.extremes()[0][0] == doctest::Approx(0.0));
    CHECK(s.extremes()[1][0] == doctest::Approx(0.5));
    const auto [lo, hi] = s.event_range(Event(3, 0b001));
    CHECK(lo == doctest::Approx(0.0));
    CHECK(hi == doctest::Approx(0.5));
}

TEST_CASE("second illustration: bayes and mixed posterior sets") {
    const BeliefSet m = table2_set();
    const auto [blo, bhi] = set_bayes_update(m, event_r()).event_range(event_R());
    CHECK(blo == doctest::Approx(0.6));
    CHECK(bhi == doctest::Approx(0.8));
    const auto [mlo, mhi] = minkowski_mix(m, event_r(), 0.5).event_range(event_R());
    CHECK(mlo == doctest::Approx(0.6));
    CHECK(mhi == doctest::Approx(0.7));
    const auto [hlo, hhi] = hull_mix(m, event_r()).event_range(event_R());
    CHECK(hlo == doctest::Approx(0.6));
    CHECK(hhi == doctest::Approx(0.8));
}

TEST_CASE("table of certainty equivalents reproduces") {
    const Reproduction r = reproduce("table3");
    CHECK(r.rows.size() == 12);
    for (const auto& row : r.rows) CHECK(std::abs(row.value - row.expected) <= 1e-9);
    CHECK_THROWS(reproduce("table9"));
}

TEST_CASE("weight segment of a single prior") {
    const BeliefSet seg = weight_segment(table1_prior(), event_r(), 0.25, 0.75);
    const auto [lo, hi] = seg.event_range(event_R());
    CHECK(lo == doctest::Approx(0.66875));
    CHECK(hi == doctest::Approx(0.75625));
    CHECK_THROWS_AS(weight_segment(table1_prior(), event_r(), 0.8, 0.2), DomainError);
}

TEST_CASE("ambiguously null events") {
    const BeliefSet m({Belief({0.5, 0.5, 0.0}), Belief({0.0, 0.5, 0.5})});
    const Event first(3, 0b001);
    CHECK_FALSE(unambiguously_nonnull(m, first));
    CHECK(unambiguously_nonnull(m, Event(3, 0b010)));
    CHECK_THROWS_AS(set_bayes_update(m, first), AmbiguouslyNullError);
    CHECK_THROWS_AS(hull_mix(m, first), AmbiguouslyNullError);
    CHECK_THROWS_AS(minkowski_mix(m, first, 0.5), AmbiguouslyNullError);
    CHECK_THROWS_AS(MultiPriorModel::hull(unit_linear(), m).posterior_set(first), AmbiguouslyNullError);
}

TEST_CASE("property: containment chain of posterior sets") {
    Rng rng(31);
    for (int k = 0; k < 60; ++k) {
        const std::size_t n = 2 + rng.index(3);
        const BeliefSet m = random_belief_set(rng, n, 4);
        for (const Event& e : nonempty_events(n)) {
            if (!unambiguously_nonnull(m, e)) continue;
            const BeliefSet outer = hull_mix(m, e);
            const BeliefSet bayes = set_bayes_update(m, e);
            const double d1 = rng.uniform();
            CHECK(contains(outer, bayes));
            CHECK(contains(outer, minkowski_mix(m, e, d1)));
            CHECK(contains(outer, m));
            // Each prior moves toward its own Bayes posterior.
            for (const Belief& p : m.extremes())
                CHECK(contains(minkowski_mix(m, e, d1), conservative_update(p, e, d1)));
        }
    }
}

TEST_CASE("property: bayes update of sampled priors stays in the updated set") {
    Rng rng(32);
    for (int k = 0; k < 10; ++k) {
        const BeliefSet m = random_belief_set(rng, 4, 4);
        for (const Event& e : {event_r(), event_R()}) {
            if (!unambiguously_nonnull(m, e)) continue;
            const BeliefSet post = set_bayes_update(m, e);
            for (int j = 0; j < 100; ++j) {
                std::vector<double> w(4, 0.0);
                double total = 0.0;
                for (const Belief& p : m.extremes()) {
                    const double c = rng.uniform();
                    total += c;
                    for (std::size_t s = 0; s < 4; ++s) w[s] += c * p[s];
                }
                for (auto& x : w) x /= total;
                CHECK(contains(post, bayes_update(Belief::from_weights(w), e)));
            }
        }
    }
}

TEST_CASE("property: spliced unanimity ignores what happens off the event") {
    Rng rng(33);
    const auto u = unit_linear();
    const ActGrid g = ActGrid::even(0.0, 1.0, 3, 3);
    const auto acts = g.acts();
    for (int k = 0; k < 5; ++k) {
        const BeliefSet m = random_belief_set(rng, 3, 3);
        for (const Event& e : nonempty_events(3)) {
            if (!unambiguously_nonnull(m, e)) continue;
            const BeliefSet post = set_bayes_update(m, e);
            for (const Act& f : acts)
                for (const Act& h : acts) {
                    const Act& g0 = acts[(f.outcomes()[0] > 0.4 ? 3 : 17)];
                    const bool spliced = unanimity_prefers(m, u, splice(f, e, g0), g0);
                    CHECK(spliced == unanimity_prefers(m, u, splice(f, e, h), splice(g0, e, h)));
                    CHECK(spliced == unanimity_prefers(post, u, f, g0));
                }
        }
    }
}

TEST_CASE("alpha-maxmin values") {
    const BeliefSet m = table2_set();
    const auto u = unit_linear();
    const Act bet({1, 0, 1, 0});
    const auto [lo, hi] = expected_utility_range(m, u, bet);
    CHECK(lo == doctest::Approx(0.6));
    CHECK(hi == doctest::Approx(0.6));
    const Act bet_r({1, 1, 0, 0});
    const auto [rlo, rhi] = expected_utility_range(m, u, bet_r);
    CHECK(rlo == doctest::Approx(0.5));
    CHECK(rhi == doctest::Approx(0.5));

    const BeliefSet post = minkowski_mix(m, event_r(), 0.5);
    CHECK(alpha_meu_value(post, u, bet, 1.0) == doctest::Approx(0.6));
    CHECK(alpha_meu_value(post, u, bet, 0.0) == doctest::Approx(0.7));
    CHECK(alpha_meu_value(post, u, bet, 0.25) == doctest::Approx(0.675));
    CHECK(alpha_meu_value(post, u, bet, 0.25, AlphaConvention::weight_on_max) == doctest::Approx(0.625));
    CHECK_THROWS_AS(alpha_meu_value(post, u, bet, 1.5), DomainError);
}

TEST_CASE("property: alpha-maxmin is monotone in alpha and collapses on singletons") {
    Rng rng(34);
    const auto u = UtilityFunction::power({0.0, 1.0}, 0.5);
    for (int k = 0; k < 100; ++k) {
        const BeliefSet m = random_belief_set(rng, 3, 4);
        const Act f({rng.uniform(), rng.uniform(), rng.uniform()});
        double prev = alpha_meu_value(m, u, f, 0.0);
        for (int i = 1; i <= 10; ++i) {
            const double v = alpha_meu_value(m, u, f, i / 10.0);
            CHECK(v <= prev + 1e-12);
            CHECK(std::abs(v - alpha_meu_value(m, u, f, 1.0 - i / 10.0, AlphaConvention::weight_on_max)) <= 1e-12);
            prev = v;
        }
        const Belief p = m.extremes().front();
        CHECK(std::abs(alpha_meu_value(BeliefSet::singleton(p), u, f, rng.uniform()) - expected_utility(f, p, u)) <=
              1e-12);
    }
}

TEST_CASE("posterior sets by rule") {
    const auto u = unit_linear();
    const BeliefSet m = table2_set();
    const auto hull = MultiPriorModel::hull(u, m);
    CHECK(contains(hull.posterior_set(event_r()), hull_mix(m, event_r())));
    CHECK(contains(hull_mix(m, event_r()), hull.posterior_set(event_r())));
    CHECK(contains(hull.posterior_set(Event::full(4)), m));

    const auto mk = MultiPriorModel::minkowski(u, m, {{event_r(), 0.2}}, 0.5);
    CHECK(mk.delta(event_r()) == 0.2);
    CHECK(mk.delta(event_b()) == 0.5);

    const auto seg = MultiPriorModel::segment(u, table1_prior(), {{event_r(), {0.25, 0.75}}});
    const auto [lo, hi] = seg.posterior_set(event_r()).event_range(event_R());
    CHECK(lo == doctest::Approx(0.66875));
    CHECK(hi == doctest::Approx(0.75625));

    const auto ex = MultiPriorModel::explicit_sets(u, m, {{event_r(), set_bayes_update(m, event_r())}});
    CHECK(ex.posterior_set(event_r()).size() == 2);
    CHECK(contains(ex.posterior_set(event_b()), hull_mix(m, event_b())));
}

TEST_CASE("unambiguous conservatism audit") {
    const auto u = unit_linear();
    const BeliefSet m = table2_set();
    CHECK(audit_wuc(MultiPriorModel::hull(u, m), event_r(), grid5()).clean());
    CHECK(audit_wuc(MultiPriorModel::minkowski(u, m, {}, 0.3), event_b(), grid5()).clean());
    CHECK(audit_wuc(MultiPriorModel::segment(u, table1_prior(), {}, std::pair{0.2, 0.6}), event_r(), grid5()).clean());

    // A posterior that ignores the observation entirely is inside the hull;
    // one that ranks the unobserved states above the prior is not.
    const BeliefSet wrong = BeliefSet::singleton(Belief({0.1, 0.1, 0.4, 0.4}));
    const auto bad = MultiPriorModel::explicit_sets(u, m, {{event_r(), wrong}});
    const auto rep = audit_wuc(bad, event_r(), grid5());
    CHECK_FALSE(rep.clean());
    REQUIRE_FALSE(rep.violations.empty());
    CHECK(rep.violations.front().statements.front().unanimous);
}
