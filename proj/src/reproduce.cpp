#include "conserv/reproduce.hpp"

#include <cmath>

#include "conserv/builtin.hpp"
#include "conserv/errors.hpp"
#include "conserv/multiprior.hpp"
#include "conserv/report.hpp"
#include "conserv/scenario.hpp"

namespace conserv {

bool ReproductionRow::ok() const { return std::abs(value - expected) <= kReproduceTolerance; }

bool Reproduction::ok() const {
    for (const auto& r : rows)
        if (!r.ok()) return false;
    return true;
}

namespace {

Reproduction example1() {
    const Scenario sc = parse_scenario(builtin_scenario("example1"));
    const Event r = resolve_event(sc, "r"), b = resolve_event(sc, "b"), R = resolve_event(sc, "R");
    Reproduction out{"example1", {"event", "delta", "quantity"}, {}};
    for (double d : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        out.rows.push_back({{"r", format_number(d), "P(R)"},
                            event_prob(conservative_update(*sc.prior, r, d), R),
                            d * 5.0 / 8.0 + (1.0 - d) * 4.0 / 5.0});
        out.rows.push_back({{"b", format_number(d), "P(R)"},
                            event_prob(conservative_update(*sc.prior, b, d), R),
                            d * 5.0 / 8.0 + (1.0 - d) / 3.0});
    }
    return out;
}

Reproduction example3() {
    const Scenario sc = parse_scenario(builtin_scenario("example3"));
    const BeliefSet m = prior_set(sc);
    const Event r = resolve_event(sc, "r"), b = resolve_event(sc, "b"), R = resolve_event(sc, "R");
    Reproduction out{"example3", {"event", "delta", "quantity"}, {}};
    for (int i = 0; i <= 10; ++i) {
        const double d = i / 10.0;
        const auto [rlo, rhi] = minkowski_mix(m, r, d).event_range(R);
        const auto [blo, bhi] = minkowski_mix(m, b, d).event_range(R);
        const std::string ds = format_number(d);
        out.rows.push_back({{"r", ds, "min P(R)"}, rlo, 3.0 / 5.0});
        out.rows.push_back({{"r", ds, "max P(R)"}, rhi, (4.0 - d) / 5.0});
        out.rows.push_back({{"b", ds, "min P(R)"}, blo, (2.0 + d) / 5.0});
        out.rows.push_back({{"b", ds, "max P(R)"}, bhi, 3.0 / 5.0});
    }
    return out;
}

Reproduction table3() {
    const Scenario sc = parse_scenario(builtin_scenario("example3"));
    const BeliefSet m = prior_set(sc);
    const Act bet = resolve_act(sc, "betR");
    const auto& u = sc.utility;
    struct Cell {
        const char* event;
        double delta;
        double alpha;
        double expected;
    };
    static constexpr Cell cells[] = {
        {"r", 0.0, 0.0, 0.6}, {"r", 0.0, 1.0, 0.8}, {"r", 0.5, 0.0, 0.6}, {"r", 0.5, 1.0, 0.7},
        {"r", 1.0, 0.0, 0.6}, {"r", 1.0, 1.0, 0.6}, {"b", 0.0, 0.0, 0.4}, {"b", 0.0, 1.0, 0.6},
        {"b", 0.5, 0.0, 0.5}, {"b", 0.5, 1.0, 0.6}, {"b", 1.0, 0.0, 0.6}, {"b", 1.0, 1.0, 0.6},
    };
    Reproduction out{"table3", {"event", "delta", "alpha"}, {}};
    for (const Cell& c : cells) {
        const BeliefSet post = minkowski_mix(m, resolve_event(sc, c.event), c.delta);
        const double v = alpha_meu_value(post, u, bet, c.alpha, AlphaConvention::weight_on_max);
        out.rows.push_back({{c.event, format_number(c.delta), format_number(c.alpha)}, u.inverse(v), c.expected});
    }
    return out;
}

}  // namespace

Reproduction reproduce(std::string_view name) {
    if (name == "example1") return example1();
    if (name == "example3") return example3();
    if (name == "table3") return table3();
    throw ValidationError("reproduce", "unknown target \"" + std::string(name) + "\"");
}

std::vector<std::string_view> reproduction_names() { return {"example1", "example3", "table3"}; }

}  // namespace conserv
