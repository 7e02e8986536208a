#include "conserv/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "conserv/errors.hpp"

namespace conserv {

using nlohmann::json;

namespace {

std::string child(const std::string& path, const std::string& key) { return path + "/" + key; }
std::string child(const std::string& path, std::size_t i) { return path + "/" + std::to_string(i); }

// A JSON number, or a string holding a decimal or a fraction "p/q".
double number(const json& j, const std::string& path) {
    if (j.is_number()) return j.get<double>();
    if (!j.is_string()) throw ValidationError(path, "expected a number");
    const std::string s = j.get<std::string>();
    auto parse = [&](std::string_view part) {
        double v = 0.0;
        const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc() || end != part.data() + part.size() || part.empty())
            throw ValidationError(path, "malformed number \"" + s + "\"");
        return v;
    };
    const auto slash = s.find('/');
    if (slash == std::string::npos) return parse(s);
    const double num = parse(std::string_view(s).substr(0, slash));
    const double den = parse(std::string_view(s).substr(slash + 1));
    if (den == 0.0) throw ValidationError(path, "zero denominator");
    return num / den;
}

double finite_number(const json& j, const std::string& path) {
    const double v = number(j, path);
    if (!std::isfinite(v)) throw ValidationError(path, "non-finite number");
    return v;
}

const json& require(const json& obj, const std::string& key, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ValidationError(child(path, key), "missing field");
    return *it;
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw ValidationError(path, "expected an object");
}

void require_array(const json& j, const std::string& path) {
    if (!j.is_array()) throw ValidationError(path, "expected an array");
}

std::vector<double> number_list(const json& j, const std::string& path) {
    require_array(j, path);
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(finite_number(j[i], child(path, i)));
    return out;
}

double unit_weight(const json& j, const std::string& path) {
    const double v = finite_number(j, path);
    if (v < 0.0 || v > 1.0) throw ValidationError(path, "must lie in [0, 1]");
    return v;
}

Belief belief(const json& j, std::size_t n, const std::string& path) {
    const auto p = number_list(j, path);
    if (p.size() != n) throw ValidationError(path, "expected " + std::to_string(n) + " probabilities");
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] < 0.0) throw ValidationError(child(path, i), "negative probability");
    try {
        return Belief(p);
    } catch (const ValidationError& e) {
        throw ValidationError(path, e.what());
    }
}

std::pair<double, double> weight_interval(const json& j, const std::string& path) {
    require_array(j, path);
    if (j.size() != 2) throw ValidationError(path, "expected [lo, hi]");
    const double lo = unit_weight(j[0], child(path, 0));
    const double hi = unit_weight(j[1], child(path, 1));
    if (lo > hi) throw ValidationError(path, "lo exceeds hi");
    return {lo, hi};
}

UtilityFunction parse_utility(const json& j, const OutcomeInterval& outcomes, const std::string& path) {
    require_object(j, path);
    const std::string kind = j.value("kind", std::string("linear"));
    const double scale = j.contains("scale") ? finite_number(j["scale"], child(path, "scale")) : 1.0;
    const double shift = j.contains("shift") ? finite_number(j["shift"], child(path, "shift")) : 0.0;
    if (!(scale > 0.0)) throw ValidationError(child(path, "scale"), "must be positive");
    try {
        if (kind == "linear") return UtilityFunction::linear(outcomes, scale, shift);
        if (kind == "power") {
            const double e = finite_number(require(j, "exponent", path), child(path, "exponent"));
            return UtilityFunction::power(outcomes, e, scale, shift);
        }
        if (kind == "piecewise") {
            const json& k = require(j, "knots", path);
            require_array(k, child(path, "knots"));
            std::vector<std::pair<double, double>> knots;
            for (std::size_t i = 0; i < k.size(); ++i) {
                const auto xy = number_list(k[i], child(child(path, "knots"), i));
                if (xy.size() != 2) throw ValidationError(child(child(path, "knots"), i), "expected [x, u(x)]");
                knots.emplace_back(xy[0], xy[1]);
            }
            auto u = UtilityFunction::piecewise_linear(std::move(knots), scale, shift);
            if (!(u.domain() == outcomes))
                throw ValidationError(child(path, "knots"), "knots must span the outcome interval exactly");
            return u;
        }
    } catch (const ValidationError&) {
        throw;
    } catch (const Error& e) {
        throw ValidationError(path, e.what());
    }
    throw ValidationError(child(path, "kind"), "unknown utility kind \"" + kind + "\"");
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < std::min(byte, text.size()) && i + 1 < byte; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte);
        throw ParseError(std::to_string(line) + ":" + std::to_string(col), "malformed JSON");
    }
    require_object(root, "");
    static const std::set<std::string> known = {"states", "outcomes", "utility", "prior", "priors", "rule",
                                                "delta",  "weights",  "acts",    "events", "grid"};
    for (const auto& [key, value] : root.items())
        if (!known.contains(key)) throw ValidationError("/" + key, "unknown field");

    Scenario sc;

    const json& states = require(root, "states", "");
    require_array(states, "/states");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (!states[i].is_string()) throw ValidationError(child("/states", i), "expected a string");
        labels.push_back(states[i].get<std::string>());
    }
    if (labels.size() < 2) throw ValidationError("/states", "need at least two states");
    try {
        sc.states = StateSpace(labels);
    } catch (const Error& e) {
        throw ValidationError("/states", e.what());
    }
    const std::size_t n = labels.size();

    if (root.contains("outcomes")) {
        const auto o = number_list(root["outcomes"], "/outcomes");
        if (o.size() != 2 || !(o[0] < o[1])) throw ValidationError("/outcomes", "expected [lo, hi] with lo < hi");
        sc.outcomes = {o[0], o[1]};
    }
    sc.utility = root.contains("utility") ? parse_utility(root["utility"], sc.outcomes, "/utility")
                                          : UtilityFunction::linear(sc.outcomes);

    if (root.contains("prior") == root.contains("priors"))
        throw ValidationError("/prior", "give exactly one of \"prior\" and \"priors\"");
    if (root.contains("prior")) {
        sc.prior = belief(root["prior"], n, "/prior");
    } else {
        const json& ps = root["priors"];
        require_array(ps, "/priors");
        if (ps.empty()) throw ValidationError("/priors", "need at least one belief");
        for (std::size_t i = 0; i < ps.size(); ++i) sc.priors.push_back(belief(ps[i], n, child("/priors", i)));
    }
    if (root.contains("rule")) {
        if (!root["rule"].is_string()) throw ValidationError("/rule", "expected a string");
        const std::string rule = root["rule"].get<std::string>();
        if (rule != "hull" && rule != "minkowski" && rule != "segment")
            throw ValidationError("/rule", "unknown rule \"" + rule + "\"");
        sc.rule = rule;
    }

    if (root.contains("events")) {
        const json& ev = root["events"];
        require_object(ev, "/events");
        for (const auto& [name, members] : ev.items()) {
            const std::string path = child("/events", name);
            if (name.empty() || name == "default") throw ValidationError(path, "reserved event name");
            require_array(members, path);
            std::uint64_t mask = 0;
            for (std::size_t i = 0; i < members.size(); ++i) {
                if (!members[i].is_string()) throw ValidationError(child(path, i), "expected a state label");
                const auto& lab = members[i].get_ref<const std::string&>();
                const auto it = std::find(labels.begin(), labels.end(), lab);
                if (it == labels.end()) throw ValidationError(child(path, i), "unknown state \"" + lab + "\"");
                mask |= std::uint64_t{1} << static_cast<std::size_t>(it - labels.begin());
            }
            sc.events.emplace(name, Event(n, mask));
        }
    }

    auto event_path = [&](const std::string& name, const std::string& path) {
        try {
            return resolve_event(sc, name);
        } catch (const ValidationError&) {
            throw ValidationError(path, "unknown event \"" + name + "\"");
        }
    };

    if (root.contains("delta")) {
        const json& d = root["delta"];
        if (d.is_number() || d.is_string()) {
            sc.default_delta = unit_weight(d, "/delta");
        } else {
            require_object(d, "/delta");
            for (const auto& [name, value] : d.items()) {
                const std::string path = child("/delta", name);
                const double w = unit_weight(value, path);
                if (name == "default") {
                    sc.default_delta = w;
                    continue;
                }
                const Event e = event_path(name, path);
                if (sc.prior && !(event_prob(*sc.prior, e) > 0.0))
                    throw ValidationError(path, "delta stored for a null event");
                sc.delta.emplace(name, w);
            }
        }
    }

    if (root.contains("weights")) {
        const json& w = root["weights"];
        require_object(w, "/weights");
        for (const auto& [name, value] : w.items()) {
            const std::string path = child("/weights", name);
            const auto interval = weight_interval(value, path);
            if (name == "default") {
                sc.default_weights = interval;
            } else {
                event_path(name, path);
                sc.weights.emplace(name, interval);
            }
        }
    }
    if (sc.rule == "segment" && !sc.prior && sc.priors.size() != 1)
        throw ValidationError("/rule", "the segment rule needs a single prior");

    if (root.contains("acts")) {
        const json& acts = root["acts"];
        require_object(acts, "/acts");
        for (const auto& [name, value] : acts.items()) {
            const std::string path = child("/acts", name);
            const auto out = number_list(value, path);
            if (out.size() != n) throw ValidationError(path, "expected " + std::to_string(n) + " outcomes");
            for (std::size_t i = 0; i < n; ++i)
                if (!sc.outcomes.contains(out[i])) throw ValidationError(child(path, i), "outcome outside the interval");
            sc.acts.emplace(name, Act(out));
        }
    }

    sc.grid.levels = {sc.outcomes.lo, sc.outcomes.lo + 0.25 * (sc.outcomes.hi - sc.outcomes.lo),
                      sc.outcomes.lo + 0.5 * (sc.outcomes.hi - sc.outcomes.lo),
                      sc.outcomes.lo + 0.75 * (sc.outcomes.hi - sc.outcomes.lo), sc.outcomes.hi};
    if (root.contains("grid")) {
        const json& g = root["grid"];
        require_object(g, "/grid");
        if (g.contains("levels")) {
            const json& lv = g["levels"];
            if (lv.is_number_integer()) {
                const auto count = lv.get<long long>();
                if (count < 2) throw ValidationError("/grid/levels", "need at least two levels");
                sc.grid.levels = ActGrid::even(sc.outcomes.lo, sc.outcomes.hi, static_cast<std::size_t>(count), 1)
                                     .levels();
            } else {
                sc.grid.levels = number_list(lv, "/grid/levels");
                for (std::size_t i = 0; i < sc.grid.levels.size(); ++i) {
                    if (!sc.outcomes.contains(sc.grid.levels[i]))
                        throw ValidationError(child("/grid/levels", i), "level outside the outcome interval");
                    if (i > 0 && !(sc.grid.levels[i] > sc.grid.levels[i - 1]))
                        throw ValidationError(child("/grid/levels", i), "levels must be strictly ascending");
                }
                if (sc.grid.levels.empty()) throw ValidationError("/grid/levels", "no levels");
            }
        }
        if (g.contains("cap")) {
            if (!g["cap"].is_number_unsigned()) throw ValidationError("/grid/cap", "expected a nonnegative integer");
            sc.grid.cap = g["cap"].get<std::size_t>();
        }
        if (g.contains("seed")) {
            if (!g["seed"].is_number_unsigned()) throw ValidationError("/grid/seed", "expected a nonnegative integer");
            sc.grid.seed = g["seed"].get<std::uint64_t>();
        }
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_scenario(ss.str());
}

std::string serialize_scenario(const Scenario& sc) {
    json root;
    root["states"] = sc.states.labels();
    root["outcomes"] = {sc.outcomes.lo, sc.outcomes.hi};
    json u;
    const auto& uf = sc.utility;
    switch (uf.kind()) {
        case UtilityFunction::Kind::linear: u["kind"] = "linear"; break;
        case UtilityFunction::Kind::power:
            u["kind"] = "power";
            u["exponent"] = uf.exponent();
            break;
        case UtilityFunction::Kind::piecewise_linear: {
            u["kind"] = "piecewise";
            json knots = json::array();
            for (const auto& [x, v] : uf.knots()) knots.push_back({x, v});
            u["knots"] = knots;
            break;
        }
    }
    u["scale"] = uf.scale();
    u["shift"] = uf.shift();
    root["utility"] = u;

    auto probs = [](const Belief& b) { return std::vector<double>(b.probs().begin(), b.probs().end()); };
    if (sc.prior) {
        root["prior"] = probs(*sc.prior);
    } else {
        json ps = json::array();
        for (const auto& b : sc.priors) ps.push_back(probs(b));
        root["priors"] = ps;
    }
    if (sc.rule) root["rule"] = *sc.rule;

    json events = json::object();
    for (const auto& [name, e] : sc.events) {
        json members = json::array();
        for (std::size_t s : e.members()) members.push_back(sc.states.label(s));
        events[name] = members;
    }
    root["events"] = events;

    json delta = json::object();
    for (const auto& [name, d] : sc.delta) delta[name] = d;
    if (sc.default_delta) delta["default"] = *sc.default_delta;
    if (!delta.empty()) root["delta"] = delta;

    json weights = json::object();
    for (const auto& [name, w] : sc.weights) weights[name] = {w.first, w.second};
    if (sc.default_weights) weights["default"] = {sc.default_weights->first, sc.default_weights->second};
    if (!weights.empty()) root["weights"] = weights;

    json acts = json::object();
    for (const auto& [name, f] : sc.acts) acts[name] = std::vector<double>(f.outcomes().begin(), f.outcomes().end());
    root["acts"] = acts;

    root["grid"] = {{"levels", sc.grid.levels}, {"cap", sc.grid.cap}, {"seed", sc.grid.seed}};
    return root.dump(2) + "\n";
}

bool equivalent(const Scenario& a, const Scenario& b) {
    auto close = [](const Belief& p, const Belief& q) {
        return p.dimension() == q.dimension() && max_abs_difference(p, q) <= 4e-16;
    };
    if (!(a.states == b.states) || !(a.outcomes == b.outcomes) || !(a.utility == b.utility)) return false;
    if (a.prior.has_value() != b.prior.has_value()) return false;
    if (a.prior && !close(*a.prior, *b.prior)) return false;
    if (a.priors.size() != b.priors.size()) return false;
    for (std::size_t i = 0; i < a.priors.size(); ++i)
        if (!close(a.priors[i], b.priors[i])) return false;
    return a.rule == b.rule && a.delta == b.delta && a.default_delta == b.default_delta && a.weights == b.weights &&
           a.default_weights == b.default_weights && a.events == b.events && a.acts == b.acts &&
           a.grid.levels == b.grid.levels && a.grid.cap == b.grid.cap && a.grid.seed == b.grid.seed;
}

Event resolve_event(const Scenario& sc, const std::string& name) {
    const std::size_t n = sc.states.size();
    if (auto it = sc.events.find(name); it != sc.events.end()) return it->second;
    const auto& labels = sc.states.labels();
    if (auto it = std::find(labels.begin(), labels.end(), name); it != labels.end())
        return Event::of(n, {static_cast<std::size_t>(it - labels.begin())});
    if (name == "all") return Event::full(n);
    throw ValidationError("event", "unknown event \"" + name + "\"");
}

const Act& resolve_act(const Scenario& sc, const std::string& name) {
    auto it = sc.acts.find(name);
    if (it == sc.acts.end()) throw ValidationError("act", "unknown act \"" + name + "\"");
    return it->second;
}

std::string event_name(const Scenario& sc, const Event& event) {
    for (const auto& [name, e] : sc.events)
        if (e == event) return name;
    std::string out = "{";
    for (std::size_t s : event.members()) {
        if (out.size() > 1) out += ",";
        out += sc.states.label(s);
    }
    return out + "}";
}

namespace {

template <class T>
std::map<Event, T> by_event(const Scenario& sc, const std::map<std::string, T>& named) {
    std::map<Event, T> out;
    for (const auto& [name, v] : named) out.insert_or_assign(resolve_event(sc, name), v);
    return out;
}

}  // namespace

ConservativeSeuModel seu_model(const Scenario& sc) {
    if (!sc.prior) throw ValidationError("/prior", "scenario has a set of priors, not a single prior");
    return ConservativeSeuModel(sc.utility, *sc.prior, by_event(sc, sc.delta), sc.default_delta);
}

BeliefSet prior_set(const Scenario& sc) { return sc.prior ? BeliefSet::singleton(*sc.prior) : BeliefSet(sc.priors); }

MultiPriorModel multi_prior_model(const Scenario& sc) {
    const std::string rule = sc.rule.value_or("hull");
    if (rule == "minkowski")
        return MultiPriorModel::minkowski(sc.utility, prior_set(sc), by_event(sc, sc.delta), sc.default_delta);
    if (rule == "segment") {
        const Belief mu = sc.prior ? *sc.prior : sc.priors.front();
        return MultiPriorModel::segment(sc.utility, mu, by_event(sc, sc.weights), sc.default_weights);
    }
    return MultiPriorModel::hull(sc.utility, prior_set(sc));
}

BeliefSet posterior_set(const Scenario& sc, const Event& event) {
    if (sc.prior && !sc.rule) return BeliefSet::singleton(seu_model(sc).posterior(event));
    return multi_prior_model(sc).posterior_set(event);
}

double parse_number(std::string_view text) {
    const double v = finite_number(json(std::string(text)), "");
    return v;
}

ActGrid make_grid(const Scenario& sc) {
    return ActGrid(sc.grid.levels, sc.states.size(), sc.grid.cap, sc.grid.seed);
}

}  // namespace conserv
