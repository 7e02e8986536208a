#include "conserv/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "conserv/audit.hpp"
#include "conserv/builtin.hpp"
#include "conserv/errors.hpp"
#include "conserv/identification.hpp"
#include "conserv/multiprior.hpp"
#include "conserv/report.hpp"
#include "conserv/reproduce.hpp"
#include "conserv/scenario.hpp"

namespace conserv {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string scenario;
    std::string against;
    std::string event;
    std::string axiom;
    std::string op;
    std::string act;
    std::string posterior;
    std::string ce_file;
    std::string convention = "min";
    std::string target;
    std::string out;
    std::optional<double> delta;
    std::optional<double> lo;
    std::optional<double> hi;
    double alpha = 0.0;
    std::optional<std::size_t> levels;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> cap;
    std::size_t limit = 20;
};

Scenario open_scenario(const std::string& spec) {
    constexpr std::string_view prefix = "builtin:";
    if (spec.rfind(prefix, 0) == 0) return parse_scenario(builtin_scenario(spec.substr(prefix.size())));
    return load_scenario(spec);
}

std::vector<double> number_csv(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_number(item));
    return out;
}

std::vector<std::string> state_header(const Scenario& sc, std::string first) {
    std::vector<std::string> row{std::move(first)};
    for (const auto& l : sc.states.labels()) row.push_back(l);
    return row;
}

std::string cmd_update(const Options& o) {
    const Scenario sc = open_scenario(o.scenario);
    if (!sc.prior) throw DomainError("update needs a single prior; use `sets` for sets of beliefs");
    const Event a = resolve_event(sc, o.event);
    const Belief& mu = *sc.prior;
    const bool null = !(event_prob(mu, a) > 0.0);

    Belief post = mu;
    std::string weight;
    if (o.delta) {
        if (!(*o.delta >= 0.0 && *o.delta <= 1.0)) throw DomainError("delta must lie in [0, 1]");
        if (!null) post = conservative_update(mu, a, *o.delta);
        weight = format_number(*o.delta);
    } else {
        const auto model = seu_model(sc);
        post = model.posterior(a);
        weight = model.has_delta(a) ? format_number(model.delta(a)) : "-";
    }
    const std::optional<Belief> bayes = null ? std::nullopt : std::optional<Belief>(bayes_update(mu, a));

    std::string out = "# update event=" + o.event + " delta=" + weight + "\n";
    if (null) out += "# " + o.event + " is null: the ex-ante belief is kept\n";
    out += tsv_row({"state", "prior", "bayes", "posterior"});
    for (std::size_t s = 0; s < mu.dimension(); ++s)
        out += tsv_row({sc.states.label(s), format_number(mu[s]), bayes ? format_number((*bayes)[s]) : "nan",
                        format_number(post[s])});
    out += tsv_row({"event", "prior", "bayes", "posterior"});
    for (const auto& [name, e] : sc.events)
        out += tsv_row({"P(" + name + ")", format_number(event_prob(mu, e)),
                        bayes ? format_number(event_prob(*bayes, e)) : "nan", format_number(event_prob(post, e))});
    return out;
}

ActGrid grid_for(const Scenario& sc, const Options& o) {
    std::vector<double> levels = sc.grid.levels;
    if (o.levels) {
        if (*o.levels < 2) throw UsageError("--levels must be at least 2");
        levels = ActGrid::even(sc.outcomes.lo, sc.outcomes.hi, *o.levels, 1).levels();
    }
    return ActGrid(levels, sc.states.size(), o.cap.value_or(sc.grid.cap), o.seed.value_or(sc.grid.seed));
}

std::string cmd_audit(const Options& o) {
    const auto axiom = parse_axiom(o.axiom);
    if (!axiom) throw UsageError("unknown axiom \"" + o.axiom + "\"");
    const Scenario sc = open_scenario(o.scenario);
    const ActGrid grid = grid_for(sc, o);
    AuditOptions opts;
    opts.max_reported = o.limit;

    AuditReport report;
    switch (*axiom) {
        case Axiom::dynamic_consistency:
        case Axiom::consequentialism:
        case Axiom::dynamic_conservatism: {
            const ConditionalSeu prefs(seu_model(sc));
            if (o.event.empty()) {
                report = audit_all_events(*axiom, prefs, grid, opts);
            } else {
                const Event a = resolve_event(sc, o.event);
                if (*axiom == Axiom::dynamic_consistency) report = audit_dc(prefs, a, grid, opts);
                else if (*axiom == Axiom::consequentialism) report = audit_consequentialism(prefs, a, grid, opts);
                else report = audit_dom_c(prefs, a, grid, opts);
            }
            break;
        }
        case Axiom::weak_consequentialism:
        case Axiom::confirmation_bias: {
            if (!o.event.empty()) throw UsageError("--event does not apply to " + o.axiom);
            const ConditionalSeu prefs(seu_model(sc));
            report = *axiom == Axiom::weak_consequentialism ? audit_wc(prefs, grid, opts) : audit_gcb(prefs, grid, opts);
            break;
        }
        case Axiom::unambiguous_conservatism: {
            const MultiPriorModel model = multi_prior_model(sc);
            if (!o.event.empty()) {
                report = audit_wuc(model, resolve_event(sc, o.event), grid, opts);
                break;
            }
            report.axiom = *axiom;
            report.acts_enumerated = grid.size();
            report.acts_total = grid.total();
            for (const Event& e : nonempty_events(sc.states.size())) {
                if (!unambiguously_nonnull(model.priors(), e)) continue;
                AuditOptions rest = opts;
                rest.max_reported = opts.max_reported - std::min(opts.max_reported, report.violations.size());
                report.merge(audit_wuc(model, e, grid, rest));
            }
            break;
        }
    }
    return render_audit(sc, report);
}

std::string cmd_elicit(const Options& o) {
    if (o.posterior.empty() == o.ce_file.empty()) throw UsageError("give exactly one of --posterior and --ce-file");
    const Scenario sc = open_scenario(o.scenario);
    if (!sc.prior) throw DomainError("elicit needs a single prior");
    std::string out = tsv_row({"event", "delta", "residual", "flags"});
    if (!o.posterior.empty()) {
        if (o.event.empty()) throw UsageError("--posterior needs --event");
        const Belief post(number_csv(o.posterior));
        return out + render_estimate(sc, recover_delta(*sc.prior, post, resolve_event(sc, o.event)));
    }
    std::ifstream in(o.ce_file);
    if (!in) throw ParseError(o.ce_file, "cannot open file");
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream fields(line);
        std::string name, x, y, ce;
        if (!(fields >> name >> x >> y >> ce))
            throw ParseError(o.ce_file + ":" + std::to_string(lineno), "expected: event x y ce");
        out += render_estimate(sc, recover_delta_from_ce(*sc.prior, resolve_event(sc, name), sc.utility,
                                                         parse_number(x), parse_number(y), parse_number(ce)));
    }
    return out;
}

std::string cmd_compare(const Options& o) {
    const Scenario s1 = open_scenario(o.scenario);
    const Scenario s2 = open_scenario(o.against);
    if (!(s1.states == s2.states)) throw DomainError("compare: scenarios use different state spaces");
    const auto m1 = seu_model(s1);
    const auto m2 = seu_model(s2);
    std::vector<Event> events;
    if (!o.event.empty()) {
        events.push_back(resolve_event(s1, o.event));
    } else {
        for (const Event& e : nonempty_events(s1.states.size()))
            if (!e.is_full()) events.push_back(e);
    }
    std::string out = tsv_row({"event", "order", "gap", "x", "y1", "y2", "ce1", "ce2"});
    for (const Event& e : events) {
        const auto c = compare_conservatism(m1, m2, e);
        if (c.order == Conservatism::incomparable) {
            out += tsv_row({event_name(s1, e), conservatism_name(c.order), "-", "-", "-", "-", "-", "-"});
            continue;
        }
        out += tsv_row({event_name(s1, e), conservatism_name(c.order), format_number(c.gap), format_number(c.x),
                        format_number(c.y1), format_number(c.y2), format_number(c.ce1), format_number(c.ce2)});
    }
    return out;
}

std::string render_set(const Scenario& sc, const BeliefSet& set) {
    auto header = state_header(sc, "extreme");
    for (const auto& [name, e] : sc.events) header.push_back("P(" + name + ")");
    std::string out = tsv_row(header);
    for (std::size_t i = 0; i < set.size(); ++i) {
        const Belief& b = set.extremes()[i];
        std::vector<std::string> row{std::to_string(i)};
        for (std::size_t s = 0; s < b.dimension(); ++s) row.push_back(format_number(b[s]));
        for (const auto& [name, e] : sc.events) row.push_back(format_number(event_prob(b, e)));
        out += tsv_row(row);
    }
    return out;
}

std::string cmd_sets(const Options& o) {
    const Scenario sc = open_scenario(o.scenario);
    const Event a = resolve_event(sc, o.event);
    const BeliefSet m = prior_set(sc);
    const std::string name = event_name(sc, a);
    if (o.op == "bayes") return render_set(sc, set_bayes_update(m, a));
    if (o.op == "hull") return render_set(sc, hull_mix(m, a));
    if (o.op == "minkowski") {
        double d;
        if (o.delta) d = *o.delta;
        else if (auto it = sc.delta.find(name); it != sc.delta.end()) d = it->second;
        else if (sc.default_delta) d = *sc.default_delta;
        else throw UsageError("minkowski needs --delta or a delta in the scenario");
        return render_set(sc, minkowski_mix(m, a, d));
    }
    if (o.op == "segment") {
        if (m.size() != 1) throw DomainError("segment needs a single prior");
        std::pair<double, double> w{0.0, 1.0};
        if (auto it = sc.weights.find(name); it != sc.weights.end()) w = it->second;
        else if (sc.default_weights) w = *sc.default_weights;
        if (o.lo) w.first = *o.lo;
        if (o.hi) w.second = *o.hi;
        return render_set(sc, weight_segment(m.extremes().front(), a, w.first, w.second));
    }
    throw UsageError("unknown --op \"" + o.op + "\"");
}

std::string cmd_value(const Options& o) {
    const Scenario sc = open_scenario(o.scenario);
    const Act& f = resolve_act(sc, o.act);
    AlphaConvention conv;
    if (o.convention == "min") conv = AlphaConvention::weight_on_min;
    else if (o.convention == "max") conv = AlphaConvention::weight_on_max;
    else throw UsageError("--convention must be min or max");
    const BeliefSet set = o.event.empty() ? prior_set(sc) : posterior_set(sc, resolve_event(sc, o.event));
    const auto [lo, hi] = expected_utility_range(set, sc.utility, f);
    const double v = alpha_meu_value(set, sc.utility, f, o.alpha, conv);
    return tsv_row({"act", "event", "alpha", "min", "max", "value", "ce"}) +
           tsv_row({o.act, o.event.empty() ? "-" : o.event, format_number(o.alpha), format_number(lo),
                    format_number(hi), format_number(v), format_number(sc.utility.inverse(v))});
}

std::string cmd_reproduce(const Options& o, bool& ok) {
    const Reproduction r = reproduce(o.target);
    auto header = r.label_columns;
    for (const char* c : {"value", "expected", "status"}) header.push_back(c);
    std::string out = tsv_row(header);
    for (const auto& row : r.rows) {
        auto cells = row.labels;
        cells.push_back(format_number(row.value));
        cells.push_back(format_number(row.expected));
        cells.push_back(row.ok() ? "ok" : "MISMATCH");
        out += tsv_row(cells);
    }
    ok = r.ok();
    return out;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conservative belief updating: updates, axiom audits, identification and belief sets.", "conserv"};
    app.require_subcommand(1, 1);
    Options o;

    auto scenario_opt = [&](CLI::App* c) {
        c->add_option("--scenario", o.scenario, "scenario file, or builtin:<name>")->required();
        c->add_option("--out", o.out, "write the report to this file");
    };

    auto* update = app.add_subcommand("update", "posterior after an event");
    scenario_opt(update);
    update->add_option("--event", o.event, "conditioning event")->required();
    update->add_option("--delta", o.delta, "conservatism weight, overriding the scenario");

    auto* audit = app.add_subcommand("audit", "search an act grid for axiom violations");
    scenario_opt(audit);
    audit->add_option("--axiom", o.axiom, "dc, c, dom-c, wc, gcb or wuc")
        ->required()
        ->check(CLI::IsMember({"dc", "c", "dom-c", "wc", "gcb", "wuc"}));
    audit->add_option("--event", o.event, "audit a single event");
    audit->add_option("--levels", o.levels, "evenly spaced outcome levels");
    audit->add_option("--seed", o.seed, "subsampling seed");
    audit->add_option("--cap", o.cap, "maximum number of acts (0: no cap)");
    audit->add_option("--limit", o.limit, "witnesses to print")->capture_default_str();

    auto* elicit = app.add_subcommand("elicit", "recover conservatism weights");
    scenario_opt(elicit);
    elicit->add_option("--event", o.event, "conditioning event");
    elicit->add_option("--posterior", o.posterior, "observed posterior, comma separated");
    elicit->add_option("--ce-file", o.ce_file, "lines of: event x y ce");

    auto* compare = app.add_subcommand("compare", "rank two agents by conservatism");
    scenario_opt(compare);
    compare->add_option("--against", o.against, "second scenario")->required();
    compare->add_option("--event", o.event, "single event (default: all)");

    auto* sets = app.add_subcommand("sets", "belief-set operations");
    scenario_opt(sets);
    sets->add_option("--op", o.op, "bayes, hull, minkowski or segment")
        ->required()
        ->check(CLI::IsMember({"bayes", "hull", "minkowski", "segment"}));
    sets->add_option("--event", o.event, "conditioning event")->required();
    sets->add_option("--delta", o.delta, "weight for minkowski");
    sets->add_option("--lo", o.lo, "lower weight for segment");
    sets->add_option("--hi", o.hi, "upper weight for segment");

    auto* value = app.add_subcommand("value", "alpha-maxmin value of an act");
    scenario_opt(value);
    value->add_option("--act", o.act, "act name")->required();
    value->add_option("--alpha", o.alpha, "ambiguity weight")->required()->check(CLI::Range(0.0, 1.0));
    value->add_option("--event", o.event, "evaluate after this event");
    value->add_option("--convention", o.convention, "min: alpha weights the worst case; max: the best case")
        ->capture_default_str();

    auto* repro = app.add_subcommand("reproduce", "recompute a worked example");
    repro->add_option("target", o.target, "example1, example3 or table3")
        ->required()
        ->check(CLI::IsMember({"example1", "example3", "table3"}));
    repro->add_option("--out", o.out, "write the report to this file");

    std::vector<const char*> argv{"conserv"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "conserv: " << e.what() << "\n";
        return kExitUsage;
    }

    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    std::string report;
    int code = kExitOk;
    try {
        if (sub == update) report = cmd_update(o);
        else if (sub == audit) report = cmd_audit(o);
        else if (sub == elicit) report = cmd_elicit(o);
        else if (sub == compare) report = cmd_compare(o);
        else if (sub == sets) report = cmd_sets(o);
        else if (sub == value) report = cmd_value(o);
        else {
            bool ok = true;
            report = cmd_reproduce(o, ok);
            if (!ok) code = kExitDomain;
        }
    } catch (const UsageError& e) {
        err << "conserv " << name << ": " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "conserv " << name << ": " << e.what() << "\n";
        return kExitDomain;
    }

    if (o.out.empty()) {
        out << report;
    } else {
        std::ofstream file(o.out, std::ios::binary);
        if (!file || !(file << report)) {
            err << "conserv " << name << ": cannot write " << o.out << "\n";
            return kExitDomain;
        }
    }
    return code;
}

}  // namespace conserv
