#include "conserv/report.hpp"

#include <cmath>
#include <cstdio>

namespace conserv {

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (x == 0.0) x = 0.0;  // no "-0"
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

std::string format_vector(std::span<const double> v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += format_number(v[i]);
    }
    return out + ")";
}

std::string tsv_row(const std::vector<std::string>& cells) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += '\t';
        out += cells[i];
    }
    return out + "\n";
}

std::string render_violation(const Scenario& sc, const Violation& v) {
    std::string events;
    for (const auto& e : v.events) {
        if (!events.empty()) events += ",";
        events += event_name(sc, e);
    }
    std::string acts;
    for (std::size_t i = 0; i < v.acts.size(); ++i) {
        if (i) acts += " ";
        acts += v.roles.at(i) + "=" + format_vector(v.acts[i].outcomes());
    }
    std::string statements;
    for (const auto& st : v.statements) {
        if (!statements.empty()) statements += "; ";
        statements += v.roles.at(st.lhs) + " " + std::string(relation_symbol(st.relation)) + (st.unanimous ? "*" : "") +
                      " " + v.roles.at(st.rhs) + " | " + (st.given.is_full() ? "S" : event_name(sc, st.given)) +
                      " [" + format_number(st.margin) + "]";
    }
    return tsv_row({std::string(axiom_id(v.axiom)), v.clause.empty() ? "-" : v.clause, events, acts, statements});
}

std::string render_audit(const Scenario& sc, const AuditReport& report) {
    std::string out = std::string(axiom_id(report.axiom)) + ": " + std::to_string(report.violation_count) +
                      (report.violation_count == 1 ? " violation" : " violations") + " (" +
                      std::to_string(report.acts_enumerated) + " of " + std::to_string(report.acts_total) +
                      " acts, " + std::to_string(report.cases_checked) + " cases)\n";
    if (!report.violations.empty()) {
        out += tsv_row({"axiom", "clause", "events", "acts", "statements"});
        for (const auto& v : report.violations) out += render_violation(sc, v);
        if (report.violations.size() < report.violation_count)
            out += "... " + std::to_string(report.violation_count - report.violations.size()) + " more\n";
    }
    return out;
}

std::string render_estimate(const Scenario& sc, const DeltaEstimate& est) {
    std::string flags;
    auto add = [&](const char* f) { flags += flags.empty() ? f : std::string(",") + f; };
    if (!est.identified) add("unidentified");
    if (est.off_segment) add("off-segment");
    if (est.clamped) add("clamped");
    return tsv_row({event_name(sc, est.event), format_number(est.value), format_number(est.residual),
                    flags.empty() ? "ok" : flags});
}

}  // namespace conserv
