#include "entbounds/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace entbounds {

namespace {

nlohmann::json violations_json(const std::vector<SweepViolation>& violations) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : violations) {
        arr.push_back({{"check", v.check},
                       {"x", v.x},
                       {"k", v.k},
                       {"exponent", v.exponent},
                       {"slack", v.slack}});
    }
    return arr;
}

}  // namespace

std::string format_g17(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

nlohmann::json to_json(const AuditConfig& cfg) {
    return {
        {"seed", cfg.seed},
        {"samples", cfg.samples},
        {"random_points", cfg.random_points},
        {"grid_x_points", cfg.grid_x_points},
        {"grid_exp_points", cfg.grid_exp_points},
        {"grid_k_values", cfg.grid_k_values},
        {"tolerance", cfg.tolerance},
        {"soundness_tolerance", cfg.soundness_tolerance},
        {"endpoint_tolerance", cfg.endpoint_tolerance},
        {"tightness_tolerance", cfg.tightness_tolerance},
        {"surface_k_step", cfg.surface_k_step},
        {"surface_mu_step", cfg.surface_mu_step},
        {"surface_v_step", cfg.surface_v_step},
        {"audit_k_values", cfg.audit_k_values},
        {"audit_mu_values", cfg.audit_mu_values},
        {"audit_v_values", cfg.audit_v_values},
        {"out", cfg.out_path},
        {"format", cfg.format == ReportFormat::csv ? "csv" : "json"},
    };
}

nlohmann::json to_json(const ScalarBoundsAudit& audit) {
    nlohmann::json reports = nlohmann::json::array();
    for (const auto& r : audit.reports) {
        reports.push_back({{"name", r.name},
                           {"points", r.points},
                           {"worst_slack", r.worst_slack},
                           {"worst_x", r.worst_x},
                           {"worst_k", r.worst_k},
                           {"worst_exponent", r.worst_exponent},
                           {"tolerance", r.tolerance},
                           {"violations", r.violation_count},
                           {"ok", r.ok()}});
    }
    return {{"ok", audit.ok}, {"reports", reports}, {"violations", violations_json(audit.violations)}};
}

nlohmann::json to_json(const StateAudit& audit) {
    nlohmann::json cells = nlohmann::json::array();
    for (const auto& c : audit.cells) {
        cells.push_back({{"kind", c.polygamy ? "polygamy" : "monogamy"},
                         {"k", c.k},
                         {"exponent", c.exponent},
                         {"applicable", c.applicable},
                         {"sound", c.sound},
                         {"violations", c.violations},
                         {"worst_slack", c.worst_slack}});
    }
    nlohmann::json violations = nlohmann::json::array();
    for (const auto& v : audit.violations) {
        nlohmann::json amps = nlohmann::json::array();
        for (const auto& a : v.amplitudes) {
            amps.push_back({a.real(), a.imag()});
        }
        violations.push_back({{"check", v.check},
                              {"kind", v.polygamy ? "polygamy" : "monogamy"},
                              {"k", v.k},
                              {"exponent", v.exponent},
                              {"sample_index", v.sample_index},
                              {"slack", v.slack},
                              {"amplitudes", amps}});
    }
    return {{"ok", audit.ok},
            {"samples", audit.samples},
            {"seed", audit.seed},
            {"generator", audit.generator},
            {"ckw_min_slack", audit.ckw_min_slack},
            {"cells", cells},
            {"violations", violations}};
}

nlohmann::json to_json(const BoundReport& report) {
    nlohmann::json slacks = nlohmann::json::array();
    for (const auto& s : report.precondition_detail) {
        slacks.push_back({{"index", s.index}, {"kind", s.head ? "head" : "tail"},
                          {"slack", s.slack}});
    }
    nlohmann::json comparisons = nlohmann::json::object();
    for (const auto& [name, value] : report.comparison_values) {
        comparisons[name] = value;
    }
    return {{"bound_value", report.bound_value},
            {"precondition_ok", report.precondition_ok},
            {"branch", report.branch},
            {"precondition_slacks", slacks},
            {"comparisons", comparisons},
            {"gap", report.gap}};
}

nlohmann::json make_report_envelope(std::string_view command, const AuditConfig& cfg,
                                    nlohmann::json results, nlohmann::json violations) {
    return {{"command", std::string(command)},
            {"config", to_json(cfg)},
            {"results", std::move(results)},
            {"violations", std::move(violations)}};
}

std::string scalar_audit_csv(const ScalarBoundsAudit& audit) {
    std::ostringstream out;
    out << "name,points,worst_slack,worst_x,worst_k,worst_exponent,tolerance,violations\n";
    for (const auto& r : audit.reports) {
        out << r.name << ',' << r.points << ',' << format_g17(r.worst_slack) << ','
            << format_g17(r.worst_x) << ',' << format_g17(r.worst_k) << ','
            << format_g17(r.worst_exponent) << ',' << format_g17(r.tolerance) << ','
            << r.violation_count << '\n';
    }
    return out.str();
}

std::string state_audit_csv(const StateAudit& audit) {
    std::ostringstream out;
    out << "kind,k,exponent,applicable,sound,violations,worst_slack\n";
    for (const auto& c : audit.cells) {
        out << (c.polygamy ? "polygamy" : "monogamy") << ',' << format_g17(c.k) << ','
            << format_g17(c.exponent) << ',' << c.applicable << ',' << c.sound << ','
            << c.violations << ',' << format_g17(c.worst_slack) << '\n';
    }
    return out.str();
}

std::string measures_csv(const std::vector<MeasureCheck>& checks) {
    std::ostringstream out;
    out << "name,computed,expected,abs_error\n";
    for (const auto& c : checks) {
        out << c.name << ',' << format_g17(c.computed) << ',' << format_g17(c.expected) << ','
            << format_g17(c.abs_error) << '\n';
    }
    return out.str();
}

std::string monogamy_surface_csv(const std::vector<MonogamySurfaceRow>& rows) {
    std::ostringstream out;
    out << "k,mu,prior_weighted,prior_linear,bound,lhs\n";
    for (const auto& r : rows) {
        out << format_g17(r.k) << ',' << format_g17(r.mu) << ',' << format_g17(r.prior_weighted)
            << ',' << format_g17(r.prior_linear) << ',' << format_g17(r.bound) << ','
            << format_g17(r.lhs) << '\n';
    }
    return out.str();
}

std::string polygamy_surface_csv(const std::vector<PolygamySurfaceRow>& rows) {
    std::ostringstream out;
    out << "k,v,prior_damped,bound,difference\n";
    for (const auto& r : rows) {
        out << format_g17(r.k) << ',' << format_g17(r.v) << ',' << format_g17(r.prior_damped)
            << ',' << format_g17(r.bound) << ',' << format_g17(r.difference) << '\n';
    }
    return out.str();
}

}  // namespace entbounds
