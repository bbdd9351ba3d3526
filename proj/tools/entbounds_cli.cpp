// Command-line front end: scalar-inequality audits, benchmark-state surface
// emission, Haar-state soundness audits, and ad-hoc bound evaluation.
//
// Exit codes: 0 all checks pass, 1 mathematical finding, 2 usage or I/O error.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "entbounds/audit.hpp"
#include "entbounds/relations.hpp"
#include "entbounds/report_io.hpp"

namespace {

using namespace entbounds;

constexpr int kExitOk = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct CommonFlags {
    std::string config_path;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> samples;
    std::optional<double> tolerance;
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--config", flags.config_path, "flat key=value config file");
    cmd->add_option("--out", flags.out, "output directory for report files");
    cmd->add_option("--format", flags.format, "report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--seed", flags.seed, "random seed");
    cmd->add_option("--samples", flags.samples, "sample count for the command's random phase");
    cmd->add_option("--tolerance", flags.tolerance, "violation tolerance override");
}

// File settings first, then flags on top.
AuditConfig build_config(const CommonFlags& flags, bool samples_mean_random_points,
                         bool tolerance_means_soundness) {
    AuditConfig cfg;
    if (!flags.config_path.empty()) {
        cfg = AuditConfig::from_file(flags.config_path);
    }
    if (flags.out) cfg.out_path = *flags.out;
    if (flags.format) cfg.set("format", *flags.format);
    if (flags.seed) cfg.seed = *flags.seed;
    if (flags.samples) {
        (samples_mean_random_points ? cfg.random_points : cfg.samples) = *flags.samples;
    }
    if (flags.tolerance) {
        (tolerance_means_soundness ? cfg.soundness_tolerance : cfg.tolerance) = *flags.tolerance;
    }
    cfg.validate();
    return cfg;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed writing output file '" + path.string() + "'");
    }
}

std::filesystem::path prepare_out_dir(const AuditConfig& cfg) {
    std::filesystem::path dir = cfg.out_path.empty() ? "." : cfg.out_path;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw std::runtime_error("cannot create output directory '" + dir.string() + "'");
    }
    return dir;
}

int run_lemmas(const CommonFlags& flags) {
    const AuditConfig cfg = build_config(flags, /*samples_mean_random_points=*/true,
                                         /*tolerance_means_soundness=*/false);
    const ScalarBoundsAudit audit = run_scalar_bounds_audit(cfg);

    for (const auto& r : audit.reports) {
        std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << "  points=" << r.points
                  << "  worst_slack=" << format_g17(r.worst_slack) << "  at (x="
                  << format_g17(r.worst_x) << ", k=" << format_g17(r.worst_k)
                  << ", exp=" << format_g17(r.worst_exponent) << ")\n";
    }

    const auto dir = prepare_out_dir(cfg);
    if (cfg.format == ReportFormat::json) {
        nlohmann::json body = to_json(audit);
        const auto envelope = make_report_envelope("lemmas", cfg, body["reports"],
                                                   body["violations"]);
        write_file(dir / "lemma_audit.json", envelope.dump(2) + "\n");
    } else {
        write_file(dir / "lemma_audit.csv", scalar_audit_csv(audit));
    }
    std::cout << (audit.ok ? "all scalar bounds hold" : "scalar bound violation found") << "\n";
    return audit.ok ? kExitOk : kExitFinding;
}

int run_example1(const CommonFlags& flags) {
    const AuditConfig cfg = build_config(flags, true, false);

    const auto measures = run_benchmark_measures();
    for (const auto& m : measures) {
        std::cout << m.name << "  computed=" << format_g17(m.computed)
                  << "  expected=" << format_g17(m.expected)
                  << "  abs_error=" << format_g17(m.abs_error) << "\n";
    }

    const auto mono = run_monogamy_surface(cfg);
    const auto poly = run_polygamy_surface(cfg);

    const auto dir = prepare_out_dir(cfg);
    write_file(dir / "fig1_monogamy_surface.csv", monogamy_surface_csv(mono.rows));
    write_file(dir / "fig2_polygamy_surface.csv", polygamy_surface_csv(poly.rows));

    const bool ok = mono.ok && poly.ok;
    if (cfg.format == ReportFormat::json) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& m : measures) {
            checks.push_back({{"name", m.name},
                              {"computed", m.computed},
                              {"expected", m.expected},
                              {"abs_error", m.abs_error}});
        }
        nlohmann::json results = {{"measures", checks},
                                  {"monogamy_rows", mono.rows.size()},
                                  {"polygamy_rows", poly.rows.size()},
                                  {"equality_gap", mono.equality_gap},
                                  {"ok", ok}};
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& v : mono.violations) {
            violations.push_back({{"check", v.check}, {"k", v.k}, {"exponent", v.exponent},
                                  {"slack", v.slack}});
        }
        for (const auto& v : poly.violations) {
            violations.push_back({{"check", v.check}, {"k", v.k}, {"exponent", v.exponent},
                                  {"slack", v.slack}});
        }
        write_file(dir / "example1_report.json",
                   make_report_envelope("example1", cfg, results, violations).dump(2) + "\n");
    } else {
        write_file(dir / "example1_measures.csv", measures_csv(measures));
    }

    for (const auto& v : mono.violations) {
        std::cout << "violation " << v.check << " at (k=" << format_g17(v.k)
                  << ", mu=" << format_g17(v.exponent) << ") slack=" << format_g17(v.slack)
                  << "\n";
    }
    for (const auto& v : poly.violations) {
        std::cout << "violation " << v.check << " at (k=" << format_g17(v.k)
                  << ", v=" << format_g17(v.exponent) << ") slack=" << format_g17(v.slack)
                  << "\n";
    }
    std::cout << "equality gap at (k=1, mu=3): " << format_g17(mono.equality_gap) << "\n";
    std::cout << (ok ? "surface orderings hold" : "surface ordering violation found") << "\n";
    return ok ? kExitOk : kExitFinding;
}

int run_random_audit(const CommonFlags& flags) {
    const AuditConfig cfg = build_config(flags, /*samples_mean_random_points=*/false,
                                         /*tolerance_means_soundness=*/true);
    const StateAudit audit = run_state_audit(cfg);

    std::cout << "samples=" << audit.samples << " seed=" << audit.seed << " generator=\""
              << audit.generator << "\"\n";
    for (const auto& c : audit.cells) {
        std::cout << (c.polygamy ? "polygamy " : "monogamy ") << "k=" << format_g17(c.k)
                  << " exp=" << format_g17(c.exponent) << "  applicable=" << c.applicable
                  << " sound=" << c.sound << " violations=" << c.violations
                  << " worst_slack=" << format_g17(c.worst_slack) << "\n";
    }
    std::cout << "ckw_min_slack=" << format_g17(audit.ckw_min_slack) << "\n";

    const auto dir = prepare_out_dir(cfg);
    if (cfg.format == ReportFormat::json) {
        nlohmann::json body = to_json(audit);
        nlohmann::json results = {{"cells", body["cells"]},
                                  {"ckw_min_slack", audit.ckw_min_slack},
                                  {"generator", audit.generator}};
        write_file(dir / "state_audit.json",
                   make_report_envelope("random-audit", cfg, results, body["violations"]).dump(2) +
                       "\n");
    } else {
        write_file(dir / "state_audit.csv", state_audit_csv(audit));
    }
    std::cout << (audit.ok ? "all sampled states satisfy the bounds"
                           : "soundness violation found")
              << "\n";
    return audit.ok ? kExitOk : kExitFinding;
}

std::vector<double> parse_values_text(const std::string& text) {
    std::vector<double> values;
    std::string token;
    std::stringstream ss(text);
    while (std::getline(ss, token, ',')) {
        // allow whitespace-separated entries inside a token as well
        std::stringstream ts(token);
        std::string piece;
        while (ts >> piece) {
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(piece, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != piece.size()) {
                throw std::invalid_argument("malformed measure value '" + piece + "'");
            }
            values.push_back(v);
        }
    }
    if (values.empty()) {
        throw std::invalid_argument("no measure values given");
    }
    return values;
}

struct BoundsEvalFlags {
    std::string values_text;
    std::string values_file;
    int theorem = 0;
    double k = 1.0;
    double k_prime = 1.0;
    double mu = 3.0;
    double v = 1.0;
    int m = 1;
    std::string format = "text";
};

int run_bounds_eval(const BoundsEvalFlags& flags) {
    std::vector<double> values;
    if (!flags.values_file.empty()) {
        std::ifstream in(flags.values_file);
        if (!in) {
            throw std::runtime_error("cannot open values file '" + flags.values_file + "'");
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        values = parse_values_text(buffer.str());
    } else {
        values = parse_values_text(flags.values_text);
    }

    const int n_parties = static_cast<int>(values.size()) + 1;
    BoundReport report;
    std::string bound_kind;
    switch (flags.theorem) {
        case 1: {
            if (values.size() != 2) {
                throw std::invalid_argument("theorem 1 takes exactly two values");
            }
            const auto params = BoundParams::monogamy(flags.mu, flags.k);
            report = monogamy_lower_bound_tripartite(values[0], values[1], params);
            bound_kind = "monogamy lower bound (tripartite)";
            break;
        }
        case 2: {
            const auto params =
                BoundParams::monogamy(flags.mu, flags.k, flags.k_prime, flags.m, n_parties);
            report = monogamy_lower_bound_partitioned(
                {values, MeasureVectorKind::monogamy_base}, params);
            bound_kind = "monogamy lower bound (partitioned)";
            break;
        }
        case 3: {
            const auto params =
                BoundParams::monogamy(flags.mu, flags.k, flags.k_prime, flags.m, n_parties);
            report = monogamy_lower_bound_ordered({values, MeasureVectorKind::monogamy_base},
                                                  params);
            bound_kind = "monogamy lower bound (ordered)";
            break;
        }
        case 4: {
            if (values.size() != 2) {
                throw std::invalid_argument("theorem 4 takes exactly two values");
            }
            const auto params = BoundParams::polygamy(flags.v, flags.k);
            report = polygamy_upper_bound_tripartite(values[0], values[1], params);
            bound_kind = "polygamy upper bound (tripartite)";
            break;
        }
        case 5: {
            const auto params =
                BoundParams::polygamy(flags.v, flags.k, flags.k_prime, flags.m, n_parties);
            report = polygamy_upper_bound_partitioned(
                {values, MeasureVectorKind::polygamy_base}, params);
            bound_kind = "polygamy upper bound (partitioned)";
            break;
        }
        default:
            throw std::invalid_argument("--theorem must be 1..5");
    }

    if (flags.format == "json") {
        nlohmann::json config = {{"theorem", flags.theorem}, {"k", flags.k},
                                 {"kprime", flags.k_prime}, {"mu", flags.mu},
                                 {"v", flags.v},            {"m", flags.m},
                                 {"n_parties", n_parties},  {"values", values}};
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& s : report.precondition_detail) {
            if (s.slack < -1e-12) {
                violations.push_back({{"index", s.index},
                                      {"kind", s.head ? "head" : "tail"},
                                      {"slack", s.slack}});
            }
        }
        nlohmann::json envelope = {{"command", "bounds-eval"},
                                   {"config", config},
                                   {"results", to_json(report)},
                                   {"violations", violations}};
        std::cout << envelope.dump(2) << "\n";
    } else {
        std::cout << bound_kind << "\n";
        if (report.precondition_ok) {
            std::cout << "bound: " << format_g17(report.bound_value) << "\n";
        } else {
            std::cout << "bound: not applicable\n";
        }
        if (report.branch != 0) {
            std::cout << "branch: " << report.branch << "\n";
        }
        std::cout << "precondition_ok: " << (report.precondition_ok ? "true" : "false") << "\n";
        for (const auto& s : report.precondition_detail) {
            std::cout << "slack[" << s.index << "," << (s.head ? "head" : "tail")
                      << "]: " << format_g17(s.slack) << "\n";
        }
        for (const auto& [name, value] : report.comparison_values) {
            std::cout << "comparison " << name << ": " << format_g17(value) << "\n";
        }
        if (!report.comparison_values.empty()) {
            std::cout << "gap: " << format_g17(report.gap) << "\n";
        }
        if (!report.precondition_ok) {
            for (const auto& s : report.precondition_detail) {
                if (s.slack < -1e-12) {
                    std::cout << "failing index: " << s.index << "\n";
                    break;
                }
            }
        }
    }
    return report.precondition_ok ? kExitOk : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"concurrence monogamy/polygamy bound toolkit"};
    app.require_subcommand(1);

    CommonFlags lemmas_flags;
    auto* lemmas = app.add_subcommand(
        "lemmas", "grid + randomized audit of the scalar power-bound inequalities");
    add_common_flags(lemmas, lemmas_flags);

    CommonFlags example1_flags;
    auto* example1 = app.add_subcommand(
        "example1", "benchmark-state measures and bound-comparison surface CSVs");
    add_common_flags(example1, example1_flags);

    CommonFlags random_flags;
    auto* random_audit = app.add_subcommand(
        "random-audit", "soundness and tightness audit on Haar-random three-qubit states");
    add_common_flags(random_audit, random_flags);

    BoundsEvalFlags eval_flags;
    auto* bounds_eval =
        app.add_subcommand("bounds-eval", "evaluate a bound on user-supplied measure values");
    bounds_eval->add_option("values", eval_flags.values_text,
                            "comma-separated measure values (base powers)");
    bounds_eval->add_option("--values-file", eval_flags.values_file,
                            "file with comma/whitespace-separated values");
    bounds_eval->add_option("--theorem", eval_flags.theorem, "bound to evaluate (1..5)")
        ->required()
        ->check(CLI::Range(1, 5));
    bounds_eval->add_option("--k", eval_flags.k, "dominance factor k >= 1");
    bounds_eval->add_option("--kprime", eval_flags.k_prime, "tail dominance factor k' >= 1");
    bounds_eval->add_option("--mu", eval_flags.mu, "monogamy exponent mu >= 3");
    bounds_eval->add_option("--v", eval_flags.v, "polygamy exponent v in [0, 1]");
    bounds_eval->add_option("--m", eval_flags.m, "partition index m");
    bounds_eval->add_option("--format", eval_flags.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (lemmas->parsed()) return run_lemmas(lemmas_flags);
        if (example1->parsed()) return run_example1(example1_flags);
        if (random_audit->parsed()) return run_random_audit(random_flags);
        if (bounds_eval->parsed()) return run_bounds_eval(eval_flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
