#include "entbounds/audit.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "entbounds/measures.hpp"
#include "entbounds/scalar_bounds.hpp"
#include "entbounds/states.hpp"

namespace entbounds {

namespace {

constexpr std::size_t kMaxStoredViolations = 32;

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return {};
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    double out = 0.0;
    try {
        out = std::stod(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "' has a malformed number");
    }
    if (used != value.size()) {
        throw std::invalid_argument("config key '" + key + "' has a malformed number");
    }
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::size_t used = 0;
    unsigned long long out = 0;
    try {
        out = std::stoull(value, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("config key '" + key + "' has a malformed integer");
    }
    if (used != value.size()) {
        throw std::invalid_argument("config key '" + key + "' has a malformed integer");
    }
    return out;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) continue;
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) {
        throw std::invalid_argument("config key '" + key + "' needs at least one value");
    }
    return out;
}

/// lo, lo+step, ... clamped to hi, with hi always included.
std::vector<double> inclusive_steps(double lo, double hi, double step) {
    if (!(step > 0.0) || !(hi >= lo)) {
        throw std::invalid_argument("grid range needs hi >= lo and step > 0");
    }
    std::vector<double> out;
    const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    out.reserve(count + 1);
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(std::min(lo + static_cast<double>(i) * step, hi));
    }
    if (out.back() < hi - 1e-12) out.push_back(hi);
    return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return out;
}

class SlackTracker {
public:
    SlackTracker(std::string name, double tolerance, std::vector<SweepViolation>& sink)
        : sink_(&sink) {
        report_.name = std::move(name);
        report_.tolerance = tolerance;
    }

    void observe(double x, double k, double exponent, double slack) {
        ++report_.points;
        if (slack < report_.worst_slack) {
            report_.worst_slack = slack;
            report_.worst_x = x;
            report_.worst_k = k;
            report_.worst_exponent = exponent;
        }
        if (slack < -report_.tolerance) {
            ++report_.violation_count;
            if (sink_->size() < kMaxStoredViolations) {
                sink_->push_back({report_.name, x, k, exponent, slack, 0});
            }
        }
    }

    InequalityReport finish() const { return report_; }

private:
    InequalityReport report_;
    std::vector<SweepViolation>* sink_;
};

struct SweepFamily {
    std::string name;
    bool uses_k = true;
    double exp_lo = 3.0;
    double exp_hi_grid = 8.0;
    double exp_hi_random = 10.0;
    std::function<double(double x, double k, double e)> min_slack;
};

std::vector<SweepFamily> sweep_families() {
    auto lhs_mu = [](double x, double mu) { return std::pow(1.0 + x, mu); };

    std::vector<SweepFamily> fams;
    fams.push_back({"lower_chain", true, 1.0, 8.0, 10.0, [=](double x, double k, double mu) {
                        const auto b = power_lower_chain({x, k, mu, 1.0});
                        return std::min({lhs_mu(x, mu) - b[0], b[0] - b[1], b[1] - b[2],
                                         b[2] - b[3]});
                    }});
    fams.push_back({"upper_chain", true, 0.0, 1.0, 1.0, [=](double x, double k, double v) {
                        const auto u = power_upper_chain({x, k, 3.0, v});
                        return std::min({u[0] - lhs_mu(x, v), u[1] - u[0], u[2] - u[1],
                                         u[3] - u[2]});
                    }});
    fams.push_back({"lower_linear", true, 2.0, 8.0, 10.0, [=](double x, double k, double mu) {
                        return lhs_mu(x, mu) - power_lower_linear({x, k, mu, 1.0});
                    }});
    fams.push_back({"lower_quadratic_unit", false, 3.0, 8.0, 10.0,
                    [=](double x, double, double mu) {
                        return lhs_mu(x, mu) - power_lower_quadratic_unit(x, mu);
                    }});
    fams.push_back({"lower_quadratic", true, 3.0, 8.0, 10.0, [=](double x, double k, double mu) {
                        return lhs_mu(x, mu) - power_lower_quadratic({x, k, mu, 1.0});
                    }});
    fams.push_back({"upper_weighted_unit", false, 0.0, 1.0, 1.0, [=](double x, double, double v) {
                        return power_upper_weighted_unit(x, v) - lhs_mu(x, v);
                    }});
    fams.push_back({"upper_weighted", true, 0.0, 1.0, 1.0, [=](double x, double k, double v) {
                        return power_upper_weighted({x, k, 3.0, v}) - lhs_mu(x, v);
                    }});
    fams.push_back({"lower_ladder", true, 3.0, 8.0, 10.0, [=](double x, double k, double mu) {
                        const auto r = lower_bound_ladder({x, k, mu, 1.0});
                        return std::min({lhs_mu(x, mu) - r[0], r[0] - r[1], r[1] - r[2]});
                    }});
    fams.push_back({"upper_ladder", true, 0.0, 1.0, 1.0, [=](double x, double k, double v) {
                        const auto r = upper_bound_ladder({x, k, 3.0, v});
                        return std::min({r[0] - lhs_mu(x, v), r[1] - r[0], r[2] - r[1]});
                    }});
    return fams;
}

struct EndpointFamily {
    std::string name;
    double exp_lo = 3.0;
    double exp_hi = 8.0;
    std::function<double(double k, double e)> difference;  // rhs(1/k) - (1+1/k)^e
};

std::vector<EndpointFamily> endpoint_families() {
    std::vector<EndpointFamily> fams;
    fams.push_back({"lower_linear_endpoint", 2.0, 8.0, [](double k, double mu) {
                        return power_lower_linear({1.0 / k, k, mu, 1.0}) -
                               std::pow(1.0 + 1.0 / k, mu);
                    }});
    fams.push_back({"lower_quadratic_endpoint", 3.0, 8.0, [](double k, double mu) {
                        return power_lower_quadratic({1.0 / k, k, mu, 1.0}) -
                               std::pow(1.0 + 1.0 / k, mu);
                    }});
    fams.push_back({"upper_weighted_endpoint", 0.0, 1.0, [](double k, double v) {
                        return power_upper_weighted({1.0 / k, k, 3.0, v}) -
                               std::pow(1.0 + 1.0 / k, v);
                    }});
    return fams;
}

}  // namespace

void AuditConfig::set(const std::string& key, const std::string& value) {
    if (key == "seed") {
        seed = parse_u64(key, value);
    } else if (key == "samples") {
        samples = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "random_points") {
        random_points = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "grid_x_points") {
        grid_x_points = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "grid_exp_points") {
        grid_exp_points = static_cast<std::size_t>(parse_u64(key, value));
    } else if (key == "grid_k_values") {
        grid_k_values = parse_list(key, value);
    } else if (key == "tolerance") {
        tolerance = parse_double(key, value);
    } else if (key == "soundness_tolerance") {
        soundness_tolerance = parse_double(key, value);
    } else if (key == "endpoint_tolerance") {
        endpoint_tolerance = parse_double(key, value);
    } else if (key == "tightness_tolerance") {
        tightness_tolerance = parse_double(key, value);
    } else if (key == "surface_k_step") {
        surface_k_step = parse_double(key, value);
    } else if (key == "surface_mu_step") {
        surface_mu_step = parse_double(key, value);
    } else if (key == "surface_v_step") {
        surface_v_step = parse_double(key, value);
    } else if (key == "audit_k_values") {
        audit_k_values = parse_list(key, value);
    } else if (key == "audit_mu_values") {
        audit_mu_values = parse_list(key, value);
    } else if (key == "audit_v_values") {
        audit_v_values = parse_list(key, value);
    } else if (key == "out") {
        out_path = value;
    } else if (key == "format") {
        if (value == "csv") {
            format = ReportFormat::csv;
        } else if (value == "json") {
            format = ReportFormat::json;
        } else {
            throw std::invalid_argument("config key 'format' must be csv or json");
        }
    } else {
        throw std::invalid_argument("unknown config key '" + key + "'");
    }
}

AuditConfig AuditConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open config file '" + path + "'");
    }
    AuditConfig cfg;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("config line " + std::to_string(line_no) +
                                        " is not key=value");
        }
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    cfg.validate();
    return cfg;
}

void AuditConfig::validate() const {
    auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
    if (samples < 1 || random_points < 1) {
        throw std::invalid_argument("sample counts must be >= 1");
    }
    if (grid_x_points < 2 || grid_exp_points < 2) {
        throw std::invalid_argument("grid densities must be >= 2");
    }
    if (!positive(surface_k_step) || !positive(surface_mu_step) || !positive(surface_v_step)) {
        throw std::invalid_argument("surface steps must be positive");
    }
    if (!std::isfinite(tolerance) || !std::isfinite(soundness_tolerance) ||
        !std::isfinite(endpoint_tolerance) || !std::isfinite(tightness_tolerance)) {
        throw std::invalid_argument("tolerances must be finite");
    }
    auto check_ks = [](const std::vector<double>& ks) {
        for (double k : ks) {
            if (!std::isfinite(k) || k < 1.0) {
                throw std::invalid_argument("k values must satisfy k >= 1");
            }
        }
    };
    check_ks(grid_k_values);
    check_ks(audit_k_values);
    for (double mu : audit_mu_values) {
        if (!std::isfinite(mu) || mu < 3.0) {
            throw std::invalid_argument("audit mu values must satisfy mu >= 3");
        }
    }
    for (double v : audit_v_values) {
        if (!std::isfinite(v) || v < 0.0 || v > 1.0) {
            throw std::invalid_argument("audit v values must lie in [0, 1]");
        }
    }
}

ScalarBoundsAudit run_scalar_bounds_audit(const AuditConfig& cfg) {
    cfg.validate();
    ScalarBoundsAudit out;

    const auto exp_grid_of = [&](double lo, double hi) {
        return linspace(lo, hi, cfg.grid_exp_points);
    };
    const auto x_fracs = linspace(0.0, 1.0, cfg.grid_x_points);

    std::uint64_t family_index = 0;
    for (const auto& fam : sweep_families()) {
        SlackTracker tracker(fam.name, cfg.tolerance, out.violations);
        const std::vector<double> ks = fam.uses_k ? cfg.grid_k_values : std::vector<double>{1.0};
        const auto exps = exp_grid_of(fam.exp_lo, fam.exp_hi_grid);
        for (double k : ks) {
            for (double frac : x_fracs) {
                const double x = frac / k;
                for (double e : exps) {
                    tracker.observe(x, k, e, fam.min_slack(x, k, e));
                }
            }
        }
        std::mt19937_64 rng(splitmix64(cfg.seed ^ splitmix64(0x5ca1ab1eULL + family_index)));
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        for (std::size_t i = 0; i < cfg.random_points; ++i) {
            const double k = fam.uses_k ? 1.0 + 9.0 * unit(rng) : 1.0;
            const double x = unit(rng) / k;
            const double e = fam.exp_lo + (fam.exp_hi_random - fam.exp_lo) * unit(rng);
            tracker.observe(x, k, e, fam.min_slack(x, k, e));
        }
        out.reports.push_back(tracker.finish());
        ++family_index;
    }

    for (const auto& fam : endpoint_families()) {
        SlackTracker tracker(fam.name, cfg.endpoint_tolerance, out.violations);
        for (double k : cfg.grid_k_values) {
            for (double e : exp_grid_of(fam.exp_lo, fam.exp_hi)) {
                tracker.observe(1.0 / k, k, e, -std::abs(fam.difference(k, e)));
            }
        }
        out.reports.push_back(tracker.finish());
    }

    for (const auto& rep : out.reports) {
        if (!rep.ok()) out.ok = false;
    }
    return out;
}

std::vector<MeasureCheck> run_benchmark_measures() {
    const PureState mono = monogamy_benchmark_state();
    const PureState poly = polygamy_benchmark_state();

    const double c_ab1 = concurrence_two_qubit(partial_trace(mono, {0, 1}), "AB1").value;
    const double c_ab2 = concurrence_two_qubit(partial_trace(mono, {0, 2}), "AB2").value;
    const double c_cut = concurrence_pure(mono, {0}).value;
    const double ca_ab1 = coa_two_qubit(partial_trace(poly, {0, 1}), "AB1").value;
    const double ca_ab2 = coa_two_qubit(partial_trace(poly, {0, 2}), "AB2").value;
    // The global cut of a pure state is pure, so assisted and plain
    // concurrence coincide there.
    const double ca_cut = concurrence_pure(poly, {0}).value;

    auto check = [](std::string name, double computed, double expected) {
        return MeasureCheck{std::move(name), computed, expected, std::abs(computed - expected)};
    };
    return {
        check("C(AB1)", c_ab1, 2.0 * std::sqrt(10.0) / 9.0),
        check("C(AB2)", c_ab2, 4.0 / 9.0),
        check("C(A|B1B2)", c_cut, 2.0 * std::sqrt(14.0) / 9.0),
        check("Ca(AB1)", ca_ab1, std::sqrt(34.0) / 12.0),
        check("Ca(AB2)", ca_ab2, std::sqrt(74.0) / 12.0),
        check("Ca(A|B1B2)", ca_cut, std::sqrt(106.0) / 12.0),
    };
}

MonogamySurfaceResult run_monogamy_surface(const AuditConfig& cfg) {
    cfg.validate();
    MonogamySurfaceResult out;

    const PureState mono = monogamy_benchmark_state();
    const double c_ab1 = concurrence_two_qubit(partial_trace(mono, {0, 1})).value;
    const double c_ab2 = concurrence_two_qubit(partial_trace(mono, {0, 2})).value;
    const double c_cut = concurrence_pure(mono, {0}).value;
    const double e1 = c_ab1 * c_ab1;
    const double e2 = c_ab2 * c_ab2;
    const double base = c_cut * c_cut;

    const auto note = [&](const char* check, double k, double mu, double slack) {
        if (slack < -cfg.tolerance) {
            out.ok = false;
            if (out.violations.size() < kMaxStoredViolations) {
                out.violations.push_back({check, 0.0, k, mu, slack, 0});
            }
        }
    };

    // The admissible k range tops out at e1/e2 = 5/2 for this state.
    for (double k : inclusive_steps(1.0, 2.5, cfg.surface_k_step)) {
        for (double mu : inclusive_steps(3.0, 10.0, cfg.surface_mu_step)) {
            const auto params = BoundParams::monogamy(mu, k);
            const auto rep = monogamy_lower_bound_tripartite(e1, e2, params);
            if (!rep.precondition_ok || rep.branch != 1) {
                note("monogamy_surface_precondition", k, mu, -1.0);
                continue;
            }
            const double weighted = rep.comparison_values.at("prior_weighted");
            const double linear = rep.comparison_values.at("prior_linear");
            const double lhs = std::pow(base, mu);
            out.rows.push_back({k, mu, weighted, linear, rep.bound_value, lhs});
            note("monogamy_surface_bound_vs_linear", k, mu, rep.bound_value - linear);
            note("monogamy_surface_linear_vs_weighted", k, mu, linear - weighted);
            note("monogamy_surface_lhs_vs_bound", k, mu, lhs - rep.bound_value);
            if (k == 1.0 && mu == 3.0) {
                out.equality_gap = std::abs(rep.bound_value - lhs);
            }
        }
    }
    return out;
}

PolygamySurfaceResult run_polygamy_surface(const AuditConfig& cfg) {
    cfg.validate();
    PolygamySurfaceResult out;

    const PureState poly = polygamy_benchmark_state();
    const double ca_ab1 = coa_two_qubit(partial_trace(poly, {0, 1})).value;
    const double ca_ab2 = coa_two_qubit(partial_trace(poly, {0, 2})).value;
    // The AB2 marginal dominates for this state, so it plays the first slot.
    const double dom = ca_ab2 * ca_ab2;
    const double sub = ca_ab1 * ca_ab1;

    for (double k : inclusive_steps(1.0, dom / sub, cfg.surface_k_step)) {
        for (double v : inclusive_steps(0.0, 1.0, cfg.surface_v_step)) {
            const auto params = BoundParams::polygamy(v, k);
            const auto rep = polygamy_upper_bound_tripartite(dom, sub, params);
            if (!rep.precondition_ok || rep.branch != 1) {
                out.ok = false;
                if (out.violations.size() < kMaxStoredViolations) {
                    out.violations.push_back({"polygamy_surface_precondition", 0.0, k, v, -1.0, 0});
                }
                continue;
            }
            const double prior = rep.comparison_values.at("prior_damped");
            const double diff = prior - rep.bound_value;
            out.rows.push_back({k, v, prior, rep.bound_value, diff});
            if (diff < -cfg.tolerance) {
                out.ok = false;
                if (out.violations.size() < kMaxStoredViolations) {
                    out.violations.push_back({"polygamy_surface_prior_vs_bound", 0.0, k, v, diff, 0});
                }
            }
        }
    }
    return out;
}

StateAudit run_state_audit(const AuditConfig& cfg) {
    cfg.validate();
    StateAudit out;
    out.samples = cfg.samples;
    out.seed = cfg.seed;
    out.generator = std::string(kHaarGeneratorName);

    for (double k : cfg.audit_k_values) {
        for (double mu : cfg.audit_mu_values) {
            out.cells.push_back({false, k, mu, 0, 0, 0,
                                 std::numeric_limits<double>::infinity()});
        }
    }
    for (double k : cfg.audit_k_values) {
        for (double v : cfg.audit_v_values) {
            out.cells.push_back({true, k, v, 0, 0, 0,
                                 std::numeric_limits<double>::infinity()});
        }
    }

    const auto record = [&](const char* check, const StateAuditCell& cell,
                            std::uint64_t index, double slack, const PureState& psi) {
        out.ok = false;
        if (out.violations.size() < kMaxStoredViolations) {
            out.violations.push_back({check, cell.polygamy, cell.k, cell.exponent, index, slack,
                                      psi.amplitudes()});
        }
    };

    for (std::uint64_t index = 0; index < cfg.samples; ++index) {
        const PureState psi = sample_haar_pure(3, {cfg.seed}, index);
        const auto l1 = wootters_lambdas(partial_trace(psi, {0, 1}));
        const auto l2 = wootters_lambdas(partial_trace(psi, {0, 2}));
        const double c1 = std::max(0.0, l1[0] - l1[1] - l1[2] - l1[3]);
        const double c2 = std::max(0.0, l2[0] - l2[1] - l2[2] - l2[3]);
        const double ca1 = l1[0] + l1[1] + l1[2] + l1[3];
        const double ca2 = l2[0] + l2[1] + l2[2] + l2[3];
        const double c_cut = concurrence_pure(psi, {0}).value;
        const double base = c_cut * c_cut;

        const double ckw = base - c1 * c1 - c2 * c2;
        out.ckw_min_slack = std::min(out.ckw_min_slack, ckw);
        if (ckw < -cfg.soundness_tolerance) {
            StateAuditCell pseudo{false, 1.0, 1.0, 0, 0, 0, 0.0};
            record("ckw_baseline", pseudo, index, ckw, psi);
        }

        for (auto& cell : out.cells) {
            const double b1 = cell.polygamy ? ca1 * ca1 : c1 * c1;
            const double b2 = cell.polygamy ? ca2 * ca2 : c2 * c2;
            BoundReport rep;
            double slack = 0.0;
            if (cell.polygamy) {
                const auto params = BoundParams::polygamy(cell.exponent, cell.k);
                rep = polygamy_upper_bound_tripartite(b1, b2, params);
                if (!rep.precondition_ok) continue;
                slack = rep.bound_value - std::pow(base, cell.exponent);
            } else {
                const auto params = BoundParams::monogamy(cell.exponent, cell.k);
                rep = monogamy_lower_bound_tripartite(b1, b2, params);
                if (!rep.precondition_ok) continue;
                slack = std::pow(base, cell.exponent) - rep.bound_value;
            }
            ++cell.applicable;
            cell.worst_slack = std::min(cell.worst_slack, slack);
            if (slack < -cfg.soundness_tolerance) {
                ++cell.violations;
                record(cell.polygamy ? "polygamy_soundness" : "monogamy_soundness", cell, index,
                       slack, psi);
            } else {
                ++cell.sound;
            }

            const double tight = cell.polygamy ? -rep.gap : rep.gap;
            if (tight < -cfg.tightness_tolerance) {
                record(cell.polygamy ? "polygamy_tightness" : "monogamy_tightness", cell, index,
                       tight, psi);
            }
            if (!cell.polygamy) {
                const double ordering = rep.comparison_values.at("prior_linear") -
                                        rep.comparison_values.at("prior_weighted");
                if (ordering < -cfg.tightness_tolerance) {
                    record("prior_ordering", cell, index, ordering, psi);
                }
            }
        }
    }
    return out;
}

}  // namespace entbounds
