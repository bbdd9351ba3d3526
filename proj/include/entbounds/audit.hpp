#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "entbounds/relations.hpp"

namespace entbounds {

enum class ReportFormat { csv, json };

/// Knobs for the sweep and audit drivers. Defaults are the desk-scale
/// settings used by the acceptance suite; everything is overridable through
/// a flat key=value config file or command-line flags.
struct AuditConfig {
    std::uint64_t seed = 1;
    std::size_t samples = 10000;          ///< Haar states in the state audit
    std::size_t random_points = 1000000;  ///< random points per scalar inequality
    std::size_t grid_x_points = 200;
    std::size_t grid_exp_points = 200;
    std::vector<double> grid_k_values = {1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
    double tolerance = 1e-11;            ///< scalar sweep / ordering slack floor
    double soundness_tolerance = 1e-9;   ///< state-audit slack floor
    double endpoint_tolerance = 1e-12;   ///< endpoint-equality floor
    double tightness_tolerance = 1e-12;  ///< bound-vs-prior ordering floor
    double surface_k_step = 0.05;
    double surface_mu_step = 0.1;
    double surface_v_step = 0.1;
    std::vector<double> audit_k_values = {1.0, 1.5, 2.0};
    std::vector<double> audit_mu_values = {3.0, 4.0, 5.0};
    std::vector<double> audit_v_values = {0.3, 0.5, 0.8, 1.0};
    std::string out_path = ".";
    ReportFormat format = ReportFormat::csv;

    /// Applies one key=value override; throws std::invalid_argument for
    /// unknown keys or malformed values.
    void set(const std::string& key, const std::string& value);

    /// Loads a flat key=value file (# starts a comment).
    static AuditConfig from_file(const std::string& path);

    void validate() const;
};

struct SweepViolation {
    std::string check;
    double x = 0.0;
    double k = 0.0;
    double exponent = 0.0;
    double slack = 0.0;
    std::uint64_t sample_index = 0;
};

struct InequalityReport {
    std::string name;
    std::size_t points = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
    double worst_x = 0.0;
    double worst_k = 0.0;
    double worst_exponent = 0.0;
    double tolerance = 0.0;
    std::size_t violation_count = 0;

    bool ok() const { return violation_count == 0; }
};

struct ScalarBoundsAudit {
    std::vector<InequalityReport> reports;
    std::vector<SweepViolation> violations;  ///< capped sample of offenders
    bool ok = true;
};

/// Grid plus randomized sweeps of every scalar inequality and both
/// comparison ladders, including the x = 1/k endpoint equalities.
ScalarBoundsAudit run_scalar_bounds_audit(const AuditConfig& cfg);

struct MeasureCheck {
    std::string name;
    double computed = 0.0;
    double expected = 0.0;
    double abs_error = 0.0;
};

/// The six benchmark measure values against their closed forms.
std::vector<MeasureCheck> run_benchmark_measures();

struct MonogamySurfaceRow {
    double k = 0.0;
    double mu = 0.0;
    double prior_weighted = 0.0;
    double prior_linear = 0.0;
    double bound = 0.0;
    double lhs = 0.0;
};

struct MonogamySurfaceResult {
    std::vector<MonogamySurfaceRow> rows;
    std::vector<SweepViolation> violations;
    double equality_gap = 0.0;  ///< |bound - lhs| at (k = 1, mu = 3)
    bool ok = true;
};

/// Lower-bound comparison surface for the monogamy benchmark state over
/// k in [1, 5/2] and mu in [3, 10].
MonogamySurfaceResult run_monogamy_surface(const AuditConfig& cfg);

struct PolygamySurfaceRow {
    double k = 0.0;
    double v = 0.0;
    double prior_damped = 0.0;
    double bound = 0.0;
    double difference = 0.0;  ///< prior minus ours, expected nonnegative
};

struct PolygamySurfaceResult {
    std::vector<PolygamySurfaceRow> rows;
    std::vector<SweepViolation> violations;
    bool ok = true;
};

/// Upper-bound comparison surface for the polygamy benchmark state over
/// k in [1, 37/17] and v in [0, 1].
PolygamySurfaceResult run_polygamy_surface(const AuditConfig& cfg);

struct StateAuditCell {
    bool polygamy = false;
    double k = 1.0;
    double exponent = 3.0;  ///< mu or v
    std::size_t applicable = 0;
    std::size_t sound = 0;
    std::size_t violations = 0;
    double worst_slack = std::numeric_limits<double>::infinity();
};

struct StateAuditViolation {
    std::string check;
    bool polygamy = false;
    double k = 0.0;
    double exponent = 0.0;
    std::uint64_t sample_index = 0;
    double slack = 0.0;
    std::vector<std::complex<double>> amplitudes;
};

struct StateAudit {
    std::vector<StateAuditCell> cells;
    std::vector<StateAuditViolation> violations;
    double ckw_min_slack = std::numeric_limits<double>::infinity();
    std::size_t samples = 0;
    std::uint64_t seed = 0;
    std::string generator;
    bool ok = true;
};

/// Haar-state audit: soundness and tightness of the tripartite bounds on
/// three-qubit states, plus the squared-concurrence sharing baseline.
StateAudit run_state_audit(const AuditConfig& cfg);

}  // namespace entbounds
