#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace entbounds {

/// Exponent and partition parameters shared by the bound evaluators.
/// Base exponents alpha/beta track which power of the measure the caller's
/// values already carry; the evaluators work in mu = eta/alpha (monogamy)
/// and v = gamma/beta (polygamy).
struct BoundParams {
    double alpha = 1.0;
    double beta = 1.0;
    double eta = 3.0;
    double gamma = 1.0;
    double mu = 3.0;  ///< = eta/alpha, >= 3
    double v = 1.0;   ///< = gamma/beta, in [0, 1]
    double k = 1.0;
    double k_prime = 1.0;
    int m = 1;
    int n_parties = 3;

    static BoundParams monogamy(double mu, double k = 1.0, double k_prime = 1.0, int m = 1,
                                int n_parties = 3, double alpha = 1.0);
    static BoundParams polygamy(double v, double k = 1.0, double k_prime = 1.0, int m = 1,
                                int n_parties = 3, double beta = 1.0);

    void validate_monogamy() const;
    void validate_polygamy() const;
};

enum class MeasureVectorKind { monogamy_base, polygamy_base };

/// Ordered one-to-one measure powers feeding the multi-party bounds:
/// entry i holds E^alpha(AB_{i+1}) or Ea^beta(AB_{i+1}).
struct MeasureVector {
    std::vector<double> values;
    MeasureVectorKind kind = MeasureVectorKind::monogamy_base;
};

struct PreconditionSlack {
    std::size_t index = 0;  ///< 1-based party index of the condition
    bool head = true;       ///< head: e_i >= k * tail; tail: k' * e_j <= tail
    double slack = 0.0;
};

struct PreconditionReport {
    bool ok = true;
    std::vector<PreconditionSlack> slacks;
    std::optional<std::size_t> first_failing;
};

struct BoundReport {
    double bound_value = 0.0;
    bool precondition_ok = true;
    std::vector<PreconditionSlack> precondition_detail;
    std::map<std::string, double> comparison_values;
    double gap = 0.0;  ///< bound minus the tightest comparison value
    int branch = 0;    ///< 1 or 2 for the tripartite bounds
};

/// Checks the ordering assumptions: entries 1..m dominate their tails by
/// factor k, entries m+1..N-2 are dominated by their tails by factor k'.
/// Slack below -1e-12 fails.
PreconditionReport check_dominance_preconditions(const MeasureVector& values,
                                                 const BoundParams& params);

/// Tripartite monogamy lower bound on E^eta(A|B1B2) from the two marginal
/// powers e1, e2 (branch picked by which side dominates; ties take e1).
BoundReport monogamy_lower_bound_tripartite(double e1, double e2, const BoundParams& params);

/// N-party monogamy lower bound with a dominated middle block: head entries
/// 1..m, gap-weighted entries m+1..N-3, and an explicit final pair.
BoundReport monogamy_lower_bound_partitioned(const MeasureVector& values,
                                             const BoundParams& params);

/// N-party monogamy lower bound when every entry dominates its tail.
BoundReport monogamy_lower_bound_ordered(const MeasureVector& values, const BoundParams& params);

/// Tripartite polygamy upper bound on Ea^gamma(A|B1B2).
BoundReport polygamy_upper_bound_tripartite(double e1, double e2, const BoundParams& params);

/// N-party polygamy upper bound mirroring the partitioned monogamy layout.
BoundReport polygamy_upper_bound_partitioned(const MeasureVector& values,
                                             const BoundParams& params);

/// Previously known tripartite lower bound built on the weighted-linear
/// kernel; dominated by monogamy_lower_bound_tripartite on shared inputs.
double prior_monogamy_bound_weighted(double e1, double e2, const BoundParams& params);

/// Previously known tripartite lower bound built on the linear kernel; sits
/// between the weighted prior and the quadratic-kernel bound.
double prior_monogamy_bound_linear(double e1, double e2, const BoundParams& params);

/// Previously known tripartite upper bound built on the damped kernel;
/// dominates polygamy_upper_bound_tripartite on shared inputs.
double prior_polygamy_bound_damped(double e1, double e2, const BoundParams& params);

}  // namespace entbounds
