#include "entbounds/relations.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "entbounds/scalar_bounds.hpp"

namespace entbounds {

namespace {

constexpr double kPreconditionTol = 1e-12;
constexpr double kExponentConsistencyTol = 1e-12;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

void require_values(const std::vector<double>& values) {
    for (double e : values) {
        if (!std::isfinite(e) || e < 0.0) {
            throw std::invalid_argument("measure values must be finite and nonnegative");
        }
    }
}

// Suffix sums: sfx[i] = values[i] + ... + values.back(), sfx[size] = 0.
std::vector<double> suffix_sums(const std::vector<double>& values) {
    std::vector<double> sfx(values.size() + 1, 0.0);
    for (std::size_t i = values.size(); i-- > 0;) {
        sfx[i] = sfx[i + 1] + values[i];
    }
    return sfx;
}

// coeff * base^expnt * factor, defined as 0 when factor or base vanishes.
// Needed on the polygamy side where expnt = v - 1 can be negative.
double guarded_term(double coeff, double base, double expnt, double factor) {
    if (factor == 0.0 || base == 0.0 || coeff == 0.0) return 0.0;
    return coeff * std::pow(base, expnt) * factor;
}

int select_branch(double e1, double e2, double k) {
    const double slack1 = e1 - k * e2;
    const double slack2 = e2 - k * e1;
    // Exactly satisfied branches win over tolerance-level passes; ties take
    // branch 1.
    if (slack1 >= 0.0) return 1;
    if (slack2 >= 0.0) return 2;
    if (slack1 >= -kPreconditionTol) return 1;
    if (slack2 >= -kPreconditionTol) return 2;
    return 0;
}

}  // namespace

BoundParams BoundParams::monogamy(double mu, double k, double k_prime, int m, int n_parties,
                                  double alpha) {
    BoundParams p;
    p.alpha = alpha;
    p.mu = mu;
    p.eta = mu * alpha;
    p.k = k;
    p.k_prime = k_prime;
    p.m = m;
    p.n_parties = n_parties;
    p.validate_monogamy();
    return p;
}

BoundParams BoundParams::polygamy(double v, double k, double k_prime, int m, int n_parties,
                                  double beta) {
    BoundParams p;
    p.beta = beta;
    p.v = v;
    p.gamma = v * beta;
    p.k = k;
    p.k_prime = k_prime;
    p.m = m;
    p.n_parties = n_parties;
    p.validate_polygamy();
    return p;
}

void BoundParams::validate_monogamy() const {
    require(std::isfinite(mu) && mu >= 3.0, "monogamy bounds require mu = eta/alpha >= 3");
    require(std::isfinite(k) && k >= 1.0, "k must satisfy k >= 1");
    require(std::isfinite(k_prime) && k_prime >= 1.0, "k' must satisfy k' >= 1");
    require(alpha > 0.0, "alpha must be positive");
    require(std::abs(mu * alpha - eta) <= kExponentConsistencyTol * std::max(1.0, std::abs(eta)),
            "eta must equal mu * alpha");
    require(n_parties >= 3, "bounds require at least three parties");
}

void BoundParams::validate_polygamy() const {
    require(std::isfinite(v) && v >= 0.0 && v <= 1.0, "polygamy bounds require v in [0, 1]");
    require(std::isfinite(k) && k >= 1.0, "k must satisfy k >= 1");
    require(std::isfinite(k_prime) && k_prime >= 1.0, "k' must satisfy k' >= 1");
    require(beta > 0.0, "beta must be positive");
    require(std::abs(v * beta - gamma) <= kExponentConsistencyTol * std::max(1.0, std::abs(gamma)),
            "gamma must equal v * beta");
    require(n_parties >= 3, "bounds require at least three parties");
}

PreconditionReport check_dominance_preconditions(const MeasureVector& values,
                                                 const BoundParams& params) {
    require_values(values.values);
    const int n = params.n_parties;
    if (static_cast<int>(values.values.size()) != n - 1) {
        throw std::invalid_argument("measure vector length must equal n_parties - 1");
    }
    require(params.k >= 1.0 && params.k_prime >= 1.0, "k and k' must satisfy k >= 1");

    const auto sfx = suffix_sums(values.values);
    const int head_end = std::clamp(params.m, 0, n - 2);  // 0-based exclusive

    PreconditionReport report;
    for (int i = 0; i < head_end; ++i) {
        const double slack = values.values[i] - params.k * sfx[i + 1];
        report.slacks.push_back({static_cast<std::size_t>(i + 1), true, slack});
    }
    for (int j = head_end; j < n - 2; ++j) {
        const double slack = sfx[j + 1] - params.k_prime * values.values[j];
        report.slacks.push_back({static_cast<std::size_t>(j + 1), false, slack});
    }
    for (const auto& s : report.slacks) {
        if (s.slack < -kPreconditionTol) {
            report.ok = false;
            if (!report.first_failing) report.first_failing = s.index;
        }
    }
    return report;
}

BoundReport monogamy_lower_bound_tripartite(double e1, double e2, const BoundParams& params) {
    params.validate_monogamy();
    require_values({e1, e2});
    const double mu = params.mu;
    const double k = params.k;

    BoundReport report;
    report.precondition_detail = {{1, true, e1 - k * e2}, {2, true, e2 - k * e1}};

    if (e1 == 0.0 && e2 == 0.0) {
        report.bound_value = 0.0;
        report.branch = 1;
        report.comparison_values = {{"prior_weighted", 0.0}, {"prior_linear", 0.0}};
        report.gap = 0.0;
        return report;
    }

    const int branch = select_branch(e1, e2, k);
    if (branch == 0) {
        report.precondition_ok = false;
        report.bound_value = kNaN;
        report.gap = kNaN;
        return report;
    }
    const double dom = branch == 1 ? e1 : e2;
    const double sub = branch == 1 ? e2 : e1;

    report.branch = branch;
    report.bound_value = std::pow(dom, mu) + mu * std::pow(dom, mu - 1.0) * sub +
                         0.5 * mu * (mu - 1.0) * std::pow(dom, mu - 2.0) * sub * sub +
                         lower_tail_coeff_quadratic(k, mu) * std::pow(sub, mu);
    const double weighted = prior_monogamy_bound_weighted(dom, sub, params);
    const double linear = prior_monogamy_bound_linear(dom, sub, params);
    report.comparison_values = {{"prior_weighted", weighted}, {"prior_linear", linear}};
    report.gap = report.bound_value - std::max(weighted, linear);
    return report;
}

BoundReport monogamy_lower_bound_partitioned(const MeasureVector& values,
                                             const BoundParams& params) {
    params.validate_monogamy();
    const int n = params.n_parties;
    require(n >= 4, "the partitioned bound requires at least four parties");
    require(params.m >= 1 && params.m <= n - 3, "m must lie in [1, n_parties - 3]");

    const auto pre = check_dominance_preconditions(values, params);
    BoundReport report;
    report.precondition_detail = pre.slacks;
    if (!pre.ok) {
        report.precondition_ok = false;
        report.bound_value = kNaN;
        report.gap = kNaN;
        return report;
    }

    const auto& e = values.values;
    const auto sfx = suffix_sums(e);
    const double mu = params.mu;
    const double w = lower_tail_coeff_quadratic(params.k, mu);
    const double w_prime = lower_tail_coeff_quadratic(params.k_prime, mu);
    const double gap_prime = power_gap_coeff(params.k_prime, mu);
    const int m = params.m;

    double bound = 0.0;
    double w_pow = 1.0;
    for (int i = 0; i < m; ++i) {
        const double tail = sfx[i + 1];
        bound += w_pow * (std::pow(e[i], mu) + mu * std::pow(e[i], mu - 1.0) * tail +
                          0.5 * mu * (mu - 1.0) * std::pow(e[i], mu - 2.0) * tail * tail);
        w_pow *= w;
    }
    double middle = 0.0;
    for (int j = m; j <= n - 4; ++j) {
        middle += std::pow(e[j], mu);
    }
    bound += w_pow * gap_prime * middle;

    const double ea = e[n - 3];
    const double eb = e[n - 2];
    bound += w_pow * (w_prime * std::pow(ea, mu) +
                      0.5 * mu * (mu - 1.0) * ea * ea * std::pow(eb, mu - 2.0) +
                      mu * ea * std::pow(eb, mu - 1.0) + std::pow(eb, mu));
    report.bound_value = bound;
    return report;
}

BoundReport monogamy_lower_bound_ordered(const MeasureVector& values, const BoundParams& params) {
    params.validate_monogamy();
    const int n = params.n_parties;

    BoundParams head_only = params;
    head_only.m = n - 2;  // every condition uses k against its tail
    const auto pre = check_dominance_preconditions(values, head_only);

    BoundReport report;
    report.precondition_detail = pre.slacks;
    if (!pre.ok) {
        report.precondition_ok = false;
        report.bound_value = kNaN;
        report.gap = kNaN;
        return report;
    }

    const auto& e = values.values;
    const auto sfx = suffix_sums(e);
    const double mu = params.mu;
    const double w = lower_tail_coeff_quadratic(params.k, mu);

    double bound = 0.0;
    double w_pow = 1.0;
    for (int i = 0; i + 1 < n - 1; ++i) {
        const double tail = sfx[i + 1];
        bound += w_pow * (std::pow(e[i], mu) + mu * std::pow(e[i], mu - 1.0) * tail +
                          0.5 * mu * (mu - 1.0) * std::pow(e[i], mu - 2.0) * tail * tail);
        w_pow *= w;
    }
    bound += w_pow * std::pow(e[n - 2], mu);
    report.bound_value = bound;
    return report;
}

BoundReport polygamy_upper_bound_tripartite(double e1, double e2, const BoundParams& params) {
    params.validate_polygamy();
    require_values({e1, e2});
    const double v = params.v;
    const double k = params.k;

    BoundReport report;
    report.precondition_detail = {{1, true, e1 - k * e2}, {2, true, e2 - k * e1}};

    if (e1 == 0.0 && e2 == 0.0) {
        report.bound_value = v == 0.0 ? 1.0 : 0.0;
        report.branch = 1;
        report.comparison_values = {{"prior_damped", report.bound_value}};
        report.gap = 0.0;
        return report;
    }

    const int branch = select_branch(e1, e2, k);
    if (branch == 0) {
        report.precondition_ok = false;
        report.bound_value = kNaN;
        report.gap = kNaN;
        return report;
    }
    const double dom = branch == 1 ? e1 : e2;
    const double sub = branch == 1 ? e2 : e1;

    report.branch = branch;
    report.bound_value = std::pow(dom, v) + guarded_term(k * v / (k + 1.0), dom, v - 1.0, sub) +
                         upper_tail_coeff(k, v) * std::pow(sub, v);
    const double damped = prior_polygamy_bound_damped(dom, sub, params);
    report.comparison_values = {{"prior_damped", damped}};
    report.gap = report.bound_value - damped;
    return report;
}

BoundReport polygamy_upper_bound_partitioned(const MeasureVector& values,
                                             const BoundParams& params) {
    params.validate_polygamy();
    const int n = params.n_parties;
    require(n >= 4, "the partitioned bound requires at least four parties");
    require(params.m >= 1 && params.m <= n - 3, "m must lie in [1, n_parties - 3]");

    const auto pre = check_dominance_preconditions(values, params);
    BoundReport report;
    report.precondition_detail = pre.slacks;
    if (!pre.ok) {
        report.precondition_ok = false;
        report.bound_value = kNaN;
        report.gap = kNaN;
        return report;
    }

    const auto& e = values.values;
    const auto sfx = suffix_sums(e);
    const double v = params.v;
    const double k = params.k;
    const double kp = params.k_prime;
    const double delta = upper_tail_coeff(k, v);
    const double delta_prime = upper_tail_coeff(kp, v);
    const double gap_prime = power_gap_coeff(kp, v);
    const int m = params.m;

    double bound = 0.0;
    double d_pow = 1.0;
    for (int i = 0; i < m; ++i) {
        bound += d_pow * (std::pow(e[i], v) +
                          guarded_term(k * v / (k + 1.0), e[i], v - 1.0, sfx[i + 1]));
        d_pow *= delta;
    }
    double middle = 0.0;
    for (int j = m; j <= n - 4; ++j) {
        middle += std::pow(e[j], v);
    }
    bound += d_pow * gap_prime * middle;

    const double ea = e[n - 3];
    const double eb = e[n - 2];
    bound += d_pow * (delta_prime * std::pow(ea, v) +
                      guarded_term(kp * v / (kp + 1.0), eb, v - 1.0, ea) + std::pow(eb, v));
    report.bound_value = bound;
    return report;
}

double prior_monogamy_bound_weighted(double e1, double e2, const BoundParams& params) {
    params.validate_monogamy();
    require_values({e1, e2});
    require(e1 - params.k * e2 >= -kPreconditionTol, "requires e1 >= k * e2");
    const double mu = params.mu;
    const double k = params.k;
    return std::pow(e1, mu) + k * mu / (k + 1.0) * std::pow(e1, mu - 1.0) * e2 +
           (std::pow(k + 1.0, mu) - (1.0 + mu / (k + 1.0)) * std::pow(k, mu)) * std::pow(e2, mu);
}

double prior_monogamy_bound_linear(double e1, double e2, const BoundParams& params) {
    params.validate_monogamy();
    require_values({e1, e2});
    require(e1 - params.k * e2 >= -kPreconditionTol, "requires e1 >= k * e2");
    const double mu = params.mu;
    return std::pow(e1, mu) + mu * std::pow(e1, mu - 1.0) * e2 +
           lower_tail_coeff_linear(params.k, mu) * std::pow(e2, mu);
}

double prior_polygamy_bound_damped(double e1, double e2, const BoundParams& params) {
    params.validate_polygamy();
    require_values({e1, e2});
    require(e1 - params.k * e2 >= -kPreconditionTol, "requires e1 >= k * e2");
    const double v = params.v;
    const double k = params.k;
    if (e1 == 0.0) {
        return v == 0.0 ? 1.0 : 0.0;
    }
    return std::pow(e1, v) +
           guarded_term(k * k * v / ((k + 1.0) * (k + 1.0)), e1, v - 1.0, e2) +
           upper_tail_coeff_damped(k, v) * std::pow(e2, v);
}

}  // namespace entbounds
