#include "entbounds/scalar_bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace entbounds {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw std::domain_error(msg);
}

void require_xk(double x, double k) {
    require(std::isfinite(x) && std::isfinite(k), "x and k must be finite");
    require(k >= 1.0, "k must satisfy k >= 1");
    require(x >= 0.0 && x <= 1.0 / k, "x must lie in [0, 1/k]");
}

void require_mu(double mu, double lo, const char* msg) {
    require(std::isfinite(mu) && mu >= lo, msg);
}

void require_v(double v) {
    require(std::isfinite(v) && v >= 0.0 && v <= 1.0, "v must lie in [0, 1]");
}

}  // namespace

double lower_tail_coeff_linear(double k, double mu) {
    return std::pow(k + 1.0, mu) - mu * std::pow(k, mu - 1.0) - std::pow(k, mu);
}

double lower_tail_coeff_quadratic(double k, double mu) {
    return std::pow(k + 1.0, mu) - mu * std::pow(k, mu - 1.0) -
           0.5 * mu * (mu - 1.0) * std::pow(k, mu - 2.0) - std::pow(k, mu);
}

double upper_tail_coeff(double k, double v) {
    return std::pow(k + 1.0, v) - (v / (k + 1.0) + 1.0) * std::pow(k, v);
}

double upper_tail_coeff_damped(double k, double v) {
    return std::pow(k + 1.0, v) - (k * v / ((k + 1.0) * (k + 1.0)) + 1.0) * std::pow(k, v);
}

double power_gap_coeff(double k, double p) {
    return std::pow(k + 1.0, p) - std::pow(k, p);
}

std::array<double, 4> power_lower_chain(const LemmaPoint& p) {
    require_xk(p.x, p.k);
    require_mu(p.mu, 1.0, "power_lower_chain requires mu >= 1");
    const double xmu = std::pow(p.x, p.mu);
    const double weighted = 1.0 + p.k * p.mu / (p.k + 1.0) * p.x +
                            (std::pow(p.k + 1.0, p.mu) -
                             (1.0 + p.mu / (p.k + 1.0)) * std::pow(p.k, p.mu)) *
                                xmu;
    const double gap = 1.0 + power_gap_coeff(p.k, p.mu) * xmu;
    const double doubling = 1.0 + (std::pow(2.0, p.mu) - 1.0) * xmu;
    const double linear = 1.0 + p.mu * xmu;
    return {weighted, gap, doubling, linear};
}

std::array<double, 4> power_upper_chain(const LemmaPoint& p) {
    require_xk(p.x, p.k);
    require_v(p.v);
    const double xv = std::pow(p.x, p.v);
    const double damped = 1.0 + p.k * p.k * p.v / ((p.k + 1.0) * (p.k + 1.0)) * p.x +
                          upper_tail_coeff_damped(p.k, p.v) * xv;
    const double gap = 1.0 + power_gap_coeff(p.k, p.v) * xv;
    const double doubling = 1.0 + (std::pow(2.0, p.v) - 1.0) * xv;
    const double linear = 1.0 + p.v * xv;
    return {damped, gap, doubling, linear};
}

double power_lower_linear(const LemmaPoint& p) {
    require_xk(p.x, p.k);
    require_mu(p.mu, 2.0, "power_lower_linear requires mu >= 2");
    return 1.0 + p.mu * p.x + lower_tail_coeff_linear(p.k, p.mu) * std::pow(p.x, p.mu);
}

double power_lower_quadratic_unit(double x, double mu) {
    require(std::isfinite(x) && x >= 0.0 && x <= 1.0, "x must lie in [0, 1]");
    require_mu(mu, 3.0, "power_lower_quadratic_unit requires mu >= 3");
    return 1.0 + mu * x + 0.5 * mu * (mu - 1.0) * x * x +
           (std::pow(2.0, mu) - 0.5 * mu * (mu + 1.0) - 1.0) * std::pow(x, mu);
}

double power_lower_quadratic(const LemmaPoint& p) {
    require_xk(p.x, p.k);
    require_mu(p.mu, 3.0, "power_lower_quadratic requires mu >= 3");
    return 1.0 + p.mu * p.x + 0.5 * p.mu * (p.mu - 1.0) * p.x * p.x +
           lower_tail_coeff_quadratic(p.k, p.mu) * std::pow(p.x, p.mu);
}

double power_upper_weighted_unit(double x, double v) {
    require(std::isfinite(x) && x >= 0.0 && x <= 1.0, "x must lie in [0, 1]");
    require_v(v);
    return 1.0 + 0.5 * v * x + (std::pow(2.0, v) - 0.5 * v - 1.0) * std::pow(x, v);
}

double power_upper_weighted(const LemmaPoint& p) {
    require_xk(p.x, p.k);
    require_v(p.v);
    return 1.0 + p.k * p.v / (p.k + 1.0) * p.x + upper_tail_coeff(p.k, p.v) * std::pow(p.x, p.v);
}

double power_upper_damped(const LemmaPoint& p) {
    require_xk(p.x, p.k);
    require_v(p.v);
    return 1.0 + p.k * p.k * p.v / ((p.k + 1.0) * (p.k + 1.0)) * p.x +
           upper_tail_coeff_damped(p.k, p.v) * std::pow(p.x, p.v);
}

std::array<double, 3> lower_bound_ladder(const LemmaPoint& p) {
    require_xk(p.x, p.k);
    require_mu(p.mu, 3.0, "lower_bound_ladder requires mu >= 3");
    return {power_lower_quadratic(p), power_lower_linear(p),
            1.0 + power_gap_coeff(p.k, p.mu) * std::pow(p.x, p.mu)};
}

std::array<double, 3> upper_bound_ladder(const LemmaPoint& p) {
    require_xk(p.x, p.k);
    require_v(p.v);
    return {power_upper_weighted(p), power_upper_damped(p),
            1.0 + power_gap_coeff(p.k, p.v) * std::pow(p.x, p.v)};
}

}  // namespace entbounds
