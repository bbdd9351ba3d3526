#pragma once

#include <array>

namespace entbounds {

/// Point in the shared domain of the scalar power-bound inequalities:
/// 0 <= x <= 1/k with k >= 1, exponents mu (>= 1, 2 or 3 depending on the
/// bound) and v in [0, 1]. Throughout, 0^0 = 1.
struct LemmaPoint {
    double x = 0.0;
    double k = 1.0;
    double mu = 3.0;
    double v = 1.0;
};

// Coefficients of the x^exponent tail terms.
double lower_tail_coeff_linear(double k, double mu);     // (k+1)^mu - mu k^(mu-1) - k^mu
double lower_tail_coeff_quadratic(double k, double mu);  // ... - mu(mu-1)/2 k^(mu-2) ...
double upper_tail_coeff(double k, double v);             // (k+1)^v - (v/(k+1)+1) k^v
double upper_tail_coeff_damped(double k, double v);      // (k+1)^v - (kv/(k+1)^2+1) k^v
double power_gap_coeff(double k, double p);              // (k+1)^p - k^p

/// Four lower bounds on (1+x)^mu, strongest first (mu >= 1):
/// weighted-linear + tail, gap tail, doubling tail, linear tail.
std::array<double, 4> power_lower_chain(const LemmaPoint& p);

/// Four upper bounds on (1+x)^v, tightest first (0 <= v <= 1).
std::array<double, 4> power_upper_chain(const LemmaPoint& p);

/// 1 + mu x + lower_tail_coeff_linear(k, mu) x^mu, a lower bound for mu >= 2.
double power_lower_linear(const LemmaPoint& p);

/// k = 1 lower bound with quadratic term, valid on 0 <= x <= 1, mu >= 3.
double power_lower_quadratic_unit(double x, double mu);

/// 1 + mu x + mu(mu-1)/2 x^2 + lower_tail_coeff_quadratic(k, mu) x^mu, mu >= 3.
double power_lower_quadratic(const LemmaPoint& p);

/// k = 1 upper bound 1 + v/2 x + (2^v - v/2 - 1) x^v on 0 <= x <= 1.
double power_upper_weighted_unit(double x, double v);

/// 1 + kv/(k+1) x + upper_tail_coeff(k, v) x^v, an upper bound on (1+x)^v.
double power_upper_weighted(const LemmaPoint& p);

/// 1 + k^2 v/(k+1)^2 x + upper_tail_coeff_damped(k, v) x^v.
double power_upper_damped(const LemmaPoint& p);

/// Non-increasing ladder of lower bounds (mu >= 3):
/// { quadratic, linear, 1 + power_gap_coeff x^mu }.
std::array<double, 3> lower_bound_ladder(const LemmaPoint& p);

/// Non-decreasing ladder of upper bounds (0 <= v <= 1):
/// { weighted, damped, 1 + power_gap_coeff x^v }.
std::array<double, 3> upper_bound_ladder(const LemmaPoint& p);

}  // namespace entbounds
