#pragma once

#include <functional>
#include <span>

namespace hetperf {

struct QuadratureSpec {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    int max_subdivisions = 2048;
};

struct QuadratureResult {
    double value = 0.0;
    double error_bound = 0.0;
    bool converged = true;
    int subdivisions = 0;
};

/// Riemann zeta for real s > 1. Truncated series plus Euler-Maclaurin tail.
double riemann_zeta(double s);

/// Hurwitz zeta sum_{n>=0} (n+q)^-s for s > 1, 0 < q <= 1.
double hurwitz_zeta(double s, double q);

/// Modified Bessel I0 by power series; rejects x < 0 and x > 700 (overflow).
double bessel_i0(double x);

/// exp(-x) * I0(x); stable for arbitrarily large x >= 0.
double bessel_i0_scaled(double x);

/// Adaptive Gauss-Kronrod (7,15) integration of f over [a, b].
/// Non-convergence is reported in the result, not thrown.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

/// Same, but pre-splits [a, b] at the given interior breakpoints (known kinks
/// or sharp peaks). Breakpoints outside (a, b) are ignored.
QuadratureResult integrate_panels(const std::function<double(double)>& f, double a, double b,
                                  std::span<const double> breakpoints,
                                  const QuadratureSpec& spec = {});

struct InvertResult {
    double x = 0.0;
    bool clamped = false;
};

/// Solve f(x) = y for increasing f on [lo, hi] by bracketing bisection.
/// y outside [f(lo), f(hi)] clamps to the matching endpoint.
InvertResult invert_monotone(const std::function<double(double)>& f, double y,
                             double lo, double hi);

/// Standard normal quantile (inverse CDF), p in (0, 1).
double normal_quantile(double p);

} // namespace hetperf
