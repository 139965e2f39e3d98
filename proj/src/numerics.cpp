#include "hetperf/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace hetperf {

namespace {

constexpr int kZetaTerms = 100000;

// Direct series through N terms, then Euler-Maclaurin: integral tail,
// half-term, and the first Bernoulli correction. For s not huge and
// N = 1e5 the truncation error is far below 1e-12 relative.
double zeta_em(double s, double q) {
    double sum = 0.0;
    for (int n = kZetaTerms - 1; n >= 0; --n) // ascending magnitude
        sum += std::pow(n + q, -s);
    const double nq = kZetaTerms + q;
    sum += std::pow(nq, 1.0 - s) / (s - 1.0);
    sum += 0.5 * std::pow(nq, -s);
    sum += s / 12.0 * std::pow(nq, -s - 1.0);
    return sum;
}

} // namespace

double riemann_zeta(double s) {
    if (!(s > 1.0))
        throw std::invalid_argument("riemann_zeta: require s > 1");
    return zeta_em(s, 1.0); // sum_{n>=1} n^-s == Hurwitz with q = 1
}

double hurwitz_zeta(double s, double q) {
    if (!(s > 1.0))
        throw std::invalid_argument("hurwitz_zeta: require s > 1");
    if (!(q > 0.0) || !(q <= 1.0))
        throw std::invalid_argument("hurwitz_zeta: require 0 < q <= 1");
    return zeta_em(s, q);
}

namespace {

// Power series sum_k (x^2/4)^k / (k!)^2, shared by both I0 variants.
double i0_series(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 1000; ++k) {
        term *= q / (double(k) * double(k));
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum;
}

} // namespace

double bessel_i0(double x) {
    if (x < 0.0 || x > 700.0 || !std::isfinite(x))
        throw std::invalid_argument("bessel_i0: require 0 <= x <= 700");
    return i0_series(x);
}

double bessel_i0_scaled(double x) {
    if (x < 0.0 || !std::isfinite(x))
        throw std::invalid_argument("bessel_i0_scaled: require x >= 0");
    if (x <= 50.0)
        return std::exp(-x) * i0_series(x);
    // Asymptotic expansion: e^-x I0(x) ~ (2 pi x)^-1/2 sum_k ((2k-1)!!)^2 / (k! (8x)^k).
    // Terms shrink until ~k = 4x; truncate at the smallest term.
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 40; ++k) {
        const double tk = 2.0 * k - 1.0;
        const double next = term * tk * tk / (8.0 * x * k);
        if (next >= term)
            break;
        term = next;
        sum += term;
        if (term < sum * 1e-17)
            break;
    }
    return sum / std::sqrt(2.0 * M_PI * x);
}

namespace {

// Gauss-Kronrod (7,15) abscissae and weights on [-1, 1] (positive half).
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.0};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;
    double error;
};

Panel gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double resk = kWgk[7] * fc;
    double resg = kWg[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kXgk[i];
        const double f1 = f(c - dx);
        const double f2 = f(c + dx);
        resk += kWgk[i] * (f1 + f2);
        if (i % 2 == 1)
            resg += kWg[i / 2] * (f1 + f2);
    }
    return {a, b, resk * h, std::abs(resk - resg) * h};
}

QuadratureResult adaptive(const std::function<double(double)>& f,
                          std::vector<Panel> panels, const QuadratureSpec& spec) {
    // Global strategy: repeatedly bisect the panel with the largest error
    // estimate until the summed bound meets the tolerance or the panel
    // budget runs out. Ordered comparisons keep the result deterministic.
    auto worse = [](const Panel& p, const Panel& q) { return p.error < q.error; };
    std::make_heap(panels.begin(), panels.end(), worse);

    QuadratureResult out;
    const double span = panels.empty() ? 0.0
        : panels.back().b - panels.front().a; // panels arrive ordered
    auto totals = [&] {
        double v = 0.0, e = 0.0;
        for (const Panel& p : panels) {
            v += p.value;
            e += p.error;
        }
        out.value = v;
        out.error_bound = e;
        out.subdivisions = int(panels.size());
        return e <= std::max(spec.abs_tol, spec.rel_tol * std::abs(v));
    };

    while (!totals()) {
        if (int(panels.size()) >= spec.max_subdivisions) {
            out.converged = false;
            return out;
        }
        std::pop_heap(panels.begin(), panels.end(), worse);
        const Panel top = panels.back();
        panels.pop_back();
        const double mid = 0.5 * (top.a + top.b);
        if (!(top.b - top.a > std::abs(span) * 1e-15)) {
            // Interval too narrow to split further; keep its estimate.
            panels.push_back(top);
            out.converged = false;
            totals();
            return out;
        }
        panels.push_back(gk15(f, top.a, mid));
        std::push_heap(panels.begin(), panels.end(), worse);
        panels.push_back(gk15(f, mid, top.b));
        std::push_heap(panels.begin(), panels.end(), worse);
    }
    out.converged = true;
    return out;
}

} // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
    return integrate_panels(f, a, b, {}, spec);
}

QuadratureResult integrate_panels(const std::function<double(double)>& f, double a, double b,
                                  std::span<const double> breakpoints,
                                  const QuadratureSpec& spec) {
    if (!(a <= b))
        throw std::invalid_argument("integrate: require a <= b");
    if (a == b)
        return {0.0, 0.0, true, 0};

    std::vector<double> edges;
    edges.push_back(a);
    for (double x : breakpoints)
        if (x > a && x < b)
            edges.push_back(x);
    edges.push_back(b);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    if (int(edges.size()) - 1 > spec.max_subdivisions)
        throw std::invalid_argument("integrate: more breakpoints than panel budget");

    std::vector<Panel> panels;
    panels.reserve(edges.size() - 1);
    for (size_t i = 0; i + 1 < edges.size(); ++i)
        panels.push_back(gk15(f, edges[i], edges[i + 1]));
    return adaptive(f, std::move(panels), spec);
}

InvertResult invert_monotone(const std::function<double(double)>& f, double y,
                             double lo, double hi) {
    if (!(lo <= hi))
        throw std::invalid_argument("invert_monotone: require lo <= hi");
    double flo = f(lo), fhi = f(hi);
    if (flo > fhi)
        throw std::invalid_argument("invert_monotone: f not increasing on bracket");
    if (y <= flo)
        return {lo, y < flo};
    if (y >= fhi)
        return {hi, y > fhi};
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
            break; // interval collapsed to adjacent doubles
        if (f(mid) < y)
            lo = mid;
        else
            hi = mid;
    }
    return {0.5 * (lo + hi), false};
}

double normal_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0))
        throw std::invalid_argument("normal_quantile: require 0 < p < 1");
    // Acklam's rational approximation, then one Halley polish against erfc.
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double x;
    if (p < plow) {
        const double q = std::sqrt(-2.0 * std::log(p));
        x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    } else if (p <= 1.0 - plow) {
        const double q = p - 0.5;
        const double r = q * q;
        x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
            (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    } else {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
            ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double e = 0.5 * std::erfc(-x / std::sqrt(2.0)) - p;
    const double u = e * std::sqrt(2.0 * M_PI) * std::exp(0.5 * x * x);
    return x - u / (1.0 + 0.5 * x * u);
}

} // namespace hetperf
