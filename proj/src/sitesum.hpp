#pragma once

#include <cstddef>

namespace hetperf {

// sum_i (dx_i^2 + dy_i^2)^exponent over the site list; hot loop of the
// Monte Carlo kernel, kept in its own translation unit so it can be built
// with aggressive vectorization flags without touching the rest.
double site_sum_pow(const double* xs, const double* ys, std::size_t n,
                    double px, double py, double exponent);

} // namespace hetperf
