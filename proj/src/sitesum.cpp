#include "sitesum.hpp"

#include <cmath>

namespace hetperf {

double site_sum_pow(const double* xs, const double* ys, std::size_t n,
                    double px, double py, double exponent) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - px;
        const double dy = ys[i] - py;
        acc += std::pow(dx * dx + dy * dy, exponent);
    }
    return acc;
}

} // namespace hetperf
