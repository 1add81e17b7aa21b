#pragma once

#include <cmath>

namespace specdet {

// Kahan-compensated accumulator. Also tracks the sum of absolute values so
// callers can turn the term count into a rounding-error estimate.
struct KahanAccumulator {
    double sum = 0.0;
    double compensation = 0.0;
    double abs_sum = 0.0;

    void add(double value) {
        abs_sum += std::abs(value);
        const double y = value - compensation;
        const double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }

    // Bound on accumulated rounding error: compensated summation keeps the
    // error at a few ulps of the absolute mass, independent of term count.
    double rounding_error() const {
        constexpr double eps = 2.2204460492503131e-16;
        return 4.0 * eps * abs_sum;
    }
};

} // namespace specdet
