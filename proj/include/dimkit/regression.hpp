#pragma once

#include <cmath>
#include <span>

#include "dimkit/errors.hpp"

namespace dimkit {

// Least-squares fit of log N against log(1/r); the intercept absorbs the
// covering constants, the slope is the scaling exponent.
struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    double max_residual = 0.0;
    double r_lo = 0.0;
    double r_hi = 0.0;
};

inline double least_squares_slope(std::span<const double> x, std::span<const double> y,
                                  double* intercept_out = nullptr,
                                  double* max_residual_out = nullptr) {
    const std::size_t n = x.size();
    if (n != y.size() || n < 2) throw_insufficient("least squares needs >= 2 points");
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxy = 0.0, sxx = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw_insufficient("least squares: degenerate abscissae");
    const double slope = sxy / sxx;
    const double intercept = my - slope * mx;
    if (intercept_out) *intercept_out = intercept;
    if (max_residual_out) {
        double mr = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            mr = std::max(mr, std::abs(y[i] - slope * x[i] - intercept));
        *max_residual_out = mr;
    }
    return slope;
}

}  // namespace dimkit
