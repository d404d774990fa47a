#pragma once

#include <cstdint>
#include <span>

#include "dimkit/covering.hpp"
#include "dimkit/point_cloud.hpp"
#include "dimkit/regression.hpp"
#include "dimkit/spectrum.hpp"

namespace dimkit {

// Box-dimension estimate: slope of log N_r vs log(1/r) over the profile's
// global scales (needs at least 4).
RegressionFit estimate_box(const CoveringProfile& profile);

// Convenience: geometric scale grid [r_min, r_min^(1/4)] on the cloud.
RegressionFit estimate_box(const PointCloud& cloud, double r_min,
                           double grid_ratio = 2.0);

struct SpectrumOptions {
    double grid_ratio = 2.0;       // geometric r-grid step
    double cap_exponent = 0.5;     // r sweeps [r_min, r_min^cap_exponent]
    std::size_t max_centers = 4096;
    uint64_t seed = 0;
};

// Assouad-spectrum estimate at each theta: localized counts
// sup_x N_r(B(x, r^theta)) over the r-grid, combined as
// min(max_r ratio, regression slope) and clamped to
// [box_estimate - 0.05, ambient d].
SpectrumCurve estimate_assouad_spectrum(const PointCloud& cloud,
                                        std::span<const double> theta_grid,
                                        double r_min,
                                        const SpectrumOptions& opt = {});

struct PhiOptions {
    double grid_ratio = 2.0;
    double min_scale_ratio = 4.0;  // require R/r >= this for a meaningful ratio
    std::size_t max_centers = 4096;
    uint64_t seed = 0;
};

// phi-Assouad estimate: max over R in the grid and r in [resolution, phi(R)]
// of log(sup_x N_r(B(x,R))) / log(R/r), clamped to [0, ambient d].
double estimate_phi_assouad(const PointCloud& cloud, const PhiFunction& phi,
                            std::span<const double> R_grid,
                            const PhiOptions& opt = {});

// Intermediate-dimension upper estimate (1-D): for each r, bisect the
// exponent where the minimal cover cost over diameters [r, r^theta] crosses
// 1, then extrapolate the per-scale exponents in 1/log(1/r) to the limit.
double estimate_intermediate_upper(std::span<const double> sorted_points, double theta,
                                   std::span<const double> r_list);

// Intermediate-dimension lower estimate (1-D): mass-distribution route; for
// each r, the largest exponent for which a measure of unit mass fits under
// the Frostman constraint mu(U) <= |U|^s on the diameter band, found by a
// greedy packing dual to the covering program.  Never exceeds the upper
// estimate beyond bisection slack.
double estimate_intermediate_lower(const PointCloud& cloud, double theta,
                                   std::span<const double> r_list);

enum class EstimatorKind { AssouadSpectrum, IntermediateUpper, IntermediateLower };

struct SweepParams {
    double r_min = 0.0;                 // spectrum: grid start (0 -> resolution)
    std::vector<double> r_list;         // intermediate estimators
    SpectrumOptions spectrum;
};

SpectrumCurve theta_sweep(const PointCloud& cloud, EstimatorKind which,
                          std::span<const double> theta_grid, const SweepParams& params);

}  // namespace dimkit
