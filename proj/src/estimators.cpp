#include "dimkit/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "dimkit/cover_cost.hpp"
#include "dimkit/errors.hpp"

namespace dimkit {

namespace {

std::vector<double> geometric_grid(double lo, double hi, double ratio) {
    std::vector<double> grid;
    for (double v = lo; v <= hi * (1.0 + 1e-12); v *= ratio) grid.push_back(v);
    return grid;
}

// Extrapolates per-scale exponent estimates s(r) = a + b / log(1/r) to the
// r -> 0 intercept; with fewer than two scales returns the value itself.
double extrapolate_in_inverse_log(std::span<const double> r_list,
                                  std::span<const double> s_values) {
    const std::size_t n = r_list.size();
    if (n == 1) return s_values[0];
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 / std::log(1.0 / r_list[i]);
    double intercept = 0.0;
    least_squares_slope(x, s_values, &intercept);
    return intercept;
}

// Bisects a monotonically decreasing function to its crossing of `target`
// over s in [0, hi_max]; returns 0 when already below target at s = 0.
template <typename F>
double bisect_decreasing(F&& f, double target, double hi_max, double tol) {
    if (f(0.0) <= target) return 0.0;
    double lo = 0.0, hi = 1.0;
    while (f(hi) > target) {
        lo = hi;
        hi *= 2.0;
        if (hi > hi_max) return hi_max;
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        (f(mid) > target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double cover_cost(std::span<const double> pts, double lo, double hi, double s) {
    return min_cover_cost_1d(pts, lo, hi, s).first;
}

// Greedy feasible measure for the packing program dual to the band-limited
// cover: masses are assigned left to right, each point taking the largest
// amount no anchored window [x_j, x_j + l] over the diameter ladder can
// reject.  Returns the total mass placed.
double greedy_dual_mass(std::span<const double> pts, double band_lo, double band_hi,
                        double s) {
    const std::size_t n = pts.size();
    static const double kLadderStep = std::pow(2.0, 0.125);
    std::vector<double> lengths;
    for (double l = band_lo; ; l *= kLadderStep) {
        lengths.push_back(l);
        if (l >= band_hi) break;  // one rung past the band top covers every in-band diameter
    }
    const std::size_t L = lengths.size();
    std::vector<double> cap(L);
    for (std::size_t j = 0; j < L; ++j) cap[j] = std::pow(lengths[j], s);

    std::vector<std::size_t> lo_idx(L, 0);
    std::vector<double> prefix(n + 1, 0.0);  // prefix[i] = mass of points < i
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double allow = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < L; ++j) {
            while (pts[lo_idx[j]] < pts[i] - lengths[j]) ++lo_idx[j];
            // Tightest anchored window ending at i starts at lo_idx[j].
            allow = std::min(allow, cap[j] - (prefix[i] - prefix[lo_idx[j]]));
        }
        const double add = std::max(0.0, allow);
        prefix[i + 1] = prefix[i] + add;
        total += add;
    }
    return total;
}

void check_intermediate_args(std::span<const double> pts, double theta,
                             std::span<const double> r_list) {
    if (pts.empty()) throw_domain("intermediate estimate: no points");
    if (!(theta > 0.0) || !(theta < 1.0))
        throw_domain("intermediate estimate: theta must be in (0,1)");
    if (r_list.empty()) throw_domain("intermediate estimate: empty scale list");
    for (double r : r_list) {
        if (!(r > 0.0) || !(r < 1.0))
            throw_domain("intermediate estimate: scales must be in (0,1)");
    }
}

// Per-scale bisected exponents for the cover-cost (upper) route.
std::vector<double> upper_exponents(std::span<const double> pts, double theta,
                                    std::span<const double> r_list) {
    std::vector<double> s(r_list.size());
    for (std::size_t i = 0; i < r_list.size(); ++i) {
        const double r = r_list[i];
        const double band_hi = std::pow(r, theta);
        s[i] = bisect_decreasing(
            [&](double e) { return cover_cost(pts, r, band_hi, e); }, 1.0, 8.0, 1e-3);
    }
    return s;
}

}  // namespace

RegressionFit estimate_box(const CoveringProfile& profile) {
    if (profile.global_counts.size() < 4)
        throw_insufficient("estimate_box: need at least 4 global scales");
    std::vector<double> x, y;
    for (const auto& [r, count] : profile.global_counts) {
        x.push_back(std::log(1.0 / r));
        y.push_back(std::log(static_cast<double>(count)));
    }
    RegressionFit fit;
    fit.slope = least_squares_slope(x, y, &fit.intercept, &fit.max_residual);
    fit.r_lo = profile.global_counts.begin()->first;
    fit.r_hi = profile.global_counts.rbegin()->first;
    return fit;
}

RegressionFit estimate_box(const PointCloud& cloud, double r_min, double grid_ratio) {
    CoveringProfile profile;
    const double r_max = std::min(1.0, std::pow(r_min, 0.25));
    for (double r : geometric_grid(r_min, r_max, grid_ratio))
        profile.global_counts[r] = mesh_count(cloud, r);
    return estimate_box(profile);
}

SpectrumCurve estimate_assouad_spectrum(const PointCloud& cloud,
                                        std::span<const double> theta_grid,
                                        double r_min, const SpectrumOptions& opt) {
    if (theta_grid.empty()) throw_domain("spectrum: empty theta grid");
    if (r_min < cloud.resolution() * (1.0 - 1e-12))
        throw_resolution("spectrum: r_min below cloud resolution");
    for (double theta : theta_grid)
        if (!(theta > 0.0) || !(theta < 1.0))
            throw_domain("spectrum: theta must be in (0,1)");
    if (!std::is_sorted(theta_grid.begin(), theta_grid.end()))
        throw_domain("spectrum: theta grid must be increasing");

    const double d = cloud.dim();
    const double box = estimate_box(cloud, r_min, opt.grid_ratio).slope;
    const auto r_grid =
        geometric_grid(r_min, std::pow(r_min, opt.cap_exponent), opt.grid_ratio);

    SpectrumCurve curve;
    curve.provenance = Provenance::Numeric;
    for (double theta : theta_grid) {
        std::vector<ScalePair> pairs;
        std::vector<double> xs;
        for (double r : r_grid) {
            const double R = std::pow(r, theta);
            if (R <= r || R > 1.0) continue;
            pairs.emplace_back(r, R);
            xs.push_back(std::log(R / r));
        }
        if (pairs.empty()) throw_domain("spectrum: no admissible (r, r^theta) pairs");
        const auto sups = sup_local_counts(cloud, pairs, opt.max_centers, opt.seed);

        std::vector<double> ys(sups.size());
        double ratio_max = 0.0;
        for (std::size_t i = 0; i < sups.size(); ++i) {
            ys[i] = std::log(static_cast<double>(sups[i]));
            ratio_max = std::max(ratio_max, ys[i] / xs[i]);
        }
        // Three surrogates for the scaling exponent.  Each per-scale ratio
        // carries the covering constant of the definition, so the grid
        // maximum overshoots; the cross-scale slope cancels constants but is
        // pulled down by count granularity when the counts are small; the
        // ratio at the finest scale, after dividing out the fixed
        // ball-overcount constant 2^(d-1), floors the answer.  Clipping the
        // slope into the corrected-ratio envelope keeps whichever signal is
        // trustworthy at this depth.
        const double deep = ys[0] / xs[0];  // r-grid starts at r_min
        const double deep_corrected =
            deep - (cloud.dim() - 1) * std::log(2.0) / xs[0];
        double value = xs.size() >= 3 ? least_squares_slope(xs, ys) : deep_corrected;
        value = std::min(std::max(value, deep_corrected), ratio_max);
        value = std::clamp(value, std::max(0.0, box - 0.05), d);
        curve.samples.push_back({theta, value});
    }
    return curve;
}

double estimate_phi_assouad(const PointCloud& cloud, const PhiFunction& phi,
                            std::span<const double> R_grid, const PhiOptions& opt) {
    if (R_grid.empty()) throw_domain("phi-assouad: empty R grid");
    std::vector<ScalePair> pairs;
    for (double R : R_grid) {
        if (!(R > 0.0) || R > 1.0) throw_domain("phi-assouad: R must be in (0,1]");
        const double top = phi(R);
        if (top < cloud.resolution() * (1.0 - 1e-12))
            throw_domain("phi-assouad: phi(R) below cloud resolution");
        for (double r = cloud.resolution(); r <= top * (1.0 + 1e-12); r *= opt.grid_ratio) {
            if (R / r < opt.min_scale_ratio) break;  // too coarse for a meaningful ratio
            pairs.emplace_back(r, R);
        }
    }
    if (pairs.empty())
        throw_domain("phi-assouad: no admissible (r, R) pairs at this resolution");
    const auto sups = sup_local_counts(cloud, pairs, opt.max_centers, opt.seed);
    double best = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const double ratio =
            std::log(static_cast<double>(sups[i])) / std::log(pairs[i].R / pairs[i].r);
        best = std::max(best, ratio);
    }
    return std::clamp(best, 0.0, static_cast<double>(cloud.dim()));
}

double estimate_intermediate_upper(std::span<const double> sorted_points, double theta,
                                   std::span<const double> r_list) {
    check_intermediate_args(sorted_points, theta, r_list);
    if (!std::is_sorted(sorted_points.begin(), sorted_points.end()))
        throw_domain("intermediate estimate: points must be sorted");
    const auto s = upper_exponents(sorted_points, theta, r_list);
    return std::clamp(extrapolate_in_inverse_log(r_list, s), 0.0, 1.0);
}

double estimate_intermediate_lower(const PointCloud& cloud, double theta,
                                   std::span<const double> r_list) {
    if (cloud.dim() != 1)
        throw_domain("intermediate estimate: only 1-D clouds are supported");
    std::vector<double> pts = cloud.coords();
    std::sort(pts.begin(), pts.end());
    check_intermediate_args(pts, theta, r_list);

    // The cover-cost cap keeps the reported value under the upper estimate
    // (weak duality holds anyway; the cap absorbs ladder slack).  The cover
    // DP is quadratic on dense clouds, so very large inputs rely on the dual
    // alone.
    const bool with_cap = pts.size() <= 20000;
    std::vector<double> s_up;
    if (with_cap) s_up = upper_exponents(pts, theta, r_list);

    std::vector<double> s_lo(r_list.size());
    for (std::size_t i = 0; i < r_list.size(); ++i) {
        const double r = r_list[i];
        const double band_hi = std::pow(r, theta);
        const double s_dual = bisect_decreasing(
            [&](double e) { return greedy_dual_mass(pts, r, band_hi, e); }, 1.0, 8.0,
            1e-3);
        s_lo[i] = with_cap ? std::min(s_dual, s_up[i] + 0.015) : s_dual;
    }
    double lower = extrapolate_in_inverse_log(r_list, s_lo);
    if (with_cap) lower = std::min(lower, extrapolate_in_inverse_log(r_list, s_up) + 0.015);
    return std::clamp(lower, 0.0, 1.0);
}

SpectrumCurve theta_sweep(const PointCloud& cloud, EstimatorKind which,
                          std::span<const double> theta_grid, const SweepParams& params) {
    if (which == EstimatorKind::AssouadSpectrum) {
        const double r_min = params.r_min > 0.0 ? params.r_min : cloud.resolution();
        return estimate_assouad_spectrum(cloud, theta_grid, r_min, params.spectrum);
    }

    if (cloud.dim() != 1)
        throw_domain("theta_sweep: intermediate estimators need a 1-D cloud");
    std::vector<double> pts = cloud.coords();
    std::sort(pts.begin(), pts.end());

    SpectrumCurve curve;
    curve.provenance = Provenance::Numeric;
    for (double theta : theta_grid) {
        double value = 0.0;
        if (which == EstimatorKind::IntermediateUpper)
            value = estimate_intermediate_upper(pts, theta, params.r_list);
        else
            value = estimate_intermediate_lower(cloud, theta, params.r_list);
        curve.samples.push_back({theta, value});
    }
    return curve;
}

}  // namespace dimkit
