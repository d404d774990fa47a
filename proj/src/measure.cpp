#include "dimkit/measure.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "dimkit/errors.hpp"
#include "dimkit/point_cloud.hpp"
#include "dimkit/rng.hpp"

namespace dimkit {

DiscreteMeasure DiscreteMeasure::create(int dim, std::vector<double> support,
                                        std::vector<double> weights) {
    if (dim < 1) throw_domain("DiscreteMeasure: dimension must be >= 1");
    if (weights.empty()) throw_domain("DiscreteMeasure: empty measure");
    if (support.size() != weights.size() * static_cast<std::size_t>(dim))
        throw_domain("DiscreteMeasure: support/weights size mismatch");
    double total = 0.0;
    for (double w : weights) {
        if (!(w > 0.0)) throw_domain("DiscreteMeasure: weights must be positive");
        total += w;
    }
    DiscreteMeasure m;
    m.dim = dim;
    m.support = std::move(support);
    m.weights = std::move(weights);
    m.total = total;
    return m;
}

DiscreteMeasure DiscreteMeasure::uniform_on(const PointCloud& cloud) {
    const double w = 1.0 / static_cast<double>(cloud.size());
    return create(cloud.dim(), cloud.coords(), std::vector<double>(cloud.size(), w));
}

double frostman_exponent(const DiscreteMeasure& measure, double diam_min,
                         double diam_max) {
    if (measure.size() == 0) throw_domain("frostman_exponent: empty measure");
    if (!(diam_min > 0.0) || diam_min > diam_max)
        throw_domain("frostman_exponent: need 0 < diam_min <= diam_max");

    constexpr double kC0 = 4.0;
    constexpr double kGrid = 0.002;
    const int d = measure.dim;
    const double cap = static_cast<double>(d);

    double bound = cap;
    for (double side = diam_min; side <= diam_max * (1.0 + 1e-12); side *= 2.0) {
        if (side >= 1.0) break;  // sides >= 1 impose no decay constraint
        // Accumulate measure per mesh cube of this side.
        std::unordered_map<uint64_t, double> cube_mass;
        cube_mass.reserve(measure.size());
        for (std::size_t i = 0; i < measure.size(); ++i) {
            auto p = measure.point(i);
            uint64_t key = 0x2545f4914f6cdd1dULL;
            for (int k = 0; k < d; ++k) {
                const auto idx = static_cast<int64_t>(std::floor(p[k] / side));
                key = mix_keys(key, static_cast<uint64_t>(idx));
            }
            cube_mass[key] += measure.weights[i];
        }
        const double log_side = std::log(side);
        for (const auto& [key, mass] : cube_mass) {
            (void)key;
            // mu(U) <= c0 * side^s  <=>  s <= log(mu/c0)/log(side) for side < 1.
            if (mass <= kC0 * std::pow(side, cap)) continue;  // not binding below cap
            if (mass >= kC0 && side < 1.0) return 0.0;        // impossible at any s >= 0
            const double s_cube = std::log(mass / kC0) / log_side;
            bound = std::min(bound, s_cube);
        }
        if (bound <= 0.0) return 0.0;
    }
    // Round down to the s-grid.
    return std::max(0.0, std::floor(bound / kGrid) * kGrid);
}

}  // namespace dimkit
