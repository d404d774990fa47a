#pragma once

#include <span>
#include <vector>

namespace dimkit {

class PointCloud;

// Finitely supported measure: support point i at weights[i] > 0.
struct DiscreteMeasure {
    int dim = 0;
    std::vector<double> support;  // flat, like PointCloud
    std::vector<double> weights;
    double total = 0.0;

    static DiscreteMeasure create(int dim, std::vector<double> support,
                                  std::vector<double> weights);
    static DiscreteMeasure uniform_on(const PointCloud& cloud);

    std::size_t size() const { return weights.size(); }
    std::span<const double> point(std::size_t i) const {
        return {support.data() + i * static_cast<std::size_t>(dim),
                static_cast<std::size_t>(dim)};
    }
};

// Largest s (on a 0.002 grid, capped at the ambient dimension) such that
// mu(U) <= c0 * |U|^s for every dyadic test cube U with side in
// [diam_min * 2^j] <= diam_max, cubes anchored at multiples of their side.
// The constant is fixed at c0 = 4.
double frostman_exponent(const DiscreteMeasure& measure, double diam_min,
                         double diam_max);

}  // namespace dimkit
