#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "dimkit/point_cloud.hpp"

namespace dimkit {

// Pair of scales 0 < r <= R <= 1 for localized counts N_r(B(x,R)).
struct ScalePair {
    double r = 0.0;
    double R = 0.0;

    ScalePair() = default;
    ScalePair(double r_, double R_);  // validates 0 < r <= R <= 1

    friend bool operator<(const ScalePair& a, const ScalePair& b) {
        if (a.r != b.r) return a.r < b.r;
        return a.R < b.R;
    }
    friend bool operator==(const ScalePair& a, const ScalePair& b) {
        return a.r == b.r && a.R == b.R;
    }
};

// Table of global mesh counts N_r(F) and localized counts
// sup_x N_r(B(x,R) cap F) over sampled centers.
struct CoveringProfile {
    std::map<double, std::size_t> global_counts;
    std::map<ScalePair, std::size_t> local_counts;
    std::size_t center_count = 0;
};

// Number of distinct half-open mesh cubes of side r (anchored at the origin)
// that intersect the cloud.  Requires r >= cloud.resolution().
std::size_t mesh_count(const PointCloud& cloud, double r);

// Mesh cubes of side pair.r hit by the cloud inside the closed Euclidean
// ball B(center, pair.R).
std::size_t local_count(const PointCloud& cloud, std::span<const double> center,
                        const ScalePair& pair);
std::size_t local_count(const PointCloud& cloud, std::size_t center_index,
                        const ScalePair& pair);

// Batch counts over a scale grid.  Global counts are stored for every r and
// R appearing in the grid; local counts take the max over sampled centers
// (all cloud points when centers_per_pair >= cloud.size(), otherwise a
// deterministic seeded subsample).
CoveringProfile covering_profile(const PointCloud& cloud,
                                 std::span<const ScalePair> scale_grid,
                                 std::size_t centers_per_pair,
                                 uint64_t seed = 0);

// sup_x N_r(B(x,R)) per pair, maximized over sampled centers (all points
// when max_centers >= cloud.size()).  Same center handling as
// covering_profile but without the global counts.
std::vector<std::size_t> sup_local_counts(const PointCloud& cloud,
                                          std::span<const ScalePair> pairs,
                                          std::size_t max_centers, uint64_t seed = 0);

// Maximal greedy r-separated subset: pairwise distances > r, every cloud
// point within r of some net point.  Deterministic (points are visited in
// lexicographic order).
PointCloud separated_net(const PointCloud& cloud, double r);

}  // namespace dimkit
