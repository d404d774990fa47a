#pragma once

#include <cstdint>
#include <vector>

#include "dimkit/fractal_spec.hpp"
#include "dimkit/point_cloud.hpp"

namespace dimkit {

// Nested random subdivision: kept cells per level 0..depth, level 0 being the
// full cube.  Cell coordinates at level j are d integers in [0, m^j), stored
// flat.  Keep/discard draws are keyed by (seed, cell path), so deepening a
// realization never changes earlier levels.
struct PercolationRealization {
    int dim = 0;
    int m = 0;
    uint64_t seed = 0;
    int depth = 0;
    bool survived = false;
    std::vector<std::vector<int64_t>> kept;  // kept[j]: level-j cell coords, flat

    std::size_t level_count(int level) const {
        return kept[level].size() / static_cast<std::size_t>(dim);
    }
};

PercolationRealization realize(const PercolationSpec& spec, int depth);

// Materializes the family as a resolution-net of the true set.  Percolation
// requires resolution = m^-k and throws Error::Extinction when the
// realization dies.
PointCloud generate(const FractalSpec& spec, double resolution);

// Countable-family gap threshold: index below which consecutive gaps of n^-p
// fall under the resolution (the tail is replaced by a mesh).
std::size_t countable_gap_threshold(double p, double resolution);

// Subdivision level used for a carpet at this resolution.
int carpet_level(const CarpetSpec& spec, double resolution);

}  // namespace dimkit
