#include "dimkit/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "dimkit/errors.hpp"
#include "dimkit/parallel.hpp"
#include "dimkit/rng.hpp"

namespace dimkit {

namespace {

void check_scale(const PointCloud& cloud, double r) {
    if (!(r > 0.0)) throw_domain("scale r must be > 0");
    if (r < cloud.resolution() * (1.0 - 1e-12))
        throw_resolution("scale r is below the cloud's faithful resolution");
}

// Packs per-axis cube indices into one 64-bit key.  d <= 3 uses exact bit
// packing (with range checks); higher dimensions fall back to hashing, which
// is fine for counting purposes.
struct CubeKeyer {
    int dim;
    double inv_r;

    CubeKeyer(int d, double r) : dim(d), inv_r(1.0 / r) {}

    uint64_t operator()(std::span<const double> p) const {
        if (dim == 1) {
            return pack(idx(p[0]), 62);
        } else if (dim == 2) {
            return (pack(idx(p[0]), 31) << 31) | pack(idx(p[1]), 31);
        } else if (dim == 3) {
            return (pack(idx(p[0]), 21) << 42) | (pack(idx(p[1]), 21) << 21) |
                   pack(idx(p[2]), 21);
        }
        uint64_t h = 0x9ae16a3b2f90404fULL;
        for (int k = 0; k < dim; ++k) h = mix_keys(h, static_cast<uint64_t>(idx(p[k])));
        return h;
    }

    int64_t idx(double x) const { return static_cast<int64_t>(std::floor(x * inv_r)); }

    static uint64_t pack(int64_t i, int bits) {
        const int64_t offset = int64_t{1} << (bits - 1);
        const int64_t shifted = i + offset;
        if (shifted < 0 || shifted >= (int64_t{1} << bits))
            throw_domain("mesh index out of packable range (scale too fine for extent)");
        return static_cast<uint64_t>(shifted);
    }
};

std::size_t count_distinct(std::vector<uint64_t>& keys) {
    std::sort(keys.begin(), keys.end());
    return static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
}

// Bucket grid at a given cell size for ball queries; bucket ids reuse the
// cube keyer.  Built once per scale pair and shared across centers.
struct BucketGrid {
    CubeKeyer keyer;
    double cell;
    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;

    BucketGrid(const PointCloud& cloud, double cell_size)
        : keyer(cloud.dim(), cell_size), cell(cell_size) {
        buckets.reserve(cloud.size() / 2 + 1);
        for (std::size_t i = 0; i < cloud.size(); ++i)
            buckets[keyer(cloud.point(i))].push_back(static_cast<uint32_t>(i));
    }

    // Visits every point whose cell intersects the axis-aligned box around
    // `center` with half-width R.
    template <typename F>
    void for_candidates(const PointCloud& cloud, std::span<const double> center,
                        double R, F&& fn) const {
        const int d = cloud.dim();
        std::vector<int64_t> lo(d), hi(d), cur(d);
        for (int k = 0; k < d; ++k) {
            lo[k] = keyer.idx(center[k] - R);
            hi[k] = keyer.idx(center[k] + R);
            cur[k] = lo[k];
        }
        while (true) {
            uint64_t key;
            if (d == 1) {
                key = CubeKeyer::pack(cur[0], 62);
            } else if (d == 2) {
                key = (CubeKeyer::pack(cur[0], 31) << 31) | CubeKeyer::pack(cur[1], 31);
            } else if (d == 3) {
                key = (CubeKeyer::pack(cur[0], 21) << 42) |
                      (CubeKeyer::pack(cur[1], 21) << 21) | CubeKeyer::pack(cur[2], 21);
            } else {
                key = 0x9ae16a3b2f90404fULL;
                for (int k = 0; k < d; ++k) key = mix_keys(key, static_cast<uint64_t>(cur[k]));
            }
            if (auto it = buckets.find(key); it != buckets.end())
                for (uint32_t i : it->second) fn(i);
            int k = d - 1;
            while (k >= 0) {
                if (++cur[k] <= hi[k]) break;
                cur[k] = lo[k];
                --k;
            }
            if (k < 0) break;
        }
    }
};

std::vector<uint32_t> sample_centers(std::size_t n, std::size_t want, uint64_t seed) {
    std::vector<uint32_t> centers;
    if (want >= n) {
        centers.resize(n);
        std::iota(centers.begin(), centers.end(), 0u);
        return centers;
    }
    std::vector<uint32_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0u);
    std::mt19937_64 gen(seed);
    for (std::size_t i = 0; i < want; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(idx[i], idx[pick(gen)]);
    }
    return {idx.begin(), idx.begin() + static_cast<long>(want)};
}

std::size_t local_count_impl(const PointCloud& cloud, const BucketGrid& grid,
                             std::span<const double> center, const ScalePair& pair,
                             std::vector<uint64_t>& scratch) {
    const int d = cloud.dim();
    const double R2 = pair.R * pair.R;
    CubeKeyer keyer(d, pair.r);
    scratch.clear();
    grid.for_candidates(cloud, center, pair.R, [&](uint32_t i) {
        auto p = cloud.point(i);
        double dist2 = 0.0;
        for (int k = 0; k < d; ++k) {
            const double dx = p[k] - center[k];
            dist2 += dx * dx;
        }
        if (dist2 <= R2) scratch.push_back(keyer(p));
    });
    return count_distinct(scratch);
}

}  // namespace

ScalePair::ScalePair(double r_, double R_) : r(r_), R(R_) {
    if (!(r > 0.0) || !(r <= R) || !(R <= 1.0))
        throw_domain("ScalePair requires 0 < r <= R <= 1");
}

std::size_t mesh_count(const PointCloud& cloud, double r) {
    check_scale(cloud, r);
    CubeKeyer keyer(cloud.dim(), r);
    std::vector<uint64_t> keys(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) keys[i] = keyer(cloud.point(i));
    return count_distinct(keys);
}

std::size_t local_count(const PointCloud& cloud, std::span<const double> center,
                        const ScalePair& pair) {
    check_scale(cloud, pair.r);
    BucketGrid grid(cloud, pair.R);
    std::vector<uint64_t> scratch;
    return local_count_impl(cloud, grid, center, pair, scratch);
}

std::size_t local_count(const PointCloud& cloud, std::size_t center_index,
                        const ScalePair& pair) {
    if (center_index >= cloud.size()) throw_domain("center index out of range");
    return local_count(cloud, cloud.point(center_index), pair);
}

CoveringProfile covering_profile(const PointCloud& cloud,
                                 std::span<const ScalePair> scale_grid,
                                 std::size_t centers_per_pair, uint64_t seed) {
    if (scale_grid.empty()) throw_domain("covering_profile: empty scale grid");
    if (centers_per_pair == 0) throw_domain("covering_profile: need at least one center");
    for (const auto& pair : scale_grid) check_scale(cloud, pair.r);

    CoveringProfile profile;

    // Global counts at every scale appearing in the grid (r and R side).
    for (const auto& pair : scale_grid) {
        for (double s : {pair.r, pair.R}) {
            if (!profile.global_counts.count(s) && s >= cloud.resolution() * (1.0 - 1e-12))
                profile.global_counts[s] = mesh_count(cloud, s);
        }
    }

    // Center sample: all points if they fit, else a seeded partial shuffle.
    const auto centers = sample_centers(cloud.size(), centers_per_pair, seed);
    profile.center_count = centers.size();

    for (const auto& pair : scale_grid) {
        BucketGrid grid(cloud, pair.R);
        std::vector<std::size_t> counts(centers.size());
        parallel_for(centers.size(), [&](std::size_t begin, std::size_t end) {
            std::vector<uint64_t> scratch;
            for (std::size_t c = begin; c < end; ++c)
                counts[c] = local_count_impl(cloud, grid, cloud.point(centers[c]), pair, scratch);
        });
        profile.local_counts[pair] = *std::max_element(counts.begin(), counts.end());
    }
    return profile;
}

std::vector<std::size_t> sup_local_counts(const PointCloud& cloud,
                                          std::span<const ScalePair> pairs,
                                          std::size_t max_centers, uint64_t seed) {
    if (pairs.empty()) throw_domain("sup_local_counts: empty pair list");
    if (max_centers == 0) throw_domain("sup_local_counts: need at least one center");
    for (const auto& pair : pairs) check_scale(cloud, pair.r);

    const auto centers = sample_centers(cloud.size(), max_centers, seed);
    std::vector<std::size_t> sups(pairs.size(), 0);
    for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
        const auto& pair = pairs[pi];
        BucketGrid grid(cloud, pair.R);
        std::vector<std::size_t> counts(centers.size());
        parallel_for(centers.size(), [&](std::size_t begin, std::size_t end) {
            std::vector<uint64_t> scratch;
            for (std::size_t c = begin; c < end; ++c)
                counts[c] = local_count_impl(cloud, grid, cloud.point(centers[c]), pair, scratch);
        });
        sups[pi] = *std::max_element(counts.begin(), counts.end());
    }
    return sups;
}

PointCloud separated_net(const PointCloud& cloud, double r) {
    check_scale(cloud, r);
    const int d = cloud.dim();
    const std::size_t n = cloud.size();

    // Canonical visit order: lexicographic by coordinates.
    std::vector<uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](uint32_t a, uint32_t b) {
        auto pa = cloud.point(a), pb = cloud.point(b);
        return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    });

    CubeKeyer keyer(d, r);
    std::unordered_map<uint64_t, std::vector<uint32_t>> kept_cells;
    std::vector<uint32_t> kept;
    const double r2 = r * r;
    std::vector<int64_t> lo(d), hi(d), cur(d);

    for (uint32_t i : order) {
        auto p = cloud.point(i);
        bool ok = true;
        for (int k = 0; k < d; ++k) {
            lo[k] = keyer.idx(p[k] - r);
            hi[k] = keyer.idx(p[k] + r);
            cur[k] = lo[k];
        }
        while (ok) {
            uint64_t key = 0x9ae16a3b2f90404fULL;
            if (d == 1) key = CubeKeyer::pack(cur[0], 62);
            else if (d == 2) key = (CubeKeyer::pack(cur[0], 31) << 31) | CubeKeyer::pack(cur[1], 31);
            else if (d == 3) key = (CubeKeyer::pack(cur[0], 21) << 42) | (CubeKeyer::pack(cur[1], 21) << 21) | CubeKeyer::pack(cur[2], 21);
            else for (int k = 0; k < d; ++k) key = mix_keys(key, static_cast<uint64_t>(cur[k]));
            if (auto it = kept_cells.find(key); it != kept_cells.end()) {
                for (uint32_t j : it->second) {
                    auto q = cloud.point(j);
                    double dist2 = 0.0;
                    for (int k = 0; k < d; ++k) {
                        const double dx = p[k] - q[k];
                        dist2 += dx * dx;
                    }
                    if (dist2 <= r2) { ok = false; break; }
                }
            }
            int k = d - 1;
            while (k >= 0) {
                if (++cur[k] <= hi[k]) break;
                cur[k] = lo[k];
                --k;
            }
            if (k < 0) break;
        }
        if (ok) {
            kept.push_back(i);
            kept_cells[keyer(p)].push_back(i);
        }
    }

    std::vector<double> coords;
    coords.reserve(kept.size() * static_cast<std::size_t>(d));
    for (uint32_t i : kept) {
        auto p = cloud.point(i);
        coords.insert(coords.end(), p.begin(), p.end());
    }
    return PointCloud::create(d, std::move(coords), cloud.resolution());
}

}  // namespace dimkit
