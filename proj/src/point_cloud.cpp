#include "dimkit/point_cloud.hpp"

#include <algorithm>
#include <cstring>
#include <limits>

#include "dimkit/errors.hpp"
#include "dimkit/rng.hpp"

namespace dimkit {

namespace {

uint64_t hash_point(std::span<const double> p) {
    uint64_t h = 0x243f6a8885a308d3ULL;
    for (double v : p) {
        uint64_t bits;
        std::memcpy(&bits, &v, sizeof(bits));
        h = mix_keys(h, bits);
    }
    return h;
}

}  // namespace

PointCloud PointCloud::create(int dim, std::vector<double> coords, double resolution) {
    if (dim < 1) throw_domain("PointCloud: ambient dimension must be >= 1");
    if (!(resolution > 0.0)) throw_domain("PointCloud: resolution must be > 0");
    if (coords.empty()) throw_domain("PointCloud: empty clouds are rejected");
    if (coords.size() % static_cast<std::size_t>(dim) != 0)
        throw_domain("PointCloud: coordinate buffer does not match dimension");

    PointCloud c;
    c.dim_ = dim;
    c.resolution_ = resolution;
    c.coords_ = std::move(coords);

    const std::size_t n = c.size();
    c.bbox_min_.assign(dim, std::numeric_limits<double>::infinity());
    c.bbox_max_.assign(dim, -std::numeric_limits<double>::infinity());
    for (std::size_t i = 0; i < n; ++i) {
        auto p = c.point(i);
        for (int k = 0; k < dim; ++k) {
            c.bbox_min_[k] = std::min(c.bbox_min_[k], p[k]);
            c.bbox_max_[k] = std::max(c.bbox_max_[k], p[k]);
        }
    }

    // Pairwise-distinct check via hashing; hash-equal neighbours are compared
    // exactly so collisions cannot mask a true duplicate.
    std::vector<std::pair<uint64_t, uint32_t>> keys(n);
    for (std::size_t i = 0; i < n; ++i)
        keys[i] = {hash_point(c.point(i)), static_cast<uint32_t>(i)};
    std::sort(keys.begin(), keys.end());
    for (std::size_t i = 1; i < n; ++i) {
        if (keys[i].first != keys[i - 1].first) continue;
        auto a = c.point(keys[i - 1].second);
        auto b = c.point(keys[i].second);
        if (std::equal(a.begin(), a.end(), b.begin()))
            throw_domain("PointCloud: points must be pairwise distinct");
    }
    return c;
}

double PointCloud::extent() const {
    double e = 0.0;
    for (int k = 0; k < dim_; ++k) e = std::max(e, bbox_max_[k] - bbox_min_[k]);
    return e;
}

}  // namespace dimkit
