#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dimkit {

// Finite sample of a set in R^d, faithful down to `resolution`: every point
// of the underlying set (within the bounding box) is within `resolution` of
// a cloud point and vice versa.  Coordinates are stored flat, point i at
// [i*dim, (i+1)*dim).
class PointCloud {
public:
    PointCloud() = default;

    // Validates: dim >= 1, resolution > 0, at least one point, points
    // pairwise distinct.  Records the bounding box.
    static PointCloud create(int dim, std::vector<double> coords, double resolution);

    int dim() const { return dim_; }
    std::size_t size() const { return coords_.size() / static_cast<std::size_t>(dim_); }
    double resolution() const { return resolution_; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * static_cast<std::size_t>(dim_),
                static_cast<std::size_t>(dim_)};
    }
    const std::vector<double>& coords() const { return coords_; }
    const std::vector<double>& bbox_min() const { return bbox_min_; }
    const std::vector<double>& bbox_max() const { return bbox_max_; }

    // Largest bounding-box side (0 for a single point).
    double extent() const;

private:
    int dim_ = 0;
    double resolution_ = 0.0;
    std::vector<double> coords_;
    std::vector<double> bbox_min_, bbox_max_;
};

}  // namespace dimkit
