#pragma once

#include <span>
#include <utility>
#include <vector>

namespace dimkit {

// 1-D interval cover with all diameters inside [diam_min, diam_max] and
// weighted cost sum(diam^s).
struct CoverSpec {
    struct Interval {
        double lo = 0.0;
        double hi = 0.0;
        double diam() const { return hi - lo; }
    };

    std::vector<Interval> intervals;
    double diam_min = 0.0;
    double diam_max = 0.0;
    double cost_exponent = 0.0;

    double cost() const;
    // True when every target point lies in some interval and every diameter
    // is inside the band (up to floating slack).
    bool covers(std::span<const double> sorted_points) const;
};

// Exact minimum of sum(diam^s) over interval covers of the points with
// diameters constrained to [diam_min, diam_max], s >= 0.  Dynamic program
// over the sorted points: the leftmost uncovered point anchors the next
// interval, whose diameter is diam_min, diam_max, or exactly reaches a
// point.  Returns the cost and one optimal cover.
std::pair<double, CoverSpec> min_cover_cost_1d(std::span<const double> sorted_points,
                                               double diam_min, double diam_max,
                                               double s);

}  // namespace dimkit
