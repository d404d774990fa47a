#include "dimkit/cover_cost.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "dimkit/errors.hpp"

namespace dimkit {

double CoverSpec::cost() const {
    double c = 0.0;
    for (const auto& iv : intervals) c += std::pow(iv.diam(), cost_exponent);
    return c;
}

bool CoverSpec::covers(std::span<const double> sorted_points) const {
    const double slack = 1e-9 * std::max(1.0, diam_max);
    for (const auto& iv : intervals)
        if (iv.diam() < diam_min - slack || iv.diam() > diam_max + slack) return false;
    for (double x : sorted_points) {
        bool hit = false;
        for (const auto& iv : intervals)
            if (x >= iv.lo - slack && x <= iv.hi + slack) { hit = true; break; }
        if (!hit) return false;
    }
    return true;
}

std::pair<double, CoverSpec> min_cover_cost_1d(std::span<const double> sorted_points,
                                               double diam_min, double diam_max,
                                               double s) {
    if (sorted_points.empty()) throw_domain("min_cover_cost_1d: no points");
    if (!(diam_min > 0.0) || diam_min > diam_max)
        throw_domain("min_cover_cost_1d: need 0 < diam_min <= diam_max");
    if (s < 0.0) throw_domain("min_cover_cost_1d: exponent must be >= 0");
    if (!std::is_sorted(sorted_points.begin(), sorted_points.end()))
        throw_domain("min_cover_cost_1d: points must be sorted");

    const std::size_t n = sorted_points.size();
    const double cost_min = std::pow(diam_min, s);
    const double cost_max = std::pow(diam_max, s);

    // best[i] = minimal cost covering points i..n-1; choice[i] = diameter of
    // the interval anchored at point i in an optimal solution.
    std::vector<double> best(n + 1, 0.0);
    std::vector<double> choice(n, 0.0);

    for (std::size_t ii = n; ii-- > 0;) {
        const double x = sorted_points[ii];
        double b = std::numeric_limits<double>::infinity();
        double pick = diam_min;

        // Candidate: shortest admissible interval.
        {
            auto next = std::upper_bound(sorted_points.begin() + ii, sorted_points.end(),
                                         x + diam_min);
            const double c = cost_min + best[next - sorted_points.begin()];
            if (c < b) { b = c; pick = diam_min; }
        }
        // Candidates: stretch exactly to a reachable point.
        for (std::size_t j = ii + 1; j < n; ++j) {
            const double L = sorted_points[j] - x;
            if (L > diam_max) break;
            if (L <= diam_min) continue;  // already subsumed by the diam_min candidate
            auto next = std::upper_bound(sorted_points.begin() + j, sorted_points.end(),
                                         x + L);
            const double c = std::pow(L, s) + best[next - sorted_points.begin()];
            if (c < b) { b = c; pick = L; }
        }
        // Candidate: longest admissible interval.
        {
            auto next = std::upper_bound(sorted_points.begin() + ii, sorted_points.end(),
                                         x + diam_max);
            const double c = cost_max + best[next - sorted_points.begin()];
            if (c < b) { b = c; pick = diam_max; }
        }

        best[ii] = b;
        choice[ii] = pick;
    }

    CoverSpec cover;
    cover.diam_min = diam_min;
    cover.diam_max = diam_max;
    cover.cost_exponent = s;
    std::size_t i = 0;
    while (i < n) {
        const double L = choice[i];
        cover.intervals.push_back({sorted_points[i], sorted_points[i] + L});
        i = std::upper_bound(sorted_points.begin() + i, sorted_points.end(),
                             sorted_points[i] + L) -
            sorted_points.begin();
    }
    return {best[0], std::move(cover)};
}

}  // namespace dimkit
