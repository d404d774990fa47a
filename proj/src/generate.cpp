#include "dimkit/generate.hpp"

#include <algorithm>
#include <cmath>

#include "dimkit/errors.hpp"
#include "dimkit/rng.hpp"

namespace dimkit {

namespace {

void check_resolution(double resolution) {
    if (!(resolution > 0.0) || !(resolution < 1.0))
        throw_domain("generate: resolution must be in (0,1)");
}

// ceil(log(1/x)/log(base)) with a nudge so exact powers stay exact.
int ceil_log(double inv_x, double base) {
    return static_cast<int>(std::ceil(std::log(inv_x) / std::log(base) - 1e-9));
}

PointCloud generate_countable(const CountableSpec& spec, double resolution) {
    // Exact points n^-p down to the gap threshold; below it consecutive gaps
    // are finer than the resolution, so a uniform mesh of the remaining
    // interval is an equally faithful net.
    const auto n_star = countable_gap_threshold(spec.p, resolution);
    std::vector<double> pts;
    for (std::size_t n = 1; n <= n_star; ++n)
        pts.push_back(std::pow(static_cast<double>(n), -spec.p));
    const double tail_top = pts.back();
    const auto mesh_steps = static_cast<std::size_t>(std::floor(tail_top / resolution));
    for (std::size_t k = 0; k <= mesh_steps; ++k) {
        const double x = static_cast<double>(k) * resolution;
        if (x < tail_top) pts.push_back(x);
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return PointCloud::create(1, std::move(pts), resolution);
}

void carpet_descend(const CarpetSpec& spec, int level, int max_level, double x0,
                    double y0, double sx, double sy, std::vector<double>& out) {
    if (level == max_level) {
        out.push_back(x0 + sx / 2.0);
        out.push_back(y0 + sy / 2.0);
        return;
    }
    const double cx = sx / spec.m;
    const double cy = sy / spec.n;
    for (const auto& [col, row] : spec.cells)
        carpet_descend(spec, level + 1, max_level, x0 + col * cx, y0 + row * cy, cx, cy,
                       out);
}

PointCloud generate_carpet(const CarpetSpec& spec, double resolution) {
    const int k = carpet_level(spec, resolution);
    const double cells = std::pow(static_cast<double>(spec.cells.size()), k);
    if (cells > 6.0e7) throw_domain("carpet: resolution produces too many cells");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(cells) * 2);
    carpet_descend(spec, 0, k, 0.0, 0.0, 1.0, 1.0, out);
    return PointCloud::create(2, std::move(out), resolution);
}

void selfsimilar_descend(const SelfSimilarSpec& spec, double A, double C,
                         double resolution, std::vector<double>& out) {
    if (C < resolution) {
        out.push_back(A);
        return;
    }
    // S_prefix(x) = A + C*x; composing with x -> c*x + t gives
    // (A + C*t) + (C*c)*x.
    for (const auto& m : spec.maps)
        selfsimilar_descend(spec, A + C * m.t, C * m.c, resolution, out);
}

PointCloud generate_selfsimilar(const SelfSimilarSpec& spec, double resolution) {
    std::vector<double> pts;
    selfsimilar_descend(spec, 0.0, 1.0, resolution, pts);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return PointCloud::create(1, std::move(pts), resolution);
}

PointCloud generate_spiral(const SpiralSpec& spec, double resolution) {
    // Arc-length marching at step resolution/2 along x^-p * exp(ix),
    // truncated once the modulus falls below resolution/2; the focal point
    // stands in for the discarded tail.
    const double step = resolution / 2.0;
    std::vector<double> out;
    double x = 1.0;
    while (true) {
        const double mod = std::pow(x, -spec.p);
        if (mod < step) break;
        out.push_back(mod * std::cos(x));
        out.push_back(mod * std::sin(x));
        const double speed = mod * std::sqrt(1.0 + (spec.p / x) * (spec.p / x));
        x += step / speed;
    }
    out.push_back(0.0);
    out.push_back(0.0);
    return PointCloud::create(2, std::move(out), resolution);
}

PointCloud generate_percolation(const PercolationSpec& spec, double resolution) {
    const double k_real = std::log(1.0 / resolution) / std::log(static_cast<double>(spec.m));
    const int k = static_cast<int>(std::llround(k_real));
    if (std::abs(std::pow(static_cast<double>(spec.m), -k) - resolution) >
        resolution * 1e-9)
        throw_domain("percolation: resolution must equal m^-k for an integer k");

    const auto realization = realize(spec, k);
    if (!realization.survived)
        throw Error(Error::Code::Extinction, "percolation realization died out");

    const double side = std::pow(static_cast<double>(spec.m), -k);
    const auto& cells = realization.kept[k];
    std::vector<double> out;
    out.reserve(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i)
        out.push_back((static_cast<double>(cells[i]) + 0.5) * side);
    return PointCloud::create(spec.dim, std::move(out), resolution);
}

}  // namespace

std::size_t countable_gap_threshold(double p, double resolution) {
    return static_cast<std::size_t>(
        std::ceil(std::pow(resolution, -1.0 / (1.0 + p)) - 1e-9));
}

int carpet_level(const CarpetSpec& spec, double resolution) {
    return std::max(1, ceil_log(1.0 / resolution, static_cast<double>(spec.m)));
}

PercolationRealization realize(const PercolationSpec& spec, int depth) {
    if (depth < 1) throw_domain("realize: depth must be >= 1");
    validate(FractalSpec{spec});

    const int d = spec.dim;
    const auto md = static_cast<uint64_t>(std::llround(std::pow(spec.m, d)));

    PercolationRealization r;
    r.dim = d;
    r.m = spec.m;
    r.seed = spec.seed;
    r.depth = depth;
    r.kept.resize(depth + 1);
    r.kept[0].assign(d, 0);  // level 0: the full cube

    // Path ids: root 0, child = parent * m^d + linear child index + 1.
    std::vector<uint64_t> ids{0};
    for (int level = 1; level <= depth; ++level) {
        const auto& parents = r.kept[level - 1];
        const std::size_t parent_count = parents.size() / d;
        std::vector<int64_t> next;
        std::vector<uint64_t> next_ids;
        for (std::size_t pi = 0; pi < parent_count; ++pi) {
            for (uint64_t child = 0; child < md; ++child) {
                const uint64_t id = ids[pi] * md + child + 1;
                if (unit_uniform(mix_keys(spec.seed, id)) >= spec.p) continue;
                uint64_t rem = child;
                for (int k = 0; k < d; ++k) {
                    next.push_back(parents[pi * d + k] * spec.m +
                                   static_cast<int64_t>(rem % spec.m));
                    rem /= spec.m;
                }
                next_ids.push_back(id);
            }
        }
        r.kept[level] = std::move(next);
        ids = std::move(next_ids);
        if (r.kept[level].empty()) {
            r.survived = false;  // deeper levels stay empty
            return r;
        }
    }
    r.survived = true;
    return r;
}

PointCloud generate(const FractalSpec& spec, double resolution) {
    check_resolution(resolution);
    validate(spec);
    return std::visit([&](const auto& s) -> PointCloud {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CountableSpec>) return generate_countable(s, resolution);
        else if constexpr (std::is_same_v<T, CarpetSpec>) return generate_carpet(s, resolution);
        else if constexpr (std::is_same_v<T, SelfSimilarSpec>) return generate_selfsimilar(s, resolution);
        else if constexpr (std::is_same_v<T, SpiralSpec>) return generate_spiral(s, resolution);
        else return generate_percolation(s, resolution);
    }, spec);
}

}  // namespace dimkit
