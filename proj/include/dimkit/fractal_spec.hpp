#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace dimkit {

// F_p = { n^-p : n in N }, accumulation at 0.
struct CountableSpec {
    double p = 1.0;
};

// Bedford-McMullen carpet on an m x n grid (m columns, n rows, n > m >= 2)
// with the chosen cells given as (column, row) pairs.
struct CarpetSpec {
    int m = 2;
    int n = 3;
    std::vector<std::pair<int, int>> cells;
};

// Orientation-preserving similarity x -> c*x + t mapping [0,1] into itself.
struct SimilarityMap {
    double c = 0.5;
    double t = 0.0;
};

struct SelfSimilarSpec {
    std::vector<SimilarityMap> maps;
};

// Polynomial spiral { x^-p * exp(ix) : 1 < x < inf } in R^2.
struct SpiralSpec {
    double p = 2.0;
};

// Mandelbrot percolation on [0,1]^d with subdivision m and keep-probability p.
struct PercolationSpec {
    int dim = 2;
    int m = 2;
    double p = 0.7;
    uint64_t seed = 0;
};

using FractalSpec =
    std::variant<CountableSpec, CarpetSpec, SelfSimilarSpec, SpiralSpec, PercolationSpec>;

// Column statistics of a carpet: M occupied columns, C_j cells per occupied
// column (in column order), C_max, total cell count N.
struct CarpetStats {
    int M = 0;
    std::vector<int> C;
    int C_max = 0;
    int N = 0;
    bool uniform_fibres = false;
};

CarpetStats carpet_derived(const CarpetSpec& spec);

// Throws Error::Domain when the parameters violate the family's constraints
// (carpet grid/cell rules, maps leaving [0,1], percolation p <= m^-d, ...).
void validate(const FractalSpec& spec);

// key=value text format, e.g.
//   variant=carpet
//   m=2
//   n=3
//   cells=(0,0);(0,2);(1,1)
// '#' starts a comment.  parse_spec validates before returning.
FractalSpec parse_spec(const std::string& text);
std::string format_spec(const FractalSpec& spec);

// Short human-readable family label, e.g. "countable(p=1)".
std::string family_name(const FractalSpec& spec);

}  // namespace dimkit
