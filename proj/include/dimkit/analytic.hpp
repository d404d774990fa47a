#pragma once

#include <utility>

#include "dimkit/fractal_spec.hpp"
#include "dimkit/spectrum.hpp"

namespace dimkit {

// Exact dimension values for a catalogued family.  `kind` records how the
// numbers are to be read: exact, upper bounds only (self-similar without the
// open set condition), or almost-sure conditional values (percolation).
struct DimensionReport {
    enum class Kind { Exact, UpperBoundsOnly, AlmostSure };

    double hausdorff = 0.0;
    double lower_box = 0.0;
    double upper_box = 0.0;
    double assouad = 0.0;
    Kind kind = Kind::Exact;
    bool uniform_fibres = false;  // carpets only
};

DimensionReport dims(const FractalSpec& spec);

// Bi-Hoelder exponent pair 0 < alpha <= 1 <= beta.
struct HolderExponents {
    double alpha = 1.0;
    double beta = 1.0;
};

struct AnalyticValue {
    double value = 0.0;
    bool almost_sure = false;             // percolation statements
    bool assumes_no_concentration = false;  // self-similar spectrum collapse
};

// Closed-form Assouad spectrum at theta for the catalogued families.
AnalyticValue assouad_spectrum_formula(const FractalSpec& spec, double theta);

// Intermediate-dimension value or best known bounds at theta.
struct IntermediateBounds {
    double lower = 0.0;
    double upper = 0.0;
    bool exact = false;
};

IntermediateBounds intermediate_formula_or_bounds(const FractalSpec& spec, double theta);

// General spectrum envelope: lower = box, upper = min(box/(1-theta), assouad).
std::pair<double, double> lemma1_bounds(double box, double assouad, double theta);

// General intermediate lower bound max(0, assouad - (assouad - lower_box)/theta).
double lemma3_bound(double lower_box, double assouad, double theta);

// Spectrum envelope of any (alpha,beta)-Hoelder image of a set with the given
// spectrum; returns (lower_curve, upper_curve) sampled on the input thetas.
std::pair<SpectrumCurve, SpectrumCurve> holder_transform(const SpectrumCurve& curve,
                                                         const HolderExponents& exps);

// Upper bounds on alpha for (alpha,beta)-Hoelder maps of (0,1) onto the
// polynomial spiral: the spectrum-derived bound and the sharp bound, both
// capped at 1.  sharp <= spectrum always.
std::pair<double, double> winding_bounds(double p, double beta);

// Two-branch spectrum through a single phase transition at theta = rho:
// min(box + ((1-rho) theta / ((1-theta) rho)) (assouad - box), assouad).
double rho_formula(double box, double assouad, double rho, double theta);

// Which side of the percolation phi-Assouad dichotomy a phi form falls on.
enum class PhiRegime { AssouadRegime, BoxRegime, Indeterminate };

PhiRegime percolation_phi_regime(const PhiFunction& phi);

// Entropy of the McMullen measure for a carpet (used by the intermediate
// lower bound).
double mcmullen_entropy(const CarpetSpec& spec);

// Carpet spectrum phase-transition location log m / log n.
double carpet_transition(const CarpetSpec& spec);

// Sufficient open-set-condition check for a self-similar system: images of
// (0,1) pairwise disjoint.
bool osc_holds(const SelfSimilarSpec& spec);

// Hutchinson exponent: the s solving sum c_i^s = 1.
double hutchinson_exponent(const SelfSimilarSpec& spec);

}  // namespace dimkit
