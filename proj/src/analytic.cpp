#include "dimkit/analytic.hpp"

#include <algorithm>
#include <cmath>

#include "dimkit/errors.hpp"

namespace dimkit {

namespace {

void check_theta(double theta) {
    if (!(theta > 0.0) || !(theta < 1.0)) throw_domain("theta must be in (0,1)");
}

struct CarpetDims {
    double hausdorff, box, assouad;
};

CarpetDims carpet_dims(const CarpetSpec& spec) {
    const auto st = carpet_derived(spec);
    const double lm = std::log(spec.m), ln = std::log(spec.n);
    const double gamma = lm / ln;
    double sum = 0.0;
    for (int c : st.C) sum += std::pow(static_cast<double>(c), gamma);
    CarpetDims d;
    d.hausdorff = std::log(sum) / lm;
    d.box = std::log(static_cast<double>(st.M)) / lm +
            std::log(static_cast<double>(st.N) / st.M) / ln;
    d.assouad = std::log(static_cast<double>(st.M)) / lm +
                std::log(static_cast<double>(st.C_max)) / ln;
    return d;
}

}  // namespace

bool osc_holds(const SelfSimilarSpec& spec) {
    // Images of (0,1) pairwise disjoint: sort by left endpoint and check
    // consecutive overlap.
    std::vector<std::pair<double, double>> iv;
    for (const auto& m : spec.maps) iv.emplace_back(m.t, m.t + m.c);
    std::sort(iv.begin(), iv.end());
    for (std::size_t i = 1; i < iv.size(); ++i)
        if (iv[i].first < iv[i - 1].second - 1e-15) return false;
    return true;
}

double hutchinson_exponent(const SelfSimilarSpec& spec) {
    if (spec.maps.size() == 1) return 0.0;
    auto sum_at = [&](double s) {
        double sum = 0.0;
        for (const auto& m : spec.maps) sum += std::pow(m.c, s);
        return sum;
    };
    double lo = 0.0, hi = 1.0;
    if (sum_at(1.0) >= 1.0) return 1.0;  // maps fill [0,1] up to measure
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        (sum_at(mid) > 1.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

double mcmullen_entropy(const CarpetSpec& spec) {
    const auto st = carpet_derived(spec);
    const double lm = std::log(spec.m), ln = std::log(spec.n);
    const double gamma = lm / ln;
    const double H = carpet_dims(spec).hausdorff;
    double sum = 0.0;
    for (int c : st.C) {
        const double cj = static_cast<double>(c);
        sum += std::pow(cj, gamma) * ((gamma - 1.0) * std::log(cj) - H * lm);
    }
    return -std::pow(static_cast<double>(spec.m), -H) * sum;
}

double carpet_transition(const CarpetSpec& spec) {
    return std::log(spec.m) / std::log(spec.n);
}

DimensionReport dims(const FractalSpec& spec) {
    validate(spec);
    DimensionReport rep;
    std::visit([&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CountableSpec>) {
            rep.hausdorff = 0.0;
            rep.lower_box = rep.upper_box = 1.0 / (1.0 + s.p);
            rep.assouad = 1.0;
        } else if constexpr (std::is_same_v<T, CarpetSpec>) {
            const auto d = carpet_dims(s);
            rep.hausdorff = d.hausdorff;
            rep.lower_box = rep.upper_box = d.box;
            rep.assouad = d.assouad;
            rep.uniform_fibres = carpet_derived(s).uniform_fibres;
        } else if constexpr (std::is_same_v<T, SelfSimilarSpec>) {
            const double h = hutchinson_exponent(s);
            rep.hausdorff = rep.lower_box = rep.upper_box = rep.assouad = h;
            if (!osc_holds(s)) rep.kind = DimensionReport::Kind::UpperBoundsOnly;
        } else if constexpr (std::is_same_v<T, SpiralSpec>) {
            rep.hausdorff = rep.lower_box = rep.upper_box = 1.0;
            rep.assouad = 2.0;
        } else {
            const double box = s.dim + std::log(s.p) / std::log(s.m);
            rep.hausdorff = rep.lower_box = rep.upper_box = box;
            rep.assouad = static_cast<double>(s.dim);
            rep.kind = DimensionReport::Kind::AlmostSure;
        }
    }, spec);
    return rep;
}

AnalyticValue assouad_spectrum_formula(const FractalSpec& spec, double theta) {
    check_theta(theta);
    validate(spec);
    AnalyticValue out;
    std::visit([&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CountableSpec>) {
            out.value = std::min(1.0 / ((1.0 + s.p) * (1.0 - theta)), 1.0);
        } else if constexpr (std::is_same_v<T, CarpetSpec>) {
            const auto st = carpet_derived(s);
            const double rho = carpet_transition(s);
            if (st.uniform_fibres || theta >= rho) {
                out.value = carpet_dims(s).assouad;
            } else {
                const double lm = std::log(s.m), ln = std::log(s.n);
                const double M = st.M, N = st.N, Cmax = st.C_max;
                out.value = (std::log(M) - theta * std::log(N / Cmax)) /
                                ((1.0 - theta) * lm) +
                            (std::log(N / M) - theta * std::log(Cmax)) /
                                ((1.0 - theta) * ln);
            }
        } else if constexpr (std::is_same_v<T, SelfSimilarSpec>) {
            out.value = dims(spec).upper_box;  // spectrum collapse to the box value
            out.assumes_no_concentration = true;
        } else if constexpr (std::is_same_v<T, SpiralSpec>) {
            const double rho = s.p / (1.0 + s.p);
            out.value = theta < rho ? 1.0 + theta / (s.p * (1.0 - theta)) : 2.0;
        } else {
            out.value = dims(spec).upper_box;  // a.s. constant spectrum
            out.almost_sure = true;
        }
    }, spec);
    return out;
}

IntermediateBounds intermediate_formula_or_bounds(const FractalSpec& spec, double theta) {
    check_theta(theta);
    validate(spec);
    IntermediateBounds out;
    const auto rep = dims(spec);
    const double l3 = lemma3_bound(rep.lower_box, rep.assouad, theta);

    if (const auto* countable = std::get_if<CountableSpec>(&spec)) {
        out.lower = out.upper = theta / (theta + countable->p);
        out.exact = true;
        return out;
    }
    if (const auto* carpet = std::get_if<CarpetSpec>(&spec)) {
        const auto st = carpet_derived(*carpet);
        const double lm = std::log(carpet->m), ln = std::log(carpet->n);
        const double h = mcmullen_entropy(*carpet);
        const double paper_lower =
            rep.hausdorff + theta * (std::log(static_cast<double>(st.N)) - h) / lm;
        out.lower = std::max(l3, paper_lower);
        out.upper = rep.upper_box;
        const double validity = (lm / (2.0 * ln)) * (lm / (2.0 * ln));
        if (theta < validity) {
            const double paper_upper =
                rep.hausdorff + 2.0 * std::log(static_cast<double>(st.C_max)) *
                                    std::log(ln / lm) / (-ln * std::log(theta));
            out.upper = std::min(out.upper, paper_upper);
        }
        out.exact = st.uniform_fibres;  // bounds pinch when fibres are uniform
        return out;
    }
    out.lower = l3;
    out.upper = rep.upper_box;
    out.exact = out.upper - out.lower < 1e-12;
    return out;
}

std::pair<double, double> lemma1_bounds(double box, double assouad, double theta) {
    check_theta(theta);
    if (box < 0.0 || box > assouad) throw_domain("lemma1_bounds: need 0 <= box <= assouad");
    const double upper = std::min(box / (1.0 - theta), assouad);
    return {box, upper};
}

double lemma3_bound(double lower_box, double assouad, double theta) {
    check_theta(theta);
    if (lower_box < 0.0 || lower_box > assouad)
        throw_domain("lemma3_bound: need 0 <= lower_box <= assouad");
    return std::max(0.0, assouad - (assouad - lower_box) / theta);
}

std::pair<SpectrumCurve, SpectrumCurve> holder_transform(const SpectrumCurve& curve,
                                                         const HolderExponents& exps) {
    if (!(exps.alpha > 0.0) || exps.alpha > 1.0 || exps.beta < 1.0)
        throw_domain("holder_transform: need 0 < alpha <= 1 <= beta");
    SpectrumCurve lower = curve, upper = curve;
    lower.provenance = Provenance::LowerBound;
    upper.provenance = Provenance::UpperBound;
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
        const double theta = curve.samples[i].theta;
        const double q_low = exps.beta * theta / exps.alpha;
        const double q_up = exps.alpha * theta / exps.beta;
        lower.samples[i].value =
            q_low >= 1.0 ? 0.0
                         : (1.0 - q_low) / (exps.beta * (1.0 - theta)) * curve.value_at(q_low);
        upper.samples[i].value =
            (1.0 - q_up) / (exps.alpha * (1.0 - theta)) * curve.value_at(q_up);
    }
    return {std::move(lower), std::move(upper)};
}

std::pair<double, double> winding_bounds(double p, double beta) {
    if (!(p >= 1.0) || !(beta >= 1.0)) throw_domain("winding_bounds: need p, beta >= 1");
    const double spectrum = std::min(1.0, (p * beta + beta) / (p + 2.0 * beta));
    const double sharp = std::min(1.0, p * beta / (p + beta));
    return {spectrum, sharp};
}

double rho_formula(double box, double assouad, double rho, double theta) {
    check_theta(theta);
    if (!(rho > 0.0) || !(rho < 1.0)) throw_domain("rho_formula: rho must be in (0,1)");
    if (box < 0.0 || box > assouad) throw_domain("rho_formula: need 0 <= box <= assouad");
    const double rise = (1.0 - rho) * theta / ((1.0 - theta) * rho) * (assouad - box);
    return std::min(box + rise, assouad);
}

PhiRegime percolation_phi_regime(const PhiFunction& phi) {
    switch (phi.form) {
        case PhiFunction::Form::PowerLaw:
            // log(R/phi(R)) = (1/theta - 1) log(1/R) dominates log|log R|.
            return PhiRegime::BoxRegime;
        case PhiFunction::Form::Identity:
            return PhiRegime::AssouadRegime;
        case PhiFunction::Form::LogCorrection:
            // log(R/phi(R)) = c log|log R|: the ratio tends to the constant c,
            // strictly between the theorem's hypotheses unless c = 0.
            return phi.param == 0.0 ? PhiRegime::AssouadRegime : PhiRegime::Indeterminate;
    }
    return PhiRegime::Indeterminate;
}

}  // namespace dimkit
