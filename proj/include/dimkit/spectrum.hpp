#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "dimkit/errors.hpp"

namespace dimkit {

enum class Provenance { Numeric, Analytic, LowerBound, UpperBound };

std::string to_string(Provenance p);

// Sampled theta -> value curve with provenance.
struct SpectrumCurve {
    struct Sample {
        double theta = 0.0;
        double value = 0.0;
    };

    std::vector<Sample> samples;  // thetas strictly increasing
    Provenance provenance = Provenance::Numeric;
    std::string family;

    // Linear interpolation; throws Error::Extrapolation outside the range.
    double value_at(double theta) const;
};

// Scale-gap function phi with phi(R) <= R, one of the closed forms the
// percolation dichotomy distinguishes.
struct PhiFunction {
    enum class Form { PowerLaw, LogCorrection, Identity };

    Form form = Form::Identity;
    double param = 0.0;  // PowerLaw: theta in (0,1); LogCorrection: c > 0

    static PhiFunction power_law(double theta) {
        if (!(theta > 0.0) || !(theta < 1.0))
            throw_domain("PhiFunction: power-law theta must be in (0,1)");
        return {Form::PowerLaw, theta};
    }
    static PhiFunction log_correction(double c) {
        if (!(c >= 0.0)) throw_domain("PhiFunction: log-correction c must be >= 0");
        return {Form::LogCorrection, c};
    }
    static PhiFunction identity() { return {Form::Identity, 0.0}; }

    double operator()(double R) const {
        switch (form) {
            case Form::PowerLaw: return std::pow(R, 1.0 / param);
            case Form::LogCorrection:
                // |log R| clamped at 1 so phi(R) <= R holds on all of (0,1].
                return R * std::pow(std::max(1.0, std::abs(std::log(R))), -param);
            case Form::Identity: return R;
        }
        return R;
    }
};

}  // namespace dimkit
