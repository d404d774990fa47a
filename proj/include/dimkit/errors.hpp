#pragma once

#include <stdexcept>
#include <string>

namespace dimkit {

// Error taxonomy shared by the library and the CLI exit-code mapping.
struct Error : std::runtime_error {
    enum class Code {
        Domain,            // invalid argument / out-of-contract input
        Resolution,        // scale finer than the cloud's faithful resolution
        InsufficientData,  // not enough scales/points for the requested fit
        Extinction,        // percolation realization died
        Extrapolation,     // interpolation requested outside the sampled range
        Config,            // malformed spec/config text
        Io,                // file read/write failure
    };

    Code code;

    Error(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

[[noreturn]] inline void throw_domain(const std::string& msg) {
    throw Error(Error::Code::Domain, msg);
}
[[noreturn]] inline void throw_resolution(const std::string& msg) {
    throw Error(Error::Code::Resolution, msg);
}
[[noreturn]] inline void throw_insufficient(const std::string& msg) {
    throw Error(Error::Code::InsufficientData, msg);
}
[[noreturn]] inline void throw_config(const std::string& msg) {
    throw Error(Error::Code::Config, msg);
}

}  // namespace dimkit
