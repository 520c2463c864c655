// Typed error conditions shared across the library. Every throwing path in
// qdmcav raises one of these so callers (and the CLI exit-code mapping) can
// tell configuration mistakes from numeric degeneracies.

#ifndef QDMCAV_ERRORS_HPP
#define QDMCAV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qdmcav {

// Bad input values or malformed configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numeric degeneracy hit while evaluating a model formula.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NegativeRate : ConfigError {
    explicit NegativeRate(const std::string& what) : ConfigError("NegativeRate: " + what) {}
};

struct ZeroScaleUnit : ConfigError {
    explicit ZeroScaleUnit(const std::string& what) : ConfigError("ZeroScaleUnit: " + what) {}
};

struct DegenerateDenominator : NumericError {
    explicit DegenerateDenominator(const std::string& what)
        : NumericError("DegenerateDenominator: " + what) {}
};

struct ZeroTunneling : NumericError {
    explicit ZeroTunneling(const std::string& what) : NumericError("ZeroTunneling: " + what) {}
};

struct NoTunneling : NumericError {
    explicit NoTunneling(const std::string& what) : NumericError("NoTunneling: " + what) {}
};

struct EmptyGrid : ConfigError {
    explicit EmptyGrid(const std::string& what) : ConfigError("EmptyGrid: " + what) {}
};

struct StrictOrderViolated : ConfigError {
    explicit StrictOrderViolated(const std::string& what)
        : ConfigError("StrictOrderViolated: " + what) {}
};

struct StepTooLarge : ConfigError {
    explicit StepTooLarge(const std::string& what) : ConfigError("StepTooLarge: " + what) {}
};

struct SingularSystem : NumericError {
    explicit SingularSystem(const std::string& what) : NumericError("SingularSystem: " + what) {}
};

struct PoleAtMinusOne : NumericError {
    explicit PoleAtMinusOne(const std::string& what) : NumericError("PoleAtMinusOne: " + what) {}
};

struct ZeroKappa : NumericError {
    explicit ZeroKappa(const std::string& what) : NumericError("ZeroKappa: " + what) {}
};

struct ConventionViolation : NumericError {
    explicit ConventionViolation(const std::string& what)
        : NumericError("ConventionViolation: " + what) {}
};

struct ZeroDispersion : NumericError {
    explicit ZeroDispersion(const std::string& what) : NumericError("ZeroDispersion: " + what) {}
};

struct PeakAtBoundary : NumericError {
    explicit PeakAtBoundary(const std::string& what) : NumericError("PeakAtBoundary: " + what) {}
};

struct NoHalfCrossing : NumericError {
    explicit NoHalfCrossing(const std::string& what) : NumericError("NoHalfCrossing: " + what) {}
};

}  // namespace qdmcav

#endif
