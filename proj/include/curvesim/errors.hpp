#pragma once

#include <stdexcept>
#include <string>

namespace curvesim {

// Base class for all library errors.  Subclasses name the violated
// contract so callers (and the CLI) can report the offending check.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("denominator is identically zero") {}
};

struct ZeroPolynomial : Error {
    ZeroPolynomial() : Error("operation undefined for the zero polynomial") {}
};

struct CurveIsLine : Error {
    CurveIsLine() : Error("curve is a line; lines admit infinitely many self-similarities") {}
};

struct CurveIsCircle : Error {
    CurveIsCircle() : Error("curve is a circle; circles admit infinitely many self-similarities") {}
};

struct ImproperParametrization : Error {
    ImproperParametrization() : Error("parametrization is not proper (not birational onto its image)") {}
};

struct DegenerateInput : Error {
    explicit DegenerateInput(const std::string& what) : Error("degenerate input: " + what) {}
};

struct UnequalDegrees : Error {
    UnequalDegrees() : Error("parametrizations have unequal degrees") {}
};

struct PreconditionViolated : Error {
    explicit PreconditionViolated(const std::string& what) : Error("precondition violated: " + what) {}
};

struct InternalDegenerate : Error {
    explicit InternalDegenerate(const std::string& what) : Error("internal degeneracy: " + what) {}
};

struct IncompatibleExtensions : Error {
    IncompatibleExtensions() : Error("witness values live over incompatible field extensions") {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace curvesim
