#pragma once

#include <stdexcept>
#include <string>

namespace gkz {

// Base classes split by how the CLI reports them: validation errors are
// usage/bad-input (exit 2), analytic errors are violated mathematical
// preconditions such as missing rapid decay or a wrong sector (exit 3).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

class ValidationError : public Error {
public:
    using Error::Error;
};

class AnalyticError : public Error {
public:
    using Error::Error;
};

#define GKZ_DEFINE_ERROR(Name, Base)                                        \
    class Name : public Base {                                              \
    public:                                                                 \
        explicit Name(const std::string& what = #Name) : Base(#Name, what) {} \
    }

GKZ_DEFINE_ERROR(NotLeadingOne, ValidationError);
GKZ_DEFINE_ERROR(IndexOutOfRange, ValidationError);
GKZ_DEFINE_ERROR(BadP, ValidationError);
GKZ_DEFINE_ERROR(DenominatorVanishes, ValidationError);
GKZ_DEFINE_ERROR(NonIntegralX0Exponent, ValidationError);
GKZ_DEFINE_ERROR(ZeroBaseWithFractionalExponent, ValidationError);
GKZ_DEFINE_ERROR(IntegerOverflow, ValidationError);
GKZ_DEFINE_ERROR(BadMatrix, ValidationError);
GKZ_DEFINE_ERROR(BadCycle, ValidationError);

GKZ_DEFINE_ERROR(NotRapidDecay, AnalyticError);
GKZ_DEFINE_ERROR(QuadratureNoConvergence, AnalyticError);
GKZ_DEFINE_ERROR(HalfTurn, AnalyticError);
GKZ_DEFINE_ERROR(GammaPole, AnalyticError);
GKZ_DEFINE_ERROR(WrongSector, AnalyticError);
GKZ_DEFINE_ERROR(TooSmallK, AnalyticError);
GKZ_DEFINE_ERROR(SinPole, AnalyticError);
GKZ_DEFINE_ERROR(BetaInNA, AnalyticError);
GKZ_DEFINE_ERROR(InconsistentRatios, AnalyticError);

#undef GKZ_DEFINE_ERROR

} // namespace gkz
