#pragma once

#include <stdexcept>
#include <string>

namespace paritylab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SingularModel : Error {
    SingularModel() : Error("discriminant is zero") {}
};
struct ZeroScaling : Error {
    ZeroScaling() : Error("transformation scale u must be nonzero") {}
};
struct DegenerateFamily : Error {
    explicit DegenerateFamily(const std::string& what) : Error(what) {}
};
struct NotAKernel : Error {
    NotAKernel() : Error("x0 is not a root of the 3-division polynomial") {}
};
struct ZeroTwist : Error {
    ZeroTwist() : Error("twist by zero") {}
};
struct NotMultiplicative : Error {
    NotMultiplicative() : Error("reduction is not multiplicative") {}
};
struct ZeroArgument : Error {
    ZeroArgument() : Error("Hilbert symbol arguments must be nonzero") {}
};
struct InconsistentDatum : Error {
    explicit InconsistentDatum(const std::string& what) : Error(what) {}
};
struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& what) : Error(what) {}
};
struct PathDisagreement : Error {
    explicit PathDisagreement(const std::string& what) : Error(what) {}
};
struct MissingLocalData : Error {
    explicit MissingLocalData(const std::string& what) : Error(what) {}
};
struct PrecisionExhausted : Error {
    explicit PrecisionExhausted(const std::string& what) : Error(what) {}
};
struct NonIntegralCoefficient : Error {
    explicit NonIntegralCoefficient(const std::string& what) : Error(what) {}
};
struct MismatchAtDegree : Error {
    int degree;
    explicit MismatchAtDegree(int n, const std::string& what)
        : Error(what), degree(n) {}
};
struct IdentityViolation : Error {
    explicit IdentityViolation(const std::string& what) : Error(what) {}
};
struct EmptyCorpus : Error {
    EmptyCorpus() : Error("corpus filters exclude every curve") {}
};
struct OutOfCases : Error {
    explicit OutOfCases(const std::string& what) : Error(what) {}
};
struct InternalError : Error {
    explicit InternalError(const std::string& what) : Error("internal: " + what) {}
};

} // namespace paritylab
