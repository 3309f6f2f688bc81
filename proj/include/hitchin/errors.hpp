#ifndef HITCHIN_ERRORS_HPP
#define HITCHIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hitchin {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Arithmetic kernel
struct SearchBoundExceeded : Error {
  explicit SearchBoundExceeded(const std::string& msg) : Error(msg) {}
};
struct ZeroPolynomial : Error {
  explicit ZeroPolynomial(const std::string& msg) : Error(msg) {}
};
struct BothZero : Error {
  explicit BothZero(const std::string& msg) : Error(msg) {}
};
struct FieldMismatch : Error {
  explicit FieldMismatch(const std::string& msg) : Error(msg) {}
};

// Curve
struct NotSquarefree : Error {
  explicit NotSquarefree(const std::string& msg) : Error(msg) {}
};
struct EvenDegree : Error {
  explicit EvenDegree(const std::string& msg) : Error(msg) {}
};
struct GenusTooSmall : Error {
  explicit GenusTooSmall(const std::string& msg) : Error(msg) {}
};
struct GenusMismatch : Error {
  explicit GenusMismatch(const std::string& msg) : Error(msg) {}
};
struct BadCharacteristic : Error {
  explicit BadCharacteristic(const std::string& msg) : Error(msg) {}
};
struct PointNotOnCurve : Error {
  explicit PointNotOnCurve(const std::string& msg) : Error(msg) {}
};
struct ZeroFunction : Error {
  explicit ZeroFunction(const std::string& msg) : Error(msg) {}
};

// Picard
struct CurveMismatch : Error {
  explicit CurveMismatch(const std::string& msg) : Error(msg) {}
};
struct RootsNotRational : Error {
  explicit RootsNotRational(const std::string& msg) : Error(msg) {}
};

// Cover / spectral / strata
struct NotEffective : Error {
  explicit NotEffective(const std::string& msg) : Error(msg) {}
};
struct ZeroSection : Error {
  explicit ZeroSection(const std::string& msg) : Error(msg) {}
};
struct NotNodalIntegral : Error {
  explicit NotNodalIntegral(const std::string& msg) : Error(msg) {}
};
struct BadTrivializationPoint : Error {
  explicit BadTrivializationPoint(const std::string& msg) : Error(msg) {}
};
struct WrongDegree : Error {
  explicit WrongDegree(const std::string& msg) : Error(msg) {}
};
struct ZeroScalar : Error {
  explicit ZeroScalar(const std::string& msg) : Error(msg) {}
};
struct NotAVHSFixedPoint : Error {
  explicit NotAVHSFixedPoint(const std::string& msg) : Error(msg) {}
};
struct PreconditionViolated : Error {
  explicit PreconditionViolated(const std::string& msg) : Error(msg) {}
};

// Wobbly search
struct BudgetExhausted : Error {
  explicit BudgetExhausted(const std::string& msg) : Error(msg) {}
};

// CLI
struct ConfigError : Error {
  explicit ConfigError(const std::string& msg) : Error(msg) {}
};

}  // namespace hitchin

#endif
