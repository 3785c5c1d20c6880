#pragma once

#include <stdexcept>
#include <string>

namespace suspflow {

// Domain error codes; the CLI prints the token on stderr and exits with 2.
enum class Err {
    NotHyperbolic,
    NegativeTrace,
    PowerOfOneGenerator,
    NotUnimodular,
    NotMixed,
    AlreadyMinimal,
    NotHyperbolicPower,
    DegenerateEmbedding,
    AmbiguousCrossing,
    IncoherentOrientation,
    UnsupportedOrbifold,
    BallTooSmall,
    CapExceeded,
    CertificateFailure,
};

inline const char* err_token(Err e) {
    switch (e) {
        case Err::NotHyperbolic: return "NotHyperbolic";
        case Err::NegativeTrace: return "NegativeTrace";
        case Err::PowerOfOneGenerator: return "PowerOfOneGenerator";
        case Err::NotUnimodular: return "NotUnimodular";
        case Err::NotMixed: return "NotMixed";
        case Err::AlreadyMinimal: return "AlreadyMinimal";
        case Err::NotHyperbolicPower: return "NotHyperbolicPower";
        case Err::DegenerateEmbedding: return "DegenerateEmbedding";
        case Err::AmbiguousCrossing: return "AmbiguousCrossing";
        case Err::IncoherentOrientation: return "IncoherentOrientation";
        case Err::UnsupportedOrbifold: return "UnsupportedOrbifold";
        case Err::BallTooSmall: return "BallTooSmall";
        case Err::CapExceeded: return "CapExceeded";
        case Err::CertificateFailure: return "CertificateFailure";
    }
    return "Unknown";
}

class DomainError : public std::runtime_error {
  public:
    DomainError(Err code, const std::string& what)
        : std::runtime_error(std::string(err_token(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

  private:
    Err code_;
};

// Malformed user input (bad matrix/word/point syntax); CLI exit code 1.
class ParseError : public std::runtime_error {
  public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace suspflow
