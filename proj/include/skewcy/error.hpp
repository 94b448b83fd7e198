#ifndef SKEWCY_ERROR_HPP
#define SKEWCY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace skewcy {

enum class Errc {
    FieldMismatch,
    ZeroInput,
    ZeroDivision,
    NotPrime,
    CharacteristicZeroRequired,
    DegreeNotPreserved,
    InhomogeneousRelation,
    DegreeBoundExceeded,
    ZeroDegreeGenerator,
    SingularMatrix,
    AlgebraMismatch,
    ZeroScalar,
    NotQuadratic,
    NotCertified,
    DegeneratePairing,
    AutomorphismValidationFailed,
    DualNotPreserved,
    NoRuleAvailable,
    NonCommutingFamily,
    NotEigenvector,
    NotNormal,
    NotMultiplicative,
    GroupClosureExceeded,
    ZeroASIndex,
    NotRepresentable,
    SyntaxError,
    UnknownGenerator,
    DegreeMismatch,
    FieldLiteralOutOfRange,
    UnknownKey,
    Usage,
};

inline const char* errc_name(Errc c) {
    switch (c) {
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::ZeroDivision: return "ZeroDivision";
    case Errc::NotPrime: return "NotPrime";
    case Errc::CharacteristicZeroRequired: return "CharacteristicZeroRequired";
    case Errc::DegreeNotPreserved: return "DegreeNotPreserved";
    case Errc::InhomogeneousRelation: return "InhomogeneousRelation";
    case Errc::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case Errc::ZeroDegreeGenerator: return "ZeroDegreeGenerator";
    case Errc::SingularMatrix: return "SingularMatrix";
    case Errc::AlgebraMismatch: return "AlgebraMismatch";
    case Errc::ZeroScalar: return "ZeroScalar";
    case Errc::NotQuadratic: return "NotQuadratic";
    case Errc::NotCertified: return "NotCertified";
    case Errc::DegeneratePairing: return "DegeneratePairing";
    case Errc::AutomorphismValidationFailed: return "AutomorphismValidationFailed";
    case Errc::DualNotPreserved: return "DualNotPreserved";
    case Errc::NoRuleAvailable: return "NoRuleAvailable";
    case Errc::NonCommutingFamily: return "NonCommutingFamily";
    case Errc::NotEigenvector: return "NotEigenvector";
    case Errc::NotNormal: return "NotNormal";
    case Errc::NotMultiplicative: return "NotMultiplicative";
    case Errc::GroupClosureExceeded: return "GroupClosureExceeded";
    case Errc::ZeroASIndex: return "ZeroASIndex";
    case Errc::NotRepresentable: return "NotRepresentable";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownGenerator: return "UnknownGenerator";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::FieldLiteralOutOfRange: return "FieldLiteralOutOfRange";
    case Errc::UnknownKey: return "UnknownKey";
    case Errc::Usage: return "Usage";
    }
    return "Unknown";
}

/// All library failures are reported through this exception; `code()` names the contract that was violated.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code), message_(what) {}

    Errc code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& message() const noexcept { return message_; }

private:
    Errc code_;
    std::string message_;
};

}  // namespace skewcy

#endif
