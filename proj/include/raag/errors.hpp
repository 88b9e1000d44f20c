#pragma once

#include <stdexcept>
#include <string>

namespace raag {

/**
 * Stable error codes for every failure the library can report. Codes marked
 * "internal" below signal a broken invariant of the implementation rather
 * than bad user input; the CLI maps them to a distinct exit code.
 */
enum class ErrorCode {
    // graph construction
    DuplicateVertex,
    LoopEdge,
    DuplicateEdge,
    UnknownEndpoint,
    UnknownVertex,
    UnknownEdge,
    // homology classes
    DuplicateLabel,
    AmbientMismatch,
    NotAComponent,
    ZeroClass,
    // exact linear algebra
    NotSquare,
    NotSkewSymmetric,
    NotUnimodular,       // internal: unimodular witnesses failed to invert
    // search budgets
    SizeLimitExceeded,
    // decompositions and certificates
    NotComplete,
    NotBipartiteCoverable,
    RankNotTwo,
    SupportNotMultipartite,  // internal: contradicts the rank-2 structure theorem
    DependenceFailure,       // internal: part restrictions of a rank-2 wedge not parallel
    // diagram validation
    UnknownGenerator,
    OppositeSideMismatch,
    NonCommutingLabels,
    IncompleteMatching,
    GeneratorMismatchAtGluing,
    OrientationIncompatibleGluing,
    OddEulerCharacteristic,  // internal: a closed oriented surface cannot have odd euler
    // input handling
    ParseError,
    InvalidArgument,
};

const char* to_string(ErrorCode code);

// True for codes that indicate an implementation bug rather than bad input.
bool is_internal(ErrorCode code);

/**
 * Exception carrying a stable code plus a short location hint naming the
 * offending input element (vertex name, edge, file, field).
 */
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message, std::string location = "")
        : std::runtime_error(message), code_(code), location_(std::move(location)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& location() const noexcept { return location_; }

  private:
    ErrorCode code_;
    std::string location_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message,
                              const std::string& location = "") {
    throw Error(code, message, location);
}

inline const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::UnknownEndpoint: return "UnknownEndpoint";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::UnknownEdge: return "UnknownEdge";
        case ErrorCode::DuplicateLabel: return "DuplicateLabel";
        case ErrorCode::AmbientMismatch: return "AmbientMismatch";
        case ErrorCode::NotAComponent: return "NotAComponent";
        case ErrorCode::ZeroClass: return "ZeroClass";
        case ErrorCode::NotSquare: return "NotSquare";
        case ErrorCode::NotSkewSymmetric: return "NotSkewSymmetric";
        case ErrorCode::NotUnimodular: return "NotUnimodular";
        case ErrorCode::SizeLimitExceeded: return "SizeLimitExceeded";
        case ErrorCode::NotComplete: return "NotComplete";
        case ErrorCode::NotBipartiteCoverable: return "NotBipartiteCoverable";
        case ErrorCode::RankNotTwo: return "RankNotTwo";
        case ErrorCode::SupportNotMultipartite: return "SupportNotMultipartite";
        case ErrorCode::DependenceFailure: return "DependenceFailure";
        case ErrorCode::UnknownGenerator: return "UnknownGenerator";
        case ErrorCode::OppositeSideMismatch: return "OppositeSideMismatch";
        case ErrorCode::NonCommutingLabels: return "NonCommutingLabels";
        case ErrorCode::IncompleteMatching: return "IncompleteMatching";
        case ErrorCode::GeneratorMismatchAtGluing: return "GeneratorMismatchAtGluing";
        case ErrorCode::OrientationIncompatibleGluing: return "OrientationIncompatibleGluing";
        case ErrorCode::OddEulerCharacteristic: return "OddEulerCharacteristic";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

inline bool is_internal(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotUnimodular:
        case ErrorCode::SupportNotMultipartite:
        case ErrorCode::DependenceFailure:
        case ErrorCode::OddEulerCharacteristic:
            return true;
        default:
            return false;
    }
}

}  // namespace raag
