#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace weightsys {

enum class ErrorKind {
    DanglingHalfEdge,
    PairingNotInvolution,
    DuplicateLegLabel,
    BadLegRange,
    BadIndex,
    LegCountMismatch,
    NotAPermutation,
    NotAThreeGraph,
    LoopEdge,
    InvalidDiagram,
    InvalidAlgebra,
    DegenerateForm,
    OrthonormalizationFailed,
    BackendMismatch,
    HasLegs,
    TableMiss,
    TooLarge,
    ZeroDimension,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DanglingHalfEdge: return "DanglingHalfEdge";
        case ErrorKind::PairingNotInvolution: return "PairingNotInvolution";
        case ErrorKind::DuplicateLegLabel: return "DuplicateLegLabel";
        case ErrorKind::BadLegRange: return "BadLegRange";
        case ErrorKind::BadIndex: return "BadIndex";
        case ErrorKind::LegCountMismatch: return "LegCountMismatch";
        case ErrorKind::NotAPermutation: return "NotAPermutation";
        case ErrorKind::NotAThreeGraph: return "NotAThreeGraph";
        case ErrorKind::LoopEdge: return "LoopEdge";
        case ErrorKind::InvalidDiagram: return "InvalidDiagram";
        case ErrorKind::InvalidAlgebra: return "InvalidAlgebra";
        case ErrorKind::DegenerateForm: return "DegenerateForm";
        case ErrorKind::OrthonormalizationFailed: return "OrthonormalizationFailed";
        case ErrorKind::BackendMismatch: return "BackendMismatch";
        case ErrorKind::HasLegs: return "HasLegs";
        case ErrorKind::TableMiss: return "TableMiss";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::ZeroDimension: return "ZeroDimension";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Library-wide exception. `detail()` names the offending id, code or value.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
          kind_(kind),
          detail_(std::move(detail)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

}  // namespace weightsys
