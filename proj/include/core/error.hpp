#pragma once

#include <stdexcept>
#include <string>

namespace bhf {

// Error kinds used across the engine. The CLI maps BadInput-ish kinds to
// exit code 2 and everything else to 1.
enum class ErrKind {
    NotAPartition,
    SurgeryDisconnected,
    MixedCircles,
    ArityTooSmall,
    AlgebraMismatch,
    NonTerminating,
    Inconsistent,
    SyntaxError,
    UnknownElement,
    IdempotentMismatch,
    UnknownName,
    NonStabilized,
    SpecInvalid,
    NotASubcomplex,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrKind kind() const { return kind_; }

  private:
    ErrKind kind_;
};

inline const char* err_kind_name(ErrKind k) {
    switch (k) {
        case ErrKind::NotAPartition: return "NotAPartition";
        case ErrKind::SurgeryDisconnected: return "SurgeryDisconnected";
        case ErrKind::MixedCircles: return "MixedCircles";
        case ErrKind::ArityTooSmall: return "ArityTooSmall";
        case ErrKind::AlgebraMismatch: return "AlgebraMismatch";
        case ErrKind::NonTerminating: return "NonTerminating";
        case ErrKind::Inconsistent: return "Inconsistent";
        case ErrKind::SyntaxError: return "SyntaxError";
        case ErrKind::UnknownElement: return "UnknownElement";
        case ErrKind::IdempotentMismatch: return "IdempotentMismatch";
        case ErrKind::UnknownName: return "UnknownName";
        case ErrKind::NonStabilized: return "NonStabilized";
        case ErrKind::SpecInvalid: return "SpecInvalid";
        case ErrKind::NotASubcomplex: return "NotASubcomplex";
        case ErrKind::Internal: return "Internal";
    }
    return "Unknown";
}

[[noreturn]] inline void fail(ErrKind kind, const std::string& msg) {
    throw Error(kind, std::string(err_kind_name(kind)) + ": " + msg);
}

} // namespace bhf
