#pragma once

#include <stdexcept>
#include <string>

namespace nd {

enum class ErrorCode {
    Parameter,        // invalid spec/config parameters
    UnsupportedDomain,// operation refuses this domain (e.g. corners)
    Unsupported,      // unsupported spec/index combination
    Search,           // bracket or root search failed
    NoEigenvalue,     // no sigma(lambda) minimum below threshold
    Backend,          // MFS conditioning / diagnostics failure
    Precondition,     // caller violated an operation precondition
    Consistency,      // internal cross-check mismatch
    Resolution,       // result not stable under refinement
    Degenerate,       // degenerate critical point blocks construction
    Io,               // file I/O
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::Parameter: return "parameter";
        case ErrorCode::UnsupportedDomain: return "unsupported-domain";
        case ErrorCode::Unsupported: return "unsupported";
        case ErrorCode::Search: return "search";
        case ErrorCode::NoEigenvalue: return "no-eigenvalue-found";
        case ErrorCode::Backend: return "backend";
        case ErrorCode::Precondition: return "precondition";
        case ErrorCode::Consistency: return "consistency";
        case ErrorCode::Resolution: return "resolution";
        case ErrorCode::Degenerate: return "degenerate";
        case ErrorCode::Io: return "io";
    }
    return "unknown";
}

}  // namespace nd
