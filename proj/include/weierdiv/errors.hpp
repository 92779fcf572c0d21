#pragma once

#include <stdexcept>
#include <string>

namespace weierdiv {

enum class errc {
    range,
    invalid_sequence,
    solver,
    degenerate_fiber,
    calibration,
    domain_too_large,
    near_pole,
    insufficient_sampling,
    branch_tracking,
    overlap,
    misuse,
    undefined_fit,
    input,
    internal,
};

/// Library-wide exception type. `kind()` is the stable machine-readable tag
/// used in CLI error JSON.
class error : public std::runtime_error {
  public:
    error(errc code, const std::string& msg) : std::runtime_error(msg), code_(code) {}

    errc code() const noexcept { return code_; }

    const char* kind() const noexcept {
        switch (code_) {
            case errc::range: return "range";
            case errc::invalid_sequence: return "invalid_sequence";
            case errc::solver: return "solver";
            case errc::degenerate_fiber: return "degenerate_fiber";
            case errc::calibration: return "calibration";
            case errc::domain_too_large: return "domain_too_large";
            case errc::near_pole: return "near_pole";
            case errc::insufficient_sampling: return "insufficient_sampling";
            case errc::branch_tracking: return "branch_tracking";
            case errc::overlap: return "overlap";
            case errc::misuse: return "misuse";
            case errc::undefined_fit: return "undefined_fit";
            case errc::input: return "input";
            case errc::internal: return "internal";
        }
        return "unknown";
    }

  private:
    errc code_;
};

[[noreturn]] inline void throw_error(errc code, const std::string& msg) { throw error(code, msg); }

}  // namespace weierdiv
