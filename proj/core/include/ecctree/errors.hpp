#pragma once

#include <stdexcept>
#include <string>

namespace ecc {

// Every failure mode callers are expected to branch on gets its own code.
enum class Errc {
    invalid_format,          // malformed input document
    index_out_of_range,      // vertex index outside 0..n-1
    duplicate_edge,          // edge listed twice
    cycle_detected,          // edge closes a cycle
    disconnected,            // fewer edges than vertices require
    invalid_degree_sequence, // positivity or degree-sum violation
    invalid_level_sequence,  // level-degree consistency violation
    bad_parameter,           // operation precondition violated
    cap_exceeded,            // enumeration larger than the configured cap
    unknown_theorem,         // verify/bound asked for an id we do not know
    monotonicity_violation,  // theorem-guaranteed ordering failed (library bug)
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
    throw Error(code, message);
}

} // namespace ecc
