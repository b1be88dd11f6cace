#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace smdfc {

inline constexpr const char* kVersion = "0.1.0";

/// Bad user-supplied configuration (file contents, layout mismatches, rank bounds).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise unusable state handed to a numeric routine.
struct InvalidStateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Simulation blow-up; carries the step index at which the velocity ceiling was crossed.
struct DivergenceError : std::runtime_error {
    DivergenceError(std::size_t step_index, const std::string& what)
        : std::runtime_error(what), step(step_index) {}
    std::size_t step;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Pipeline stage failure wrapper; `stage` names the failing stage for the CLI exit path.
struct StageError : std::runtime_error {
    StageError(std::string stage_name, const std::string& what)
        : std::runtime_error("stage '" + stage_name + "': " + what), stage(std::move(stage_name)) {}
    std::string stage;
};

// Internal invariants that cannot fail for valid inputs.
#define SMDFC_ASSERT(cond, msg)                                              \
    do {                                                                     \
        if (!(cond)) throw std::logic_error(std::string("internal: ") + msg); \
    } while (0)

}  // namespace smdfc
