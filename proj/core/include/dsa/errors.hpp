#pragma once

#include <stdexcept>
#include <string>

namespace dsa {

// Named error conditions of the simulator's public operations. Each maps to
// one of the error names in the module contracts.

struct InvalidFractionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct LengthMismatchError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfBoundsError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct UnknownSensorIdError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct InvalidEtaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A reduced row with zero coefficients but a nonzero payload: cannot arise
// from consistent packet streams, signalled if ever observed.
struct CorruptSystemError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A decoded payload disagrees with planted ground truth. Always a bug; the
// collector checks this on every trial.
struct PayloadMismatchError : std::logic_error {
    using std::logic_error::logic_error;
};

// Configuration file / parameter problems. `key` names the offending entry.
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& key, const std::string& what)
        : std::runtime_error("config key '" + key + "': " + what), key_(key) {}
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

struct CsvError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace dsa
