#pragma once

#include <stdexcept>
#include <string>

namespace orbiroot {

/// Bad input or an operation outside its supported domain (e.g. genus > 0
/// where only orbifold P^1 is modelled).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid configuration record; carries the offending field name.
class ConfigError : public DomainError {
public:
    ConfigError(std::string field, const std::string& message)
        : DomainError(field + ": " + message), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

/// Two computations that must agree did not. Never expected in a correct build.
class VerificationError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace orbiroot
