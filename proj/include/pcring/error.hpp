#pragma once

#include <stdexcept>
#include <string>

namespace pcring {

enum class ErrorKind {
    invalid_argument,
    division_by_zero,
    group_mismatch,
    semisimple_input,
    invalid_multiplicity,
    missing_trivial_factor,
    not_associative,
    schema,
};

/// Short stable name for an error kind, used in structured CLI errors.
const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace pcring
