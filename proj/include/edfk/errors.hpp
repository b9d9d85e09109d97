#pragma once

#include <stdexcept>
#include <string>

namespace edfk {

// Bad argument values (negative counts, unknown labels, overlapping regions).
struct argument_error : std::invalid_argument {
    explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// Two graphs cannot be combined (different boundary capacity or label universe).
struct structural_mismatch : std::invalid_argument {
    explicit structural_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A documented precondition does not hold.
struct contract_error : std::logic_error {
    explicit contract_error(const std::string& what) : std::logic_error(what) {}
};

// An exhaustive computation was asked for above its configured ceiling.
struct resource_limit_error : std::runtime_error {
    explicit resource_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input document.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace edfk
