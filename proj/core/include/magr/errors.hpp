#pragma once

#include <stdexcept>
#include <string>

namespace magr {

// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument or configuration (CLI maps these to exit code 2).
class argument_error : public error {
public:
    using error::error;
};

// File could not be opened / read / written (exit code 3).
class io_error : public error {
public:
    using error::error;
};

// Input violates a schema or numeric contract (exit code 4).
class data_error : public error {
public:
    using error::error;
};

// Requested allocation exceeds the configured memory cap.
class capacity_error : public data_error {
public:
    using data_error::data_error;
};

// Tensor-file violations, one kind per failure mode.
enum class parse_kind {
    bad_magic,
    unsupported_version,
    unsupported_dtype,
    bad_ndim,
    bad_dims,
    truncated_header,
    truncated_payload,
    trailing_data,
    non_finite,
};

const char* to_string(parse_kind k);

class parse_error : public data_error {
public:
    parse_error(parse_kind kind, const std::string& detail)
        : data_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    parse_kind kind() const { return kind_; }

private:
    parse_kind kind_;
};

}  // namespace magr
