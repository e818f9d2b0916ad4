#pragma once

/**
 * @file error.hpp
 * @brief Exception hierarchy shared by every residua module.
 *
 * The CLI maps each class onto a process exit code:
 * theorem_violation -> 1, input_error / semiring_mismatch -> 2,
 * dimension_mismatch -> 3, io_error -> 4.
 */

#include <stdexcept>
#include <string>

namespace residua {

class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands carry different semiring tags.
class semiring_mismatch : public error {
public:
    using error::error;
};

/// Vector/matrix shapes are incompatible.
class dimension_mismatch : public error {
public:
    using error::error;
};

/// Malformed input: bad scalar text, schema violation, unsupported instance.
class input_error : public error {
public:
    using error::error;
};

/// An identity that must hold by construction failed. Always a library bug.
class theorem_violation : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

} // namespace residua
