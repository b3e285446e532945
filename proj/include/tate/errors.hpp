#pragma once

#include <stdexcept>
#include <string>

namespace tate {

// Mixing scalars or series that live over different fields.
struct field_mismatch : std::invalid_argument {
    explicit field_mismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A computation needed digits beyond the declared precision of its inputs.
// Callers may retry with a larger working precision; the result reported
// alongside this error is never partially correct.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// A matrix required to be invertible (or of full column rank) failed the
// requirement at the working precision.
struct singular_error : std::runtime_error {
    explicit singular_error(const std::string& what) : std::runtime_error(what) {}
};

// Structural misuse: wrong shapes, non-nested lattices, invalid posets,
// division by zero and the like.
struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace tate
