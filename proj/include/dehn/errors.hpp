#pragma once

#include <stdexcept>
#include <string>

namespace dehn {

// A literal that does not match its grammar or denotes no valid value
// (0/0, a non-reduced pair without the reduce flag).
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A computation left the exactly representable integer range. Results are
// never silently wrapped.
struct overflow_error : std::runtime_error {
    explicit overflow_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace dehn
