#pragma once

#include <stdexcept>
#include <string>

namespace endoscope {

// Signals a broken internal invariant (a bug), never bad input. The CLI
// maps this to exit code 2; input problems use std::invalid_argument and
// friends and map to exit code 1.
struct internal_error : std::logic_error {
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace endoscope
