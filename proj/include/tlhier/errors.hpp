#pragma once

#include <stdexcept>
#include <string>

namespace tlhier {

// Bad user input: malformed regex, mismatched alphabets, invalid tables.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A size guard tripped (state blowup, monoid too large, ...).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A parameter base / class tag that is a recognized extension point but has
// no engine behind it.
struct UnsupportedBaseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace tlhier
