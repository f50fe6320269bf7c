#pragma once

#include <stdexcept>

namespace twoeig {

// Raised when a computation contradicts an invariant the classification
// theory guarantees; always a bug signal, never a user error.
struct internal_consistency_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace twoeig
