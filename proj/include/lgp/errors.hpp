#pragma once

#include <stdexcept>

namespace lgp {

/// A size guard tripped: the input is outside the regime an exact
/// algorithm is meant for (Bell-number enumeration, subset DP, n^k tables).
class GuardError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace lgp
