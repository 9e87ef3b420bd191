#pragma once

#include <stdexcept>

namespace armleg {

/// A caller broke an operation's contract: mismatched orders, an exponent
/// past the truncation order, a cell outside its partition, and so on.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Mathematical preconditions (non-unit constant term, z = q^0) are reported
// with std::domain_error; coefficient overflow with std::overflow_error.

}  // namespace armleg
