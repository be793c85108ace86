#pragma once

#include <stdexcept>

namespace iccr {

// Thrown when a requested measurement outcome has (numerically) zero weight,
// e.g. postselecting +1 on a branch whose probability underflows.
struct ZeroProbabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace iccr
