#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace iccr {

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Dense-oracle cross-checks at small sizes: exact-branch circuits replay to
// the exact state, per-step fidelities match dense projections, the additive
// entropy formula matches the full-string enumeration, and the gadget equals
// a dense T gate. `max_n` caps the widths exercised (values above 8 are
// clamped where the enumeration oracle requires it).
std::vector<ValidationCheck> run_validation_suite(std::uint32_t max_n, std::uint64_t seed);

// Prints one line per check; returns true when all passed.
bool print_validation(const std::vector<ValidationCheck>& checks, std::ostream& out);

}  // namespace iccr
