#pragma once

#include <cstdint>
#include <string>

namespace iccr {

// Elementary Clifford gate kinds plus a composite two-qubit Clifford
// referencing the canonical 11520-element table by index.
enum class GateKind : std::uint8_t {
  H,
  S,
  Sdg,
  X,
  Y,
  Z,
  CX,   // control a, target b
  CY,   // control a, target b
  CZ,
  Swap,
  TwoQubitClifford,  // canonical-table element `index` applied to (a, b)
};

inline bool is_single_qubit(GateKind k) { return k <= GateKind::Z; }

struct GateRecord {
  GateKind kind;
  std::uint32_t a = 0;
  std::uint32_t b = 0;      // unused for single-qubit kinds
  std::uint16_t index = 0;  // canonical-table index for TwoQubitClifford

  static GateRecord one(GateKind k, std::uint32_t site) { return {k, site, site, 0}; }
  static GateRecord two(GateKind k, std::uint32_t a, std::uint32_t b) { return {k, a, b, 0}; }
  static GateRecord composite(std::uint32_t a, std::uint32_t b, std::uint16_t index) {
    return {GateKind::TwoQubitClifford, a, b, index};
  }
};

std::string to_string(GateKind k);

}  // namespace iccr
