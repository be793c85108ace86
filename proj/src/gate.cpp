#include "iccr/gate.hpp"

namespace iccr {

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "Sdg";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CX: return "CX";
    case GateKind::CY: return "CY";
    case GateKind::CZ: return "CZ";
    case GateKind::Swap: return "SWAP";
    case GateKind::TwoQubitClifford: return "C2";
  }
  return "?";
}

}  // namespace iccr
