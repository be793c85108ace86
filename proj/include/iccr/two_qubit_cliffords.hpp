#pragma once

#include <cstdint>
#include <vector>

#include "iccr/gate.hpp"
#include "iccr/pauli_string.hpp"

namespace iccr {

struct TwoQubitCliffordEntry {
  // Time-ordered elementary realization on sites 0 and 1.
  std::vector<GateRecord> sequence;
  // Adjoint-conjugated generator images U^dag P U on two qubits.
  PauliString img_xa, img_za, img_xb, img_zb;
};

// The 11520 two-qubit Clifford unitaries modulo global phase, enumerated as
//   (A (x) B) * M * (G^{m1} (x) G^{m2})
// with M one of {I, CX, iSWAP, SWAP}, A and B one-qubit Cliffords of the form
// P * G^a * H^b (P a Pauli, a in 0..2, b in 0..1), and G = S*H the axis
// cycle. Entry class sub-index t in [0,20): t = 0 is the identity class,
// t in [1,10) the CX class with (m1, m2) = ((t-1)/3, (t-1)%3), t in [10,19)
// the iSWAP class likewise, t = 19 the SWAP class. The flat index is
// (a_idx * 24 + b_idx) * 20 + t; all entries are pairwise distinct tableaus.
class TwoQubitCliffords {
 public:
  static constexpr std::uint32_t kCount = 11520;

  static const TwoQubitCliffords& instance();

  const TwoQubitCliffordEntry& entry(std::uint32_t index) const { return entries_[index]; }

 private:
  TwoQubitCliffords();
  std::vector<TwoQubitCliffordEntry> entries_;
};

}  // namespace iccr
