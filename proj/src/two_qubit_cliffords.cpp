#include "iccr/two_qubit_cliffords.hpp"

#include "iccr/clifford_tableau.hpp"

namespace iccr {

namespace {

// P * G^a * H^b as a time-ordered gate list on `site` (H first, then the
// G = S*H cycles, then the Pauli).
void emit_c1(std::uint32_t c1_index, std::uint32_t site, std::vector<GateRecord>& out) {
  const std::uint32_t p = c1_index / 6;
  const std::uint32_t a = (c1_index / 2) % 3;
  const std::uint32_t b = c1_index % 2;
  if (b) out.push_back(GateRecord::one(GateKind::H, site));
  for (std::uint32_t r = 0; r < a; ++r) {
    out.push_back(GateRecord::one(GateKind::H, site));
    out.push_back(GateRecord::one(GateKind::S, site));
  }
  switch (p) {
    case 1: out.push_back(GateRecord::one(GateKind::X, site)); break;
    case 2: out.push_back(GateRecord::one(GateKind::Y, site)); break;
    case 3: out.push_back(GateRecord::one(GateKind::Z, site)); break;
    default: break;
  }
}

void emit_cycles(std::uint32_t m, std::uint32_t site, std::vector<GateRecord>& out) {
  for (std::uint32_t r = 0; r < m; ++r) {
    out.push_back(GateRecord::one(GateKind::H, site));
    out.push_back(GateRecord::one(GateKind::S, site));
  }
}

std::vector<GateRecord> build_sequence(std::uint32_t index) {
  const std::uint32_t t = index % 20;
  const std::uint32_t b_idx = (index / 20) % 24;
  const std::uint32_t a_idx = index / 480;
  std::vector<GateRecord> seq;
  if (t >= 1 && t < 10) {
    emit_cycles((t - 1) / 3, 0, seq);
    emit_cycles((t - 1) % 3, 1, seq);
    seq.push_back(GateRecord::two(GateKind::CX, 0, 1));
  } else if (t >= 10 && t < 19) {
    emit_cycles((t - 10) / 3, 0, seq);
    emit_cycles((t - 10) % 3, 1, seq);
    // iSWAP = SWAP * CZ * (S (x) S).
    seq.push_back(GateRecord::one(GateKind::S, 0));
    seq.push_back(GateRecord::one(GateKind::S, 1));
    seq.push_back(GateRecord::two(GateKind::CZ, 0, 1));
    seq.push_back(GateRecord::two(GateKind::Swap, 0, 1));
  } else if (t == 19) {
    seq.push_back(GateRecord::two(GateKind::Swap, 0, 1));
  }
  emit_c1(a_idx, 0, seq);
  emit_c1(b_idx, 1, seq);
  return seq;
}

}  // namespace

TwoQubitCliffords::TwoQubitCliffords() {
  entries_.reserve(kCount);
  for (std::uint32_t index = 0; index < kCount; ++index) {
    TwoQubitCliffordEntry e;
    e.sequence = build_sequence(index);
    CliffordTableau tab(2);
    for (const GateRecord& g : e.sequence) tab.append_after(g);
    e.img_xa = tab.x_image(0);
    e.img_za = tab.z_image(0);
    e.img_xb = tab.x_image(1);
    e.img_zb = tab.z_image(1);
    entries_.push_back(std::move(e));
  }
}

const TwoQubitCliffords& TwoQubitCliffords::instance() {
  static const TwoQubitCliffords table;
  return table;
}

}  // namespace iccr
