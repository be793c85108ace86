#include "iccr/t_gadget.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace iccr {
namespace {

// Gate list (time-ordered) that maps letter@k (x) Z@ancilla to +-Z@ancilla
// under conjugation while acting as the identity on a slot k that holds the
// letter's eigenstate with eigenvalue `ev`. The pattern is: rotate slot k's
// eigenstate down to |0> or |1>, flip |1> up to |0>, absorb Z@k with
// CX(k -> ancilla), then undo.
void push_cleanup_gates(std::vector<GateRecord>& out, std::uint32_t k, std::uint32_t anc,
                        int letter, int ev) {
  const bool flip = ev < 0;
  switch (letter) {
    case 2: break;  // Z eigenstate already sits in the computational basis
    case 1: out.push_back(GateRecord::one(GateKind::H, k)); break;
    case 3:
      out.push_back(GateRecord::one(GateKind::Sdg, k));
      out.push_back(GateRecord::one(GateKind::H, k));
      break;
    default: throw std::logic_error("ancilla Z image holds an identity letter");
  }
  if (flip) out.push_back(GateRecord::one(GateKind::X, k));
  out.push_back(GateRecord::two(GateKind::CX, k, anc));
  if (flip) out.push_back(GateRecord::one(GateKind::X, k));
  switch (letter) {
    case 2: break;
    case 1: out.push_back(GateRecord::one(GateKind::H, k)); break;
    case 3:
      out.push_back(GateRecord::one(GateKind::H, k));
      out.push_back(GateRecord::one(GateKind::S, k));
      break;
    default: break;
  }
}

}  // namespace

SingleQubitState t_resource_state() {
  const double r = std::sqrt(0.5);
  return SingleQubitState::from_amplitudes(
      {r, 0.0}, std::polar(r, 3.14159265358979323846 / 4.0));
}

void recycle_ancilla(CliffordTableau& tab, ProductState& state, std::uint32_t star_site) {
  const std::uint32_t anc = tab.n_qubits() - 1;

  // Move the freshly reset slot onto the ancilla position. The swap is
  // appended in front of the tableau and mirrored on the slots, so the
  // represented physical state is untouched.
  if (star_site != anc) {
    tab.append_before({GateRecord::two(GateKind::Swap, star_site, anc)});
    state.swap_slots(star_site, anc);
  }
  if (state.slot(anc).tag != StateTag::Zp) {
    throw std::logic_error("ancilla slot is not |0> before recycling");
  }

  // The measurement step left the ancilla's Z image as +-Z@anc times letters
  // on sites whose slots hold them as exact eigenstates. Multiply those
  // letters away with gates that fix the state.
  {
    const PauliString zimg = tab.z_image(anc);
    std::vector<GateRecord> cleanup;
    bool anc_ok = false;
    zimg.for_each_site([&](std::uint32_t site, std::uint64_t x, std::uint64_t z) {
      const int letter = static_cast<int>(x | (z << 1));
      if (site == anc) {
        if (letter != 2) throw std::logic_error("ancilla Z image has no Z on the ancilla");
        anc_ok = true;
        return;
      }
      const SingleQubitState& slot = state.slot(site);
      int ev = 0;
      switch (letter) {
        case 1: ev = slot.tag == StateTag::Xp ? +1 : slot.tag == StateTag::Xm ? -1 : 0; break;
        case 2: ev = slot.tag == StateTag::Zp ? +1 : slot.tag == StateTag::Zm ? -1 : 0; break;
        case 3: ev = slot.tag == StateTag::Yp ? +1 : slot.tag == StateTag::Ym ? -1 : 0; break;
        default: break;
      }
      if (ev == 0) throw std::logic_error("ancilla Z image touches a non-eigenstate slot");
      push_cleanup_gates(cleanup, site, anc, letter, ev);
    });
    if (!anc_ok) throw std::logic_error("ancilla Z image has no Z on the ancilla");
    if (!cleanup.empty()) tab.append_before(cleanup);
  }

  {
    const PauliString& zimg = tab.z_image(anc);
    if (zimg.weight() != 1 || !zimg.z_bit(anc) || zimg.x_bit(anc)) {
      throw std::logic_error("ancilla Z image did not reduce to +-Z");
    }
  }

  // Localize the X image with controlled Paulis from the ancilla; the
  // control slot is |0>, so the state is again untouched.
  {
    const PauliString ximg = tab.x_image(anc);
    if (!ximg.x_bit(anc)) {
      throw std::logic_error("ancilla X image has no X component on the ancilla");
    }
    std::vector<GateRecord> fixes;
    ximg.for_each_site([&](std::uint32_t site, std::uint64_t x, std::uint64_t z) {
      if (site == anc) return;
      const int letter = static_cast<int>(x | (z << 1));
      const GateKind kind =
          letter == 1 ? GateKind::CX : (letter == 2 ? GateKind::CZ : GateKind::CY);
      fixes.push_back(GateRecord::two(kind, anc, site));
    });
    if (!fixes.empty()) tab.append_before(fixes);
  }

  {
    const PauliString& ximg = tab.x_image(anc);
    if (ximg.weight() != 1 || !ximg.x_bit(anc)) {
      throw std::logic_error("ancilla X image did not localize");
    }
  }

  tab.drop_last_qubit();
  state.remove_slot(anc);
}

IterationReport inject_t_gate(CliffordTableau& tab, ProductState& state,
                              std::uint32_t target, Rng& rng, bool recycle) {
  const std::uint32_t anc = tab.n_qubits();
  tab.add_qubit();
  state.add_slot(t_resource_state());
  tab.append_after(GateRecord::two(GateKind::CX, target, anc));

  // The ancilla slot is never an eigenstate of Z, so the postselected branch
  // carries probability exactly 1/2 and this step never degenerates.
  IterationReport rep = iccr_step(tab, state, anc, OutcomePolicy::PostselectPlus, rng);

  if (recycle) {
    if (rep.target_site < 0) throw std::logic_error("gadget measurement dropped unexpectedly");
    recycle_ancilla(tab, state, static_cast<std::uint32_t>(rep.target_site));
  }
  return rep;
}

}  // namespace iccr
