#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "iccr/gate.hpp"

namespace iccr {

// The six one-qubit stabilizer states, plus everything else. Tagged slots
// carry exact Pauli expectations and contribute zero non-stabilizerness.
enum class StateTag : std::uint8_t { Zp, Zm, Xp, Xm, Yp, Ym, NonStab };

inline bool is_stabilizer_tag(StateTag t) { return t != StateTag::NonStab; }

// One qubit as amplitudes over the Z basis {|0>, |1>}, Z|0> = +|0>.
// Amplitudes are kept normalized; tagged slots hold the canonical forms
// (1,0), (0,1), (r,r), (r,-r), (r,ir), (r,-ir) with r = sqrt(1/2).
struct SingleQubitState {
  std::complex<double> a0{1.0, 0.0};
  std::complex<double> a1{0.0, 0.0};
  StateTag tag = StateTag::Zp;

  static SingleQubitState tagged(StateTag t);
  // Normalizes, strips the global phase of the dominant component, and snaps
  // to a tag when within 1e-9 of a canonical form in amplitude distance.
  static SingleQubitState from_amplitudes(std::complex<double> c0, std::complex<double> c1);

  bool is_tagged() const { return tag != StateTag::NonStab; }

  // Exact integers for tagged slots.
  double expect_x() const;
  double expect_y() const;
  double expect_z() const;

  // <this|other> and <this|Z|other>.
  std::complex<double> overlap(const SingleQubitState& other) const;
  std::complex<double> overlap_z(const SingleQubitState& other) const;

  // In-place one-qubit gate (H..Z kinds). Tag-to-tag for tagged slots.
  void apply(GateKind kind);
};

class ProductState {
 public:
  explicit ProductState(std::uint32_t n_qubits)
      : slots_(n_qubits, SingleQubitState::tagged(StateTag::Zp)) {}
  ProductState(std::uint32_t n_qubits, const SingleQubitState& fill) : slots_(n_qubits, fill) {}

  std::uint32_t n_qubits() const { return static_cast<std::uint32_t>(slots_.size()); }

  const SingleQubitState& slot(std::uint32_t k) const { return slots_[k]; }
  void set_slot(std::uint32_t k, const SingleQubitState& s) { slots_[k] = s; }

  void apply(GateKind kind, std::uint32_t site) { slots_[site].apply(kind); }
  void add_slot(const SingleQubitState& s) { slots_.push_back(s); }
  void remove_slot(std::uint32_t site) {
    slots_.erase(slots_.begin() + static_cast<std::ptrdiff_t>(site));
  }
  void swap_slots(std::uint32_t a, std::uint32_t b) { std::swap(slots_[a], slots_[b]); }

  std::uint32_t count_tagged() const;

 private:
  std::vector<SingleQubitState> slots_;
};

}  // namespace iccr
