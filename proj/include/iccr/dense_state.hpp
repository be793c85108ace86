#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "iccr/gate.hpp"
#include "iccr/gate_luts.hpp"
#include "iccr/pauli_string.hpp"
#include "iccr/product_state.hpp"

namespace iccr {

class CliffordTableau;

// Exact statevector reference for cross-checking the renormalized circuit
// representation at small sizes. Qubit k is bit k of the amplitude index
// (qubit 0 the least significant); bit value 1 means |1>.
class DenseState {
 public:
  static constexpr std::uint32_t kMaxQubits = 14;

  explicit DenseState(std::uint32_t n_qubits);  // |0...0>
  static DenseState from_product(const ProductState& st);

  std::uint32_t n_qubits() const { return n_; }
  const std::vector<std::complex<double>>& amplitudes() const { return a_; }
  std::complex<double>& amp(std::uint64_t index) { return a_[index]; }

  void apply(const GateRecord& g);
  void apply_matrix1(std::uint32_t site, const Mat2& m);
  // Undoes a time-ordered gate list (applies its inverse).
  void apply_inverse(const std::vector<GateRecord>& time_ordered);

  // Projects onto the `outcome` (+1/-1) eigenspace of a Hermitian Pauli and
  // renormalizes; returns the branch probability. ZeroProbabilityError when
  // the branch weight is below 1e-14.
  double project_pauli(const PauliString& p, int outcome);

  double expect_pauli(const PauliString& p) const;
  std::complex<double> overlap(const DenseState& other) const;  // <this|other>
  double fidelity(const DenseState& other) const;
  double norm() const;
  void normalize();

  // Removes one qubit whose state factorizes out (logic_error if the
  // residual exceeds 1e-9); higher qubits shift down by one.
  DenseState contracted(std::uint32_t column) const;
  void swap_qubits(std::uint32_t a, std::uint32_t b);

 private:
  std::uint32_t n_;
  std::vector<std::complex<double>> a_;
};

// Replays a log-retaining tableau over its replay columns: live sites start
// from the stored one-qubit states, dropped columns from |0>, and the dead
// columns are contracted away afterwards. The result is the physical state
// the tableau-plus-product-state pair represents, in site order.
DenseState replayed_state(const CliffordTableau& tab, const ProductState& st);

// Exact stabilizer Renyi entropy of an arbitrary state (n_qubits <= 8).
double exact_sre(const DenseState& psi, double order);

// Pulls a projected state back through a time-ordered replacement circuit
// and normalizes: the exact counterpart of the product-state ansatz.
DenseState exact_projected_replacement(const DenseState& projected,
                                       const std::vector<GateRecord>& v_time_ordered);

}  // namespace iccr
