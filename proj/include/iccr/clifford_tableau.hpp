#pragma once

#include <cstdint>
#include <deque>
#include <vector>

#include "iccr/gate.hpp"
#include "iccr/pauli_string.hpp"

namespace iccr {

// Tableau of a Clifford unitary U on n qubits, stored as the conjugated
// generator images U^dag X_k U and U^dag Z_k U (Hermitian, signs +/-1).
//
// Two composition sides:
//  * append_after(g):  U <- g U       (g acts after the existing circuit);
//  * append_before(L): U <- U W where W = g_m ... g_1 for the time-ordered
//    list L = [g_1 .. g_m]            (the list acts before the circuit).
// Splitting one time-ordered sequence across several append_before calls
// therefore requires issuing the calls in reverse chunk order.
//
// With retain_log set, the tableau keeps a replayable record list whose
// front-to-back product over `log_width` replay columns always equals U,
// extended by the leftover one-qubit factor of every dropped column.
// Records address replay columns (column_alias maps a live site to its
// column); replay columns are never reused, so dropped qubits keep a stable
// identity inside the log.
class CliffordTableau {
 public:
  explicit CliffordTableau(std::uint32_t n_qubits, bool retain_log = false);

  std::uint32_t n_qubits() const { return n_; }
  bool retains_log() const { return retain_log_; }

  const PauliString& x_image(std::uint32_t k) const { return rows_x_[k]; }
  const PauliString& z_image(std::uint32_t k) const { return rows_z_[k]; }

  void append_after(const GateRecord& g);
  void append_before(const std::vector<GateRecord>& time_ordered);

  // Batched equivalents of append_before for the renormalization step,
  // word-parallel across all rows. Sites must be distinct across both lists.
  // h_sites get the X<->Z basis change ([H]); y_sites get the one turning Y
  // into Z ([H, S] time-ordered, whose row action cycles X->Y->Z->X).
  void rotate_before(const std::vector<std::uint32_t>& h_sites,
                     const std::vector<std::uint32_t>& y_sites);
  // CX ladder fanning every control into one shared target.
  void cx_fan_in_before(const std::vector<std::uint32_t>& controls, std::uint32_t target);

  // Appends a fresh trivially-acting qubit at the end.
  void add_qubit();
  // Removes the last qubit. Its action must have factorized out: both of its
  // rows live on it alone and no other row touches it (logic_error if not).
  void drop_last_qubit();

  std::uint32_t log_width() const { return log_width_; }
  std::uint32_t column_alias(std::uint32_t site) const { return col_alias_[site]; }
  const std::deque<GateRecord>& log() const;

  // Rows Hermitian, conjugate pairs anticommute, everything else commutes.
  bool is_valid() const;

 private:
  GateRecord aliased(const GateRecord& g) const;
  PauliString expand_pair(std::uint32_t a, std::uint32_t b, bool xa, bool za, bool xb, bool zb,
                          int phase_d) const;
  void conjugate_rows_by(const GateRecord& g);

  std::uint32_t n_ = 0;
  bool retain_log_ = false;
  std::vector<PauliString> rows_x_;
  std::vector<PauliString> rows_z_;
  std::vector<std::uint32_t> col_alias_;
  std::uint32_t log_width_ = 0;
  std::deque<GateRecord> log_;
};

}  // namespace iccr
