#pragma once

#include <cstdint>

#include "iccr/product_state.hpp"

namespace iccr {

// Stabilizer Renyi entropy of one qubit; exactly zero for tagged slots.
double single_qubit_sre(const SingleQubitState& s, double order);

// Total stabilizer Renyi entropy of a product state (additive over slots).
double sre(const ProductState& st, double order);

// Stabilizer nullity: number of qubits with no +/-1 Pauli stabilizer left,
// i.e. the untagged slots.
std::uint32_t nullity(const ProductState& st);

}  // namespace iccr
