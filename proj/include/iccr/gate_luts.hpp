#pragma once

#include <array>
#include <complex>
#include <cstdint>

#include "iccr/gate.hpp"

namespace iccr {

// Letter code packs the symplectic bits of one site: x | (z << 1).
// 0 = I, 1 = X, 2 = Z, 3 = Y.
inline constexpr std::uint8_t letter_code(bool x, bool z) {
  return static_cast<std::uint8_t>((x ? 1u : 0u) | (z ? 2u : 0u));
}

// g^dag sigma g = i^phase_d sigma(x, z); phase_d is always 0 or 2 here.
struct LetterImage {
  std::uint8_t x, z;
  std::uint8_t phase_d;
};

struct PairImage {
  std::uint8_t xa, za, xb, zb;
  std::uint8_t phase_d;
};

// Conjugation tables in the adjoint direction (g^dag P g), derived at first
// use from explicit unitary matrices rather than from Pauli algebra, so they
// double as an independent check on the symplectic arithmetic.
const LetterImage& adjoint_conj1(GateKind kind, std::uint8_t code);
// `a` is the control slot for the controlled kinds.
const PairImage& adjoint_conj2(GateKind kind, std::uint8_t code_a, std::uint8_t code_b);

using Mat2 = std::array<std::complex<double>, 4>;  // row-major 2x2

const Mat2& gate_matrix(GateKind kind);          // one-qubit kinds only
const Mat2& pauli_matrix(std::uint8_t code);

}  // namespace iccr
