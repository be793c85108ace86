#include "iccr/gate_luts.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace iccr {

namespace {

using C = std::complex<double>;
using Mat4 = std::array<C, 16>;  // row-major 4x4

Mat2 mul2(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) r[i * 2 + j] += a[i * 2 + k] * b[k * 2 + j];
  return r;
}

Mat4 mul4(const Mat4& a, const Mat4& b) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) r[i * 4 + j] += a[i * 4 + k] * b[k * 4 + j];
  return r;
}

Mat2 adj2(const Mat2& a) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i * 2 + j] = std::conj(a[j * 2 + i]);
  return r;
}

Mat4 adj4(const Mat4& a) {
  Mat4 r{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r[i * 4 + j] = std::conj(a[j * 4 + i]);
  return r;
}

// Basis |q_a q_b> with q_a the high bit of the 4-dim index.
Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 r{};
  for (int ia = 0; ia < 2; ++ia)
    for (int ja = 0; ja < 2; ++ja)
      for (int ib = 0; ib < 2; ++ib)
        for (int jb = 0; jb < 2; ++jb)
          r[(ia * 2 + ib) * 4 + (ja * 2 + jb)] = a[ia * 2 + ja] * b[ib * 2 + jb];
  return r;
}

constexpr C kI{0.0, 1.0};

const std::array<Mat2, 4> kPauli = {
    Mat2{C(1), C(0), C(0), C(1)},    // I
    Mat2{C(0), C(1), C(1), C(0)},    // X
    Mat2{C(1), C(0), C(0), C(-1)},   // Z
    Mat2{C(0), -kI, kI, C(0)},       // Y
};

Mat2 one_qubit_matrix(GateKind k) {
  const double s = 1.0 / std::sqrt(2.0);
  switch (k) {
    case GateKind::H: return {C(s), C(s), C(s), C(-s)};
    case GateKind::S: return {C(1), C(0), C(0), kI};
    case GateKind::Sdg: return {C(1), C(0), C(0), -kI};
    case GateKind::X: return kPauli[1];
    case GateKind::Y: return kPauli[3];
    case GateKind::Z: return kPauli[2];
    default: break;
  }
  throw std::logic_error("one_qubit_matrix: not a one-qubit kind");
}

// Controlled-P gates condition on the first (high-bit) slot.
Mat4 controlled(const Mat2& p) {
  Mat4 r{};
  r[0 * 4 + 0] = 1;
  r[1 * 4 + 1] = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[(2 + i) * 4 + (2 + j)] = p[i * 2 + j];
  return r;
}

Mat4 two_qubit_matrix(GateKind k) {
  switch (k) {
    case GateKind::CX: return controlled(kPauli[1]);
    case GateKind::CY: return controlled(kPauli[3]);
    case GateKind::CZ: return controlled(kPauli[2]);
    case GateKind::Swap: {
      Mat4 r{};
      r[0 * 4 + 0] = 1;
      r[1 * 4 + 2] = 1;
      r[2 * 4 + 1] = 1;
      r[3 * 4 + 3] = 1;
      return r;
    }
    default: break;
  }
  throw std::logic_error("two_qubit_matrix: not a two-qubit kind");
}

C phase_i_pow(int d) {
  switch (d & 3) {
    case 0: return C(1, 0);
    case 1: return C(0, 1);
    case 2: return C(-1, 0);
    default: return C(0, -1);
  }
}

template <typename M>
bool approx_eq(const M& a, const M& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > 1e-9) return false;
  }
  return true;
}

LetterImage identify1(const Mat2& m) {
  for (std::uint8_t code = 0; code < 4; ++code) {
    for (std::uint8_t d = 0; d < 4; ++d) {
      Mat2 cand = kPauli[code];
      for (auto& e : cand) e *= phase_i_pow(d);
      if (approx_eq(m, cand)) {
        if (d & 1) throw std::logic_error("conjugation image not Hermitian");
        return LetterImage{static_cast<std::uint8_t>(code & 1u),
                           static_cast<std::uint8_t>((code >> 1) & 1u), d};
      }
    }
  }
  throw std::logic_error("conjugation image is not a Pauli");
}

PairImage identify2(const Mat4& m) {
  for (std::uint8_t ca = 0; ca < 4; ++ca) {
    for (std::uint8_t cb = 0; cb < 4; ++cb) {
      Mat4 base = kron(kPauli[ca], kPauli[cb]);
      for (std::uint8_t d = 0; d < 4; ++d) {
        Mat4 cand = base;
        for (auto& e : cand) e *= phase_i_pow(d);
        if (approx_eq(m, cand)) {
          if (d & 1) throw std::logic_error("conjugation image not Hermitian");
          return PairImage{static_cast<std::uint8_t>(ca & 1u),
                           static_cast<std::uint8_t>((ca >> 1) & 1u),
                           static_cast<std::uint8_t>(cb & 1u),
                           static_cast<std::uint8_t>((cb >> 1) & 1u), d};
        }
      }
    }
  }
  throw std::logic_error("conjugation image is not a Pauli pair");
}

struct Tables {
  std::array<Mat2, 6> gates1{};
  std::array<std::array<LetterImage, 4>, 6> conj1{};
  std::array<std::array<std::array<PairImage, 4>, 4>, 4> conj2{};

  Tables() {
    for (int k = 0; k < 6; ++k) {
      const GateKind kind = static_cast<GateKind>(k);
      const Mat2 g = one_qubit_matrix(kind);
      gates1[k] = g;
      const Mat2 ga = adj2(g);
      for (std::uint8_t code = 0; code < 4; ++code) {
        conj1[k][code] = identify1(mul2(ga, mul2(kPauli[code], g)));
      }
    }
    for (int k = 0; k < 4; ++k) {
      const GateKind kind = static_cast<GateKind>(static_cast<int>(GateKind::CX) + k);
      const Mat4 g = two_qubit_matrix(kind);
      const Mat4 ga = adj4(g);
      for (std::uint8_t ca = 0; ca < 4; ++ca) {
        for (std::uint8_t cb = 0; cb < 4; ++cb) {
          conj2[k][ca][cb] = identify2(mul4(ga, mul4(kron(kPauli[ca], kPauli[cb]), g)));
        }
      }
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const LetterImage& adjoint_conj1(GateKind kind, std::uint8_t code) {
  return tables().conj1[static_cast<int>(kind)][code];
}

const PairImage& adjoint_conj2(GateKind kind, std::uint8_t code_a, std::uint8_t code_b) {
  const int k = static_cast<int>(kind) - static_cast<int>(GateKind::CX);
  return tables().conj2[k][code_a][code_b];
}

const Mat2& gate_matrix(GateKind kind) { return tables().gates1[static_cast<int>(kind)]; }

const Mat2& pauli_matrix(std::uint8_t code) { return kPauli[code]; }

}  // namespace iccr
