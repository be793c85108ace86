#pragma once

// Self-contained statevector helpers for the test suite. Everything here is
// written directly against matrix mechanics (no shared code with the library
// beyond the gate/Pauli data types), so agreement is meaningful evidence.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "iccr/gate.hpp"
#include "iccr/pauli_string.hpp"
#include "iccr/product_state.hpp"
#include "iccr/two_qubit_cliffords.hpp"

namespace ref {

using C = std::complex<double>;
using Vec = std::vector<C>;

inline Vec zero_state(std::uint32_t n) {
  Vec v(std::size_t{1} << n, C{0.0, 0.0});
  v[0] = {1.0, 0.0};
  return v;
}

// Qubit k is bit k of the amplitude index, matching the library convention.
inline Vec product_vec(const iccr::ProductState& st) {
  const std::uint32_t n = st.n_qubits();
  Vec v(std::size_t{1} << n);
  for (std::size_t i = 0; i < v.size(); ++i) {
    C amp{1.0, 0.0};
    for (std::uint32_t k = 0; k < n; ++k) {
      amp *= (i >> k) & 1 ? st.slot(k).a1 : st.slot(k).a0;
    }
    v[i] = amp;
  }
  return v;
}

struct M2 {
  C m[4];  // row-major
};

inline M2 mat1_of(iccr::GateKind k) {
  const double r = std::sqrt(0.5);
  const C i{0.0, 1.0};
  switch (k) {
    case iccr::GateKind::H: return {{{r, 0}, {r, 0}, {r, 0}, {-r, 0}}};
    case iccr::GateKind::S: return {{{1, 0}, {0, 0}, {0, 0}, i}};
    case iccr::GateKind::Sdg: return {{{1, 0}, {0, 0}, {0, 0}, -i}};
    case iccr::GateKind::X: return {{{0, 0}, {1, 0}, {1, 0}, {0, 0}}};
    case iccr::GateKind::Y: return {{{0, 0}, -i, i, {0, 0}}};
    case iccr::GateKind::Z: return {{{1, 0}, {0, 0}, {0, 0}, {-1, 0}}};
    default: throw std::logic_error("not a one-qubit kind");
  }
}

// Letter code x | (z << 1), sigma(x, z) = i^{xz} X^x Z^z.
inline M2 letter_mat(int code) {
  switch (code) {
    case 0: return {{{1, 0}, {0, 0}, {0, 0}, {1, 0}}};
    case 1: return mat1_of(iccr::GateKind::X);
    case 2: return mat1_of(iccr::GateKind::Z);
    default: return mat1_of(iccr::GateKind::Y);
  }
}

inline M2 mul2(const M2& a, const M2& b) {
  return {{a.m[0] * b.m[0] + a.m[1] * b.m[2], a.m[0] * b.m[1] + a.m[1] * b.m[3],
           a.m[2] * b.m[0] + a.m[3] * b.m[2], a.m[2] * b.m[1] + a.m[3] * b.m[3]}};
}

inline M2 dagger2(const M2& a) {
  return {{std::conj(a.m[0]), std::conj(a.m[2]), std::conj(a.m[1]), std::conj(a.m[3])}};
}

inline void apply1(Vec& v, std::uint32_t q, const M2& m) {
  const std::uint64_t bit = std::uint64_t{1} << q;
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    if (i & bit) continue;
    const C a = v[i];
    const C b = v[i | bit];
    v[i] = m.m[0] * a + m.m[1] * b;
    v[i | bit] = m.m[2] * a + m.m[3] * b;
  }
}

struct M4 {
  C m[16];  // row-major, basis index (bit_a << 1) | bit_b
};

inline M4 mat2_of(iccr::GateKind k) {
  const C o{1.0, 0.0};
  const C z{0.0, 0.0};
  const C i{0.0, 1.0};
  switch (k) {
    case iccr::GateKind::CX:
      return {{o, z, z, z, z, o, z, z, z, z, z, o, z, z, o, z}};
    case iccr::GateKind::CY:
      return {{o, z, z, z, z, o, z, z, z, z, z, -i, z, z, i, z}};
    case iccr::GateKind::CZ:
      return {{o, z, z, z, z, o, z, z, z, z, o, z, z, z, z, -o}};
    case iccr::GateKind::Swap:
      return {{o, z, z, z, z, z, o, z, z, o, z, z, z, z, z, o}};
    default: throw std::logic_error("not an elementary two-qubit kind");
  }
}

inline void apply2(Vec& v, std::uint32_t qa, std::uint32_t qb, const M4& m) {
  const std::uint64_t ba = std::uint64_t{1} << qa;
  const std::uint64_t bb = std::uint64_t{1} << qb;
  for (std::uint64_t i = 0; i < v.size(); ++i) {
    if (i & (ba | bb)) continue;
    const std::uint64_t idx[4] = {i, i | bb, i | ba, i | ba | bb};
    C in[4], out[4];
    for (int r = 0; r < 4; ++r) in[r] = v[idx[r]];
    for (int r = 0; r < 4; ++r) {
      out[r] = m.m[4 * r] * in[0] + m.m[4 * r + 1] * in[1] + m.m[4 * r + 2] * in[2] +
               m.m[4 * r + 3] * in[3];
    }
    for (int r = 0; r < 4; ++r) v[idx[r]] = out[r];
  }
}

inline void apply_gate(Vec& v, const iccr::GateRecord& g) {
  if (iccr::is_single_qubit(g.kind)) {
    apply1(v, g.a, mat1_of(g.kind));
  } else if (g.kind == iccr::GateKind::TwoQubitClifford) {
    const auto& e = iccr::TwoQubitCliffords::instance().entry(g.index);
    for (const iccr::GateRecord& s : e.sequence) {
      iccr::GateRecord mapped = s;
      mapped.a = s.a == 0 ? g.a : g.b;
      mapped.b = s.b == 0 ? g.a : g.b;
      apply_gate(v, mapped);
    }
  } else {
    apply2(v, g.a, g.b, mat2_of(g.kind));
  }
}

inline void apply_gate_adjoint(Vec& v, const iccr::GateRecord& g) {
  using iccr::GateKind;
  switch (g.kind) {
    case GateKind::S: apply1(v, g.a, mat1_of(GateKind::Sdg)); return;
    case GateKind::Sdg: apply1(v, g.a, mat1_of(GateKind::S)); return;
    case GateKind::TwoQubitClifford: {
      const auto& e = iccr::TwoQubitCliffords::instance().entry(g.index);
      for (auto it = e.sequence.rbegin(); it != e.sequence.rend(); ++it) {
        iccr::GateRecord mapped = *it;
        mapped.a = it->a == 0 ? g.a : g.b;
        mapped.b = it->b == 0 ? g.a : g.b;
        apply_gate_adjoint(v, mapped);
      }
      return;
    }
    default: apply_gate(v, g);  // H, the Paulis and the controlled kinds are involutions
  }
}

inline void apply_pauli(Vec& v, const iccr::PauliString& p) {
  static const C phases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const C ph = phases[p.phase_exp()];
  for (auto& a : v) a *= ph;
  for (std::uint32_t k = 0; k < p.n_qubits(); ++k) {
    const int code = (p.x_bit(k) ? 1 : 0) | (p.z_bit(k) ? 2 : 0);
    if (code) apply1(v, k, letter_mat(code));
  }
}

inline C inner(const Vec& a, const Vec& b) {  // <a|b>
  C s{0.0, 0.0};
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm2(const Vec& a) { return inner(a, a).real(); }

inline double expect_pauli(const Vec& v, const iccr::PauliString& p) {
  Vec w = v;
  apply_pauli(w, p);
  return inner(v, w).real();
}

inline double dist(const Vec& a, const Vec& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

// Squared overlap between normalized copies.
inline double fidelity(const Vec& a, const Vec& b) {
  return std::norm(inner(a, b)) / (norm2(a) * norm2(b));
}

}  // namespace ref
