#include "iccr/product_state.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "iccr/gate_luts.hpp"

namespace iccr {

namespace {

constexpr double kSnapTol = 1e-9;

struct Canonical {
  std::complex<double> a0, a1;
};

const std::array<Canonical, 6>& canonical_forms() {
  static const double r = std::sqrt(0.5);
  static const std::array<Canonical, 6> forms = {{
      {{1.0, 0.0}, {0.0, 0.0}},   // Zp
      {{0.0, 0.0}, {1.0, 0.0}},   // Zm
      {{r, 0.0}, {r, 0.0}},       // Xp
      {{r, 0.0}, {-r, 0.0}},      // Xm
      {{r, 0.0}, {0.0, r}},       // Yp
      {{r, 0.0}, {0.0, -r}},      // Ym
  }};
  return forms;
}

StateTag classify(std::complex<double> a0, std::complex<double> a1) {
  // Strip the global phase of the dominant component, then match amplitudes.
  const std::complex<double> lead = std::abs(a0) >= std::abs(a1) ? a0 : a1;
  const double mag = std::abs(lead);
  if (mag > 0.0) {
    const std::complex<double> ph = std::conj(lead) / mag;
    a0 *= ph;
    a1 *= ph;
  }
  const auto& forms = canonical_forms();
  for (std::size_t t = 0; t < forms.size(); ++t) {
    if (std::abs(a0 - forms[t].a0) <= kSnapTol && std::abs(a1 - forms[t].a1) <= kSnapTol) {
      return static_cast<StateTag>(t);
    }
  }
  return StateTag::NonStab;
}

// tag -> tag under each one-qubit gate kind, derived from the matrices.
const std::array<std::array<StateTag, 6>, 6>& tag_transition() {
  static const std::array<std::array<StateTag, 6>, 6> table = [] {
    std::array<std::array<StateTag, 6>, 6> t{};
    for (int k = 0; k < 6; ++k) {
      const Mat2& m = gate_matrix(static_cast<GateKind>(k));
      for (int tag = 0; tag < 6; ++tag) {
        const Canonical& c = canonical_forms()[static_cast<std::size_t>(tag)];
        const std::complex<double> b0 = m[0] * c.a0 + m[1] * c.a1;
        const std::complex<double> b1 = m[2] * c.a0 + m[3] * c.a1;
        const StateTag out = classify(b0, b1);
        if (out == StateTag::NonStab) {
          throw std::logic_error("Clifford gate left the stabilizer states");
        }
        t[static_cast<std::size_t>(k)][static_cast<std::size_t>(tag)] = out;
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

SingleQubitState SingleQubitState::tagged(StateTag t) {
  if (t == StateTag::NonStab) throw std::logic_error("tagged() needs a stabilizer tag");
  const Canonical& c = canonical_forms()[static_cast<std::size_t>(t)];
  return SingleQubitState{c.a0, c.a1, t};
}

SingleQubitState SingleQubitState::from_amplitudes(std::complex<double> c0,
                                                   std::complex<double> c1) {
  const double norm = std::sqrt(std::norm(c0) + std::norm(c1));
  if (norm < 1e-15) throw std::invalid_argument("null one-qubit state");
  c0 /= norm;
  c1 /= norm;
  const StateTag t = classify(c0, c1);
  if (t != StateTag::NonStab) return tagged(t);
  return SingleQubitState{c0, c1, StateTag::NonStab};
}

double SingleQubitState::expect_x() const {
  switch (tag) {
    case StateTag::Xp: return 1.0;
    case StateTag::Xm: return -1.0;
    case StateTag::NonStab: return 2.0 * std::real(std::conj(a0) * a1);
    default: return 0.0;
  }
}

double SingleQubitState::expect_y() const {
  switch (tag) {
    case StateTag::Yp: return 1.0;
    case StateTag::Ym: return -1.0;
    case StateTag::NonStab: return 2.0 * std::imag(std::conj(a0) * a1);
    default: return 0.0;
  }
}

double SingleQubitState::expect_z() const {
  switch (tag) {
    case StateTag::Zp: return 1.0;
    case StateTag::Zm: return -1.0;
    case StateTag::NonStab: return std::norm(a0) - std::norm(a1);
    default: return 0.0;
  }
}

std::complex<double> SingleQubitState::overlap(const SingleQubitState& other) const {
  return std::conj(a0) * other.a0 + std::conj(a1) * other.a1;
}

std::complex<double> SingleQubitState::overlap_z(const SingleQubitState& other) const {
  return std::conj(a0) * other.a0 - std::conj(a1) * other.a1;
}

void SingleQubitState::apply(GateKind kind) {
  if (!is_single_qubit(kind)) throw std::logic_error("one-qubit gate kind required");
  if (tag != StateTag::NonStab) {
    *this = tagged(tag_transition()[static_cast<std::size_t>(kind)][static_cast<std::size_t>(tag)]);
    return;
  }
  const Mat2& m = gate_matrix(kind);
  const std::complex<double> b0 = m[0] * a0 + m[1] * a1;
  const std::complex<double> b1 = m[2] * a0 + m[3] * a1;
  *this = from_amplitudes(b0, b1);
}

std::uint32_t ProductState::count_tagged() const {
  std::uint32_t count = 0;
  for (const SingleQubitState& s : slots_) {
    if (s.is_tagged()) ++count;
  }
  return count;
}

}  // namespace iccr
