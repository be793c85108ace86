#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdint>

#include "dense_ref.hpp"
#include "iccr/dense_state.hpp"
#include "iccr/errors.hpp"
#include "iccr/rng.hpp"

using iccr::DenseState;
using iccr::GateKind;
using iccr::GateRecord;
using iccr::PauliString;
using iccr::ProductState;
using iccr::Rng;
using iccr::SingleQubitState;
using iccr::StateTag;

namespace {

constexpr double kAngle = 0.44879895051282760549;  // pi/7

ProductState random_product(std::uint32_t n, Rng& rng) {
  ProductState st(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    st.set_slot(k, SingleQubitState::from_amplitudes(
                       {rng.next_double() - 0.5, rng.next_double() - 0.5},
                       {rng.next_double() - 0.5, rng.next_double() - 0.5}));
  }
  return st;
}

PauliString random_pauli(std::uint32_t n, Rng& rng) {
  PauliString p(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    const auto c = rng.next_below(4);
    p.set_bits(k, c & 1, (c >> 1) & 1);
  }
  p.set_phase_exp(rng.next_bernoulli(0.5) ? 0 : 2);
  return p;
}

ref::Vec as_ref(const DenseState& d) {
  return ref::Vec(d.amplitudes().begin(), d.amplitudes().end());
}

SingleQubitState angle_state() {
  return SingleQubitState::from_amplitudes({std::cos(kAngle), 0.0}, {std::sin(kAngle), 0.0});
}

}  // namespace

TEST_CASE("from_product lays out amplitudes with qubit 0 least significant") {
  Rng rng(41);
  for (int trial = 0; trial < 10; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.next_below(5));
    const ProductState st = random_product(n, rng);
    const DenseState d = DenseState::from_product(st);
    CHECK(ref::dist(as_ref(d), ref::product_vec(st)) < 1e-14);
  }
}

TEST_CASE("gate application matches the reference simulator") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = 3;
    DenseState d = DenseState::from_product(random_product(n, rng));
    ref::Vec v = as_ref(d);
    for (int step = 0; step < 6; ++step) {
      GateRecord g{};
      const auto pick = rng.next_below(3);
      const auto a = static_cast<std::uint32_t>(rng.next_below(n));
      auto b = static_cast<std::uint32_t>(rng.next_below(n));
      while (b == a) b = static_cast<std::uint32_t>(rng.next_below(n));
      if (pick == 0) {
        g = GateRecord::one(static_cast<GateKind>(rng.next_below(6)), a);
      } else if (pick == 1) {
        const GateKind kinds[4] = {GateKind::CX, GateKind::CY, GateKind::CZ, GateKind::Swap};
        g = GateRecord::two(kinds[rng.next_below(4)], a, b);
      } else {
        g = GateRecord::composite(
            a, b, static_cast<std::uint16_t>(rng.next_below(iccr::TwoQubitCliffords::kCount)));
      }
      d.apply(g);
      ref::apply_gate(v, g);
      REQUIRE(ref::dist(as_ref(d), v) < 1e-12);
    }
  }
}

TEST_CASE("apply_inverse undoes a time-ordered list") {
  Rng rng(43);
  DenseState d = DenseState::from_product(random_product(3, rng));
  const ref::Vec before = as_ref(d);
  const std::vector<GateRecord> gates = {
      GateRecord::one(GateKind::H, 0), GateRecord::two(GateKind::CX, 0, 2),
      GateRecord::one(GateKind::S, 1), GateRecord::composite(1, 2, 4242),
      GateRecord::two(GateKind::CY, 2, 0)};
  for (const auto& g : gates) d.apply(g);
  d.apply_inverse(gates);
  CHECK(ref::dist(as_ref(d), before) < 1e-12);
}

TEST_CASE("expect_pauli matches the reference") {
  Rng rng(44);
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint32_t n = 4;
    const DenseState d = DenseState::from_product(random_product(n, rng));
    const PauliString p = random_pauli(n, rng);
    CHECK(d.expect_pauli(p) ==
          doctest::Approx(ref::expect_pauli(as_ref(d), p)).epsilon(1e-11));
  }
}

TEST_CASE("project_pauli returns the Born weight and renormalizes") {
  Rng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 3;
    DenseState d = DenseState::from_product(random_product(n, rng));
    const PauliString p = random_pauli(n, rng);
    const double e = d.expect_pauli(p);
    const int outcome = rng.next_bernoulli(0.5) ? +1 : -1;
    const double want_prob = 0.5 * (1.0 + outcome * e);
    if (want_prob < 1e-12) continue;
    const double prob = d.project_pauli(p, outcome);
    CHECK(prob == doctest::Approx(want_prob).epsilon(1e-11));
    CHECK(d.norm() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.expect_pauli(p) == doctest::Approx(static_cast<double>(outcome)).epsilon(1e-11));
    // Idempotent once inside the eigenspace.
    DenseState copy = d;
    CHECK(copy.project_pauli(p, outcome) == doctest::Approx(1.0).epsilon(1e-11));
  }
}

TEST_CASE("projecting an impossible branch throws") {
  DenseState d(1);  // |0>
  CHECK_THROWS_AS(d.project_pauli(PauliString::single(1, 0, false, true), -1),
                  iccr::ZeroProbabilityError);
}

TEST_CASE("contracted removes a factorized qubit") {
  Rng rng(46);
  ProductState st = random_product(3, rng);
  DenseState d = DenseState::from_product(st);
  d.apply(GateRecord::two(GateKind::CZ, 0, 2));  // entangles 0 and 2, leaves 1 alone

  const DenseState smaller = d.contracted(1);
  REQUIRE(smaller.n_qubits() == 2);
  ProductState two(2);
  two.set_slot(0, st.slot(0));
  two.set_slot(1, st.slot(2));
  DenseState want = DenseState::from_product(two);
  want.apply(GateRecord::two(GateKind::CZ, 0, 1));
  CHECK(want.fidelity(smaller) == doctest::Approx(1.0).epsilon(1e-12));

  CHECK_THROWS_AS(d.contracted(0), std::logic_error);
}

TEST_CASE("swap_qubits exchanges amplitude axes") {
  Rng rng(47);
  ProductState st = random_product(3, rng);
  DenseState d = DenseState::from_product(st);
  d.swap_qubits(0, 2);
  ProductState swapped = st;
  swapped.swap_slots(0, 2);
  CHECK(d.fidelity(DenseState::from_product(swapped)) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("exact entropies of reference states") {
  // Stabilizer states carry none at any order.
  ProductState zeros(3);
  CHECK(iccr::exact_sre(DenseState::from_product(zeros), 2.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  ProductState mixed_tags(2);
  mixed_tags.set_slot(0, SingleQubitState::tagged(StateTag::Xp));
  mixed_tags.set_slot(1, SingleQubitState::tagged(StateTag::Ym));
  for (const double order : {1.0, 2.0, 3.0}) {
    CHECK(iccr::exact_sre(DenseState::from_product(mixed_tags), order) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }

  // One qubit rotated by pi/7, closed forms frozen from an independent
  // calculation.
  ProductState one(1);
  one.set_slot(0, angle_state());
  const DenseState d = DenseState::from_product(one);
  CHECK(iccr::exact_sre(d, 1.0) == doctest::Approx(0.48199065280807241).epsilon(1e-12));
  CHECK(iccr::exact_sre(d, 2.0) == doctest::Approx(0.39141991993680153).epsilon(1e-12));
  CHECK(iccr::exact_sre(d, 3.0) == doctest::Approx(0.31791737290716066).epsilon(1e-12));

  // The T resource state: order two gives log2(4/3), order one gives 1/2.
  ProductState t(1);
  t.set_slot(0, SingleQubitState::from_amplitudes(
                    {std::sqrt(0.5), 0.0}, std::polar(std::sqrt(0.5), M_PI / 4.0)));
  const DenseState dt = DenseState::from_product(t);
  CHECK(iccr::exact_sre(dt, 2.0) == doctest::Approx(0.41503749927884376).epsilon(1e-12));
  CHECK(iccr::exact_sre(dt, 1.0) == doctest::Approx(0.5).epsilon(1e-12));

  // Additivity over a product.
  ProductState two(2, angle_state());
  CHECK(iccr::exact_sre(DenseState::from_product(two), 2.0) ==
        doctest::Approx(2.0 * 0.39141991993680153).epsilon(1e-12));
}

TEST_CASE("exact entropy is invariant under Clifford rotations") {
  Rng rng(48);
  ProductState st = random_product(3, rng);
  DenseState d = DenseState::from_product(st);
  const double before = iccr::exact_sre(d, 2.0);
  d.apply(GateRecord::two(GateKind::CX, 0, 1));
  d.apply(GateRecord::one(GateKind::H, 2));
  d.apply(GateRecord::composite(1, 2, 777));
  CHECK(iccr::exact_sre(d, 2.0) == doctest::Approx(before).epsilon(1e-10));
}

TEST_CASE("exact_projected_replacement inverts the replacement circuit") {
  Rng rng(49);
  ProductState st(2, angle_state());
  DenseState d = DenseState::from_product(st);
  PauliString zz(2);
  zz.set_bits(0, false, true);
  zz.set_bits(1, false, true);
  d.project_pauli(zz, +1);

  const std::vector<GateRecord> v_circ = {GateRecord::two(GateKind::CX, 1, 0),
                                          GateRecord::one(GateKind::S, 0)};
  const DenseState pulled = iccr::exact_projected_replacement(d, v_circ);
  CHECK(pulled.norm() == doctest::Approx(1.0).epsilon(1e-12));
  DenseState forward = pulled;
  for (const auto& g : v_circ) forward.apply(g);
  CHECK(forward.fidelity(d) == doctest::Approx(1.0).epsilon(1e-12));
}
