#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <cstdint>

#include "iccr/dense_state.hpp"
#include "iccr/magic.hpp"
#include "iccr/rng.hpp"
#include "iccr/t_gadget.hpp"
#include "iccr/two_qubit_cliffords.hpp"

using iccr::CliffordTableau;
using iccr::DenseState;
using iccr::GateKind;
using iccr::GateRecord;
using iccr::IterationReport;
using iccr::Mat2;
using iccr::ProductState;
using iccr::Rng;
using iccr::SingleQubitState;
using iccr::StateTag;

namespace {

const Mat2 kTMatrix = {std::complex<double>{1.0, 0.0},
                       {0.0, 0.0},
                       {0.0, 0.0},
                       std::polar(1.0, M_PI / 4.0)};

SingleQubitState random_state(Rng& rng) {
  return SingleQubitState::from_amplitudes(
      {rng.next_double() - 0.5, rng.next_double() - 0.5},
      {rng.next_double() - 0.5, rng.next_double() - 0.5});
}

void random_layers(CliffordTableau& tab, Rng& rng, int layers) {
  const std::uint32_t n = tab.n_qubits();
  for (int t = 0; t < layers; ++t) {
    for (std::uint32_t a = static_cast<std::uint32_t>(t) % 2; a + 1 < n; a += 2) {
      tab.append_after(GateRecord::composite(
          a, a + 1, static_cast<std::uint16_t>(rng.next_below(iccr::TwoQubitCliffords::kCount))));
    }
  }
}

}  // namespace

TEST_CASE("the resource state is the equatorial pi/4 point") {
  const SingleQubitState t = iccr::t_resource_state();
  CHECK(t.tag == StateTag::NonStab);
  CHECK(std::abs(t.a0 - std::complex<double>{std::sqrt(0.5), 0.0}) < 1e-15);
  CHECK(std::abs(t.a1 - std::polar(std::sqrt(0.5), M_PI / 4.0)) < 1e-15);
  CHECK(iccr::single_qubit_sre(t, 2.0) == doctest::Approx(0.41503749927884376).epsilon(1e-12));
}

TEST_CASE("gadget equals a dense T gate on bare product states") {
  Rng rng(81);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.next_below(4));
    CliffordTableau tab(n, /*retain_log=*/true);
    ProductState st(n);
    for (std::uint32_t k = 0; k < n; ++k) st.set_slot(k, random_state(rng));
    const auto target = static_cast<std::uint32_t>(rng.next_below(n));

    DenseState expected = iccr::replayed_state(tab, st);
    expected.apply_matrix1(target, kTMatrix);

    const IterationReport rep = iccr::inject_t_gate(tab, st, target, rng);
    REQUIRE(rep.outcome == +1);
    REQUIRE(tab.n_qubits() == n);
    REQUIRE(st.n_qubits() == n);
    REQUIRE(rep.fidelity > 1.0 - 1e-12);
    const double f = expected.fidelity(iccr::replayed_state(tab, st));
    REQUIRE(f > 1.0 - 1e-12);
    REQUIRE(tab.is_valid());
  }
}

TEST_CASE("without recycling the ancilla parks in |0> at full width") {
  Rng rng(82);
  for (int trial = 0; trial < 20; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.next_below(4));
    CliffordTableau tab(n, /*retain_log=*/true);
    ProductState st(n);
    for (std::uint32_t k = 0; k < n; ++k) st.set_slot(k, random_state(rng));
    const auto target = static_cast<std::uint32_t>(rng.next_below(n));

    DenseState expected = iccr::replayed_state(tab, st);
    expected.apply_matrix1(target, kTMatrix);

    iccr::inject_t_gate(tab, st, target, rng, /*recycle=*/false);
    REQUIRE(tab.n_qubits() == n + 1);
    REQUIRE(st.n_qubits() == n + 1);

    // The widened pair must represent (T psi) (x) |0>: the postselected
    // ancilla wire ends in |0> whichever slot carries the reset tag.
    const DenseState wide = iccr::replayed_state(tab, st);
    DenseState combined(n + 1);
    for (std::uint64_t idx = 0; idx < expected.amplitudes().size(); ++idx) {
      combined.amp(idx) = expected.amplitudes()[idx];
    }
    REQUIRE(combined.fidelity(wide) > 1.0 - 1e-10);
  }
}

TEST_CASE("gadget stays exact over entangled stabilizer backgrounds") {
  Rng rng(83);
  for (int trial = 0; trial < 25; ++trial) {
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.next_below(3));
    CliffordTableau tab(n, /*retain_log=*/true);
    ProductState st(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      st.set_slot(k, SingleQubitState::tagged(static_cast<StateTag>(rng.next_below(6))));
    }
    random_layers(tab, rng, 3);
    const auto target = static_cast<std::uint32_t>(rng.next_below(n));

    DenseState expected = iccr::replayed_state(tab, st);
    expected.apply_matrix1(target, kTMatrix);

    const IterationReport rep = iccr::inject_t_gate(tab, st, target, rng);
    REQUIRE(rep.fidelity > 1.0 - 1e-12);
    REQUIRE(tab.n_qubits() == n);
    const double f = expected.fidelity(iccr::replayed_state(tab, st));
    REQUIRE(f > 1.0 - 1e-10);
  }
}

TEST_CASE("a lossy background still postselects safely") {
  Rng rng(84);
  for (int trial = 0; trial < 15; ++trial) {
    const std::uint32_t n = 3;
    CliffordTableau tab(n, /*retain_log=*/true);
    ProductState st(n);
    for (std::uint32_t k = 0; k < n; ++k) st.set_slot(k, random_state(rng));
    random_layers(tab, rng, 2);
    const IterationReport rep =
        iccr::inject_t_gate(tab, st, static_cast<std::uint32_t>(rng.next_below(n)), rng);
    CHECK(rep.outcome == +1);
    CHECK(rep.fidelity > 0.0);
    CHECK(rep.fidelity < 1.0 + 1e-12);
    CHECK(tab.n_qubits() == n);
    CHECK(tab.is_valid());
  }
}

TEST_CASE("one gadget turns |X+> into the resource state") {
  CliffordTableau tab(1, /*retain_log=*/true);
  ProductState st(1);
  st.set_slot(0, SingleQubitState::tagged(StateTag::Xp));
  Rng rng(85);

  CHECK(iccr::sre(st, 2.0) == 0.0);
  const IterationReport rep = iccr::inject_t_gate(tab, st, 0, rng);
  CHECK(rep.fidelity == 1.0);  // tagged survivor: strictly lossless
  CHECK(tab.n_qubits() == 1);
  CHECK(iccr::nullity(st) == 1);
  CHECK(iccr::sre(st, 2.0) == doctest::Approx(0.41503749927884376).epsilon(1e-12));

  ProductState want(1);
  want.set_slot(0, iccr::t_resource_state());
  CHECK(iccr::replayed_state(tab, st).fidelity(DenseState::from_product(want)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("two gadgets compose to the S gate") {
  CliffordTableau tab(1, /*retain_log=*/true);
  ProductState st(1);
  st.set_slot(0, SingleQubitState::tagged(StateTag::Xp));
  Rng rng(86);
  iccr::inject_t_gate(tab, st, 0, rng);
  iccr::inject_t_gate(tab, st, 0, rng);
  CHECK(tab.n_qubits() == 1);

  // T T |+> = S |+> = |Y+>, a stabilizer state again: the slot snaps back.
  CHECK(st.count_tagged() == 1);
  CHECK(iccr::sre(st, 2.0) == 0.0);
  ProductState want(1);
  want.set_slot(0, SingleQubitState::tagged(StateTag::Yp));
  CHECK(iccr::replayed_state(tab, st).fidelity(DenseState::from_product(want)) ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("a gadget on |0> is the identity") {
  CliffordTableau tab(1, /*retain_log=*/true);
  ProductState st(1);
  Rng rng(87);
  const IterationReport rep = iccr::inject_t_gate(tab, st, 0, rng);
  CHECK(rep.support_size == 1);  // only the ancilla survives absorption
  CHECK(rep.fidelity > 1.0 - 1e-12);
  CHECK(st.slot(0).tag == StateTag::Zp);
  CHECK(tab.n_qubits() == 1);
  CHECK(iccr::sre(st, 2.0) == 0.0);
  const DenseState got = iccr::replayed_state(tab, st);
  CHECK(std::norm(got.amplitudes()[0]) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("repeated injections keep the representation within one ancilla") {
  Rng rng(88);
  const std::uint32_t n = 4;
  CliffordTableau tab(n, /*retain_log=*/true);
  ProductState st(n);
  for (std::uint32_t k = 0; k < n; ++k) {
    st.set_slot(k, SingleQubitState::tagged(static_cast<StateTag>(rng.next_below(6))));
  }
  for (int round = 0; round < 12; ++round) {
    random_layers(tab, rng, 1);
    iccr::inject_t_gate(tab, st, static_cast<std::uint32_t>(rng.next_below(n)), rng);
    REQUIRE(tab.n_qubits() == n);
    REQUIRE(st.n_qubits() == n);
    REQUIRE(tab.is_valid());
  }
}
