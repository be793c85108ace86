#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "iccr/dense_state.hpp"
#include "iccr/magic.hpp"
#include "iccr/rng.hpp"

using iccr::ProductState;
using iccr::Rng;
using iccr::SingleQubitState;
using iccr::StateTag;

namespace {

constexpr double kAngle = 0.44879895051282760549;  // pi/7
constexpr double kM1 = 0.48199065280807241;
constexpr double kM2 = 0.39141991993680153;
constexpr double kM3 = 0.31791737290716066;
constexpr double kTGain = 0.41503749927884376;  // log2(4/3)

SingleQubitState angle_state() {
  return SingleQubitState::from_amplitudes({std::cos(kAngle), 0.0}, {std::sin(kAngle), 0.0});
}

SingleQubitState t_state() {
  return SingleQubitState::from_amplitudes({std::sqrt(0.5), 0.0},
                                           std::polar(std::sqrt(0.5), M_PI / 4.0));
}

SingleQubitState random_state(Rng& rng) {
  return SingleQubitState::from_amplitudes(
      {rng.next_double() - 0.5, rng.next_double() - 0.5},
      {rng.next_double() - 0.5, rng.next_double() - 0.5});
}

}  // namespace

TEST_CASE("tagged slots carry exactly zero at every order") {
  for (int tag_i = 0; tag_i < 6; ++tag_i) {
    const SingleQubitState s = SingleQubitState::tagged(static_cast<StateTag>(tag_i));
    for (const double order : {0.5, 1.0, 2.0, 3.0}) {
      CHECK(iccr::single_qubit_sre(s, order) == 0.0);
    }
  }
}

TEST_CASE("closed forms for the pi/7 rotation") {
  const SingleQubitState s = angle_state();
  CHECK(iccr::single_qubit_sre(s, 1.0) == doctest::Approx(kM1).epsilon(1e-12));
  CHECK(iccr::single_qubit_sre(s, 2.0) == doctest::Approx(kM2).epsilon(1e-12));
  CHECK(iccr::single_qubit_sre(s, 3.0) == doctest::Approx(kM3).epsilon(1e-12));
}

TEST_CASE("closed forms for the T resource state") {
  const SingleQubitState s = t_state();
  CHECK(iccr::single_qubit_sre(s, 2.0) == doctest::Approx(kTGain).epsilon(1e-12));
  CHECK(iccr::single_qubit_sre(s, 1.0) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("the order-one value is the limit of nearby orders") {
  const SingleQubitState s = angle_state();
  const double at_one = iccr::single_qubit_sre(s, 1.0);
  CHECK(iccr::single_qubit_sre(s, 1.0 - 1e-7) == doctest::Approx(at_one).epsilon(1e-5));
  CHECK(iccr::single_qubit_sre(s, 1.0 + 1e-7) == doctest::Approx(at_one).epsilon(1e-5));
}

TEST_CASE("additivity over slots") {
  Rng rng(51);
  ProductState st(4);
  double sum2 = 0.0;
  for (std::uint32_t k = 0; k < 4; ++k) {
    const SingleQubitState s = k == 2 ? SingleQubitState::tagged(StateTag::Yp)
                                      : random_state(rng);
    st.set_slot(k, s);
    sum2 += iccr::single_qubit_sre(s, 2.0);
  }
  CHECK(iccr::sre(st, 2.0) == doctest::Approx(sum2).epsilon(1e-12));
}

TEST_CASE("product values agree with the dense enumeration") {
  Rng rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.next_below(4));
    ProductState st(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      st.set_slot(k, rng.next_bernoulli(0.3)
                         ? SingleQubitState::tagged(static_cast<StateTag>(rng.next_below(6)))
                         : random_state(rng));
    }
    const iccr::DenseState d = iccr::DenseState::from_product(st);
    for (const double order : {1.0, 2.0, 3.0}) {
      REQUIRE(std::abs(iccr::sre(st, order) - iccr::exact_sre(d, order)) < 1e-9);
    }
  }
}

TEST_CASE("nullity counts untagged slots") {
  ProductState st(5);
  CHECK(iccr::nullity(st) == 0);
  st.set_slot(1, angle_state());
  st.set_slot(4, t_state());
  CHECK(iccr::nullity(st) == 2);
  st.set_slot(1, SingleQubitState::tagged(StateTag::Xm));
  CHECK(iccr::nullity(st) == 1);
}
