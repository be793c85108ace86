#include "iccr/validate.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>

#include "iccr/dense_state.hpp"
#include "iccr/magic.hpp"
#include "iccr/rng.hpp"
#include "iccr/t_gadget.hpp"
#include "iccr/two_qubit_cliffords.hpp"

namespace iccr {
namespace {

constexpr double kAngle = 0.44879895051282760549;  // pi/7

std::string describe(double worst, const char* what) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "worst %s %.3e", what, worst);
  return buf;
}

SingleQubitState random_state(Rng& rng) {
  const double u = rng.next_double();
  const double v = rng.next_double();
  const double w = rng.next_double();
  return SingleQubitState::from_amplitudes(
      std::polar(std::cos(u * 1.5), v * 6.28), std::polar(std::sin(u * 1.5), w * 6.28));
}

StateTag random_tag(Rng& rng) {
  return static_cast<StateTag>(rng.next_below(6));
}

void random_brick_layer(CliffordTableau& tab, std::uint32_t parity, Rng& rng) {
  const std::uint32_t n = tab.n_qubits();
  for (std::uint32_t a = parity % 2; a + 1 < n; a += 2) {
    tab.append_after(GateRecord::composite(
        a, a + 1, static_cast<std::uint16_t>(rng.next_below(TwoQubitCliffords::kCount))));
  }
}

void apply_layer_dense(DenseState& d, const CliffordTableau& tab, std::size_t from) {
  // Replays the tail of the tableau's log (gates appended after `from`).
  const auto& lg = tab.log();
  for (std::size_t k = from; k < lg.size(); ++k) d.apply(lg[k]);
}

// Circuits whose slots stay in tagged states take only lossless branches;
// the replayed state must match the dense co-simulation to rounding.
ValidationCheck check_exact_replay(std::uint32_t max_n, std::uint64_t seed) {
  double worst = 1.0;
  const double p_grid[3] = {0.2, 0.5, 1.0};
  for (std::uint32_t trial = 0; trial < 60; ++trial) {
    Rng rng = Rng::derive_stream(seed, trial);
    const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.next_below(max_n - 1));
    const double p = p_grid[trial % 3];
    CliffordTableau tab(n, /*retain_log=*/true);
    ProductState st(n);
    for (std::uint32_t k = 0; k < n; ++k) {
      st.set_slot(k, SingleQubitState::tagged(random_tag(rng)));
    }
    DenseState dense = DenseState::from_product(st);
    std::size_t replayed = 0;
    for (std::uint32_t t = 0; t < 6; ++t) {
      random_brick_layer(tab, t, rng);
      apply_layer_dense(dense, tab, replayed);
      replayed = tab.log().size();
      for (std::uint32_t site = 0; site < n; ++site) {
        if (!rng.next_bernoulli(p)) continue;
        const IterationReport rep = iccr_step(tab, st, site, OutcomePolicy::BornSample, rng);
        if (rep.fidelity != 1.0) return {"exact-branch replay", false, "lossy branch taken"};
        dense.project_pauli(PauliString::single(n, site, false, true), rep.outcome);
        replayed = tab.log().size();
      }
    }
    worst = std::min(worst, dense.fidelity(replayed_state(tab, st)));
  }
  return {"exact-branch replay", worst > 1.0 - 1e-8, describe(1.0 - worst, "infidelity")};
}

// Mixed-branch circuits: each reported step fidelity must match the dense
// overlap between the rebuilt product state and the exact projection of the
// previous one, and the accumulated product must track their product.
ValidationCheck check_step_fidelities(std::uint32_t max_n, std::uint64_t seed) {
  double worst = 0.0;
  for (std::uint32_t trial = 0; trial < 24; ++trial) {
    Rng rng = Rng::derive_stream(seed ^ 0x5bd1e995u, trial);
    const std::uint32_t n = 3 + static_cast<std::uint32_t>(rng.next_below(max_n - 2));
    CliffordTableau tab(n, /*retain_log=*/true);
    ProductState st(n, SingleQubitState::from_amplitudes({std::cos(kAngle), 0.0},
                                                         {std::sin(kAngle), 0.0}));
    double reported = 0.0, dense_sum = 0.0;
    for (std::uint32_t t = 0; t < 4; ++t) {
      random_brick_layer(tab, t, rng);
      for (std::uint32_t site = 0; site < n; ++site) {
        if (!rng.next_bernoulli(0.3)) continue;
        DenseState before = replayed_state(tab, st);
        const IterationReport rep = iccr_step(tab, st, site, OutcomePolicy::BornSample, rng);
        before.project_pauli(PauliString::single(n, site, false, true), rep.outcome);
        const double f_dense = before.fidelity(replayed_state(tab, st));
        worst = std::max(worst, std::abs(f_dense - rep.fidelity));
        reported += std::log(rep.fidelity);
        dense_sum += std::log(f_dense);
      }
    }
    worst = std::max(worst, std::abs(std::exp(reported) - std::exp(dense_sum)));
  }
  return {"step fidelity vs dense projection", worst < 1e-6, describe(worst, "deviation")};
}

ValidationCheck check_sre(std::uint32_t max_n, std::uint64_t seed) {
  double worst = 0.0;
  const std::uint32_t cap = std::min<std::uint32_t>(max_n, 6);
  for (std::uint32_t trial = 0; trial < 40; ++trial) {
    Rng rng = Rng::derive_stream(seed ^ 0x9e3779b9u, trial);
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.next_below(cap));
    ProductState st(n);
    for (std::uint32_t k = 0; k < n; ++k) st.set_slot(k, random_state(rng));
    const DenseState dense = DenseState::from_product(st);
    for (const double order : {1.0, 2.0, 3.0}) {
      worst = std::max(worst, std::abs(sre(st, order) - exact_sre(dense, order)));
    }
  }
  return {"additive entropy vs dense enumeration", worst < 1e-9, describe(worst, "deviation")};
}

ValidationCheck check_gadget(std::uint32_t max_n, std::uint64_t seed) {
  double worst = 1.0;
  const std::uint32_t cap = std::min<std::uint32_t>(max_n, 4);
  const Mat2 t_matrix = {std::complex<double>{1.0, 0.0},
                         {0.0, 0.0},
                         {0.0, 0.0},
                         std::polar(1.0, 3.14159265358979323846 / 4.0)};
  for (std::uint32_t trial = 0; trial < 40; ++trial) {
    Rng rng = Rng::derive_stream(seed ^ 0xc2b2ae35u, trial);
    const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.next_below(cap));
    CliffordTableau tab(n, /*retain_log=*/true);
    ProductState st(n);
    // The gadget is exact only when its measurement step is lossless: either
    // a bare tableau (two-site support) or an entangled one over slots whose
    // measurement branches never need the variational fit.
    const bool entangle = (trial % 2 == 1) && n >= 2;
    for (std::uint32_t k = 0; k < n; ++k) {
      st.set_slot(k, entangle ? SingleQubitState::tagged(random_tag(rng)) : random_state(rng));
    }
    if (entangle) {
      random_brick_layer(tab, 0, rng);
      random_brick_layer(tab, 1, rng);
    }
    const std::uint32_t target = static_cast<std::uint32_t>(rng.next_below(n));

    DenseState expected = replayed_state(tab, st);
    expected.apply_matrix1(target, t_matrix);
    inject_t_gate(tab, st, target, rng);
    if (tab.n_qubits() != n) return {"gadget equals dense T gate", false, "width leaked"};
    worst = std::min(worst, expected.fidelity(replayed_state(tab, st)));
  }
  return {"gadget equals dense T gate", worst > 1.0 - 1e-10, describe(1.0 - worst, "infidelity")};
}

}  // namespace

std::vector<ValidationCheck> run_validation_suite(std::uint32_t max_n, std::uint64_t seed) {
  max_n = std::max<std::uint32_t>(3, std::min<std::uint32_t>(max_n, 10));
  return {
      check_exact_replay(max_n, seed),
      check_step_fidelities(std::min<std::uint32_t>(max_n, 8), seed),
      check_sre(max_n, seed),
      check_gadget(max_n, seed),
  };
}

bool print_validation(const std::vector<ValidationCheck>& checks, std::ostream& out) {
  bool all = true;
  for (const auto& c : checks) {
    out << (c.passed ? "PASS" : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
    all = all && c.passed;
  }
  return all;
}

}  // namespace iccr
