#include "iccr/iccr_step.hpp"

#include <cmath>
#include <stdexcept>

#include "iccr/errors.hpp"

namespace iccr {
namespace {

constexpr double kProbTol = 1e-14;
constexpr double kSweepTol = 1e-12;
constexpr double kVectorTol = 1e-30;
constexpr std::uint32_t kMaxSweeps = 200;

std::complex<double> i_pow(int q) {
  static constexpr std::complex<double> kTable[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  return kTable[q & 3];
}

// +-1 when the tag is an eigenstate of the letter (1=X, 2=Z, 3=Y), else 0.
int tag_eigenvalue(StateTag tag, int letter) {
  switch (letter) {
    case 1: return tag == StateTag::Xp ? +1 : tag == StateTag::Xm ? -1 : 0;
    case 2: return tag == StateTag::Zp ? +1 : tag == StateTag::Zm ? -1 : 0;
    case 3: return tag == StateTag::Yp ? +1 : tag == StateTag::Ym ? -1 : 0;
    default: return 0;
  }
}

// Phase index q with |<psi(q)|tag>| = 1, where psi(q) = (|0> + i^q |1>)/sqrt2.
// Only the four equatorial tags match one exactly.
int tag_q(StateTag tag) {
  switch (tag) {
    case StateTag::Xp: return 0;
    case StateTag::Yp: return 1;
    case StateTag::Xm: return 2;
    case StateTag::Ym: return 3;
    default: return -1;
  }
}

// Factor pair (<b|a>, <b|Z|a>) entering W's product form.
struct FactorPair {
  std::complex<double> id;
  std::complex<double> z;
};

FactorPair factors_for(const std::complex<double>& b0, const std::complex<double>& b1,
                       const SingleQubitState& alpha) {
  const std::complex<double> t0 = std::conj(b0) * alpha.a0;
  const std::complex<double> t1 = std::conj(b1) * alpha.a1;
  return {t0 + t1, t0 - t1};
}

}  // namespace

const char* to_string(StepBranch b) {
  switch (b) {
    case StepBranch::TrivialDrop: return "TrivialDrop";
    case StepBranch::StabilizerTarget: return "StabilizerTarget";
    case StepBranch::VariationalTarget: return "VariationalTarget";
  }
  return "?";
}

SupportOptimization optimize_support(const std::vector<SingleQubitState>& alphas,
                                     std::size_t star_index, int q_star, int s) {
  const std::size_t m = alphas.size();
  SupportOptimization out;

  // Working amplitudes; the starred entry is pinned to the unnormalized pair
  // (1, i^{q*}), which makes W exactly the overlap between the rebuilt state
  // and the projected one with no stray normalization factor.
  std::vector<std::complex<double>> b0(m), b1(m);
  std::vector<FactorPair> f(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (k == star_index) {
      b0[k] = {1.0, 0.0};
      b1[k] = i_pow(q_star);
    } else {
      b0[k] = alphas[k].a0;
      b1[k] = alphas[k].a1;
    }
    f[k] = factors_for(b0[k], b1[k], alphas[k]);
  }

  const double sd = static_cast<double>(s);
  auto total_w = [&](const std::complex<double>& prod_id,
                     const std::complex<double>& prod_z) {
    return 0.5 * (prod_id + sd * prod_z);
  };

  std::complex<double> prod_id{1.0, 0.0}, prod_z{1.0, 0.0};
  for (const auto& fk : f) {
    prod_id *= fk.id;
    prod_z *= fk.z;
  }
  std::complex<double> w = total_w(prod_id, prod_z);
  double best = std::abs(w);

  std::vector<std::complex<double>> suf_id(m + 1), suf_z(m + 1);
  out.converged = (m <= 1);
  for (std::uint32_t sweep = 0; sweep < kMaxSweeps && !out.converged; ++sweep) {
    suf_id[m] = suf_z[m] = {1.0, 0.0};
    for (std::size_t k = m; k-- > 0;) {
      suf_id[k] = f[k].id * suf_id[k + 1];
      suf_z[k] = f[k].z * suf_z[k + 1];
    }
    std::complex<double> pre_id{1.0, 0.0}, pre_z{1.0, 0.0};
    for (std::size_t k = 0; k < m; ++k) {
      if (k != star_index) {
        // Best unit beta_k given the others: along c_id*alpha + s*c_z*Z alpha.
        const std::complex<double> c_id = pre_id * suf_id[k + 1];
        const std::complex<double> c_z = pre_z * suf_z[k + 1];
        const std::complex<double> v0 = (c_id + sd * c_z) * alphas[k].a0;
        const std::complex<double> v1 = (c_id - sd * c_z) * alphas[k].a1;
        const double n2 = std::norm(v0) + std::norm(v1);
        if (n2 > kVectorTol) {
          const double inv = 1.0 / std::sqrt(n2);
          b0[k] = v0 * inv;
          b1[k] = v1 * inv;
          f[k] = factors_for(b0[k], b1[k], alphas[k]);
        }
      }
      pre_id *= f[k].id;
      pre_z *= f[k].z;
    }
    w = total_w(pre_id, pre_z);
    ++out.sweeps;
    const double now = std::abs(w);
    if (now - best < kSweepTol) out.converged = true;
    best = std::max(best, now);
  }

  out.overlap = w;
  out.betas.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    out.betas[k] = SingleQubitState::from_amplitudes(b0[k], b1[k]);
  }
  return out;
}

IterationReport iccr_step(CliffordTableau& tab, ProductState& state, std::uint32_t j,
                          OutcomePolicy policy, Rng& rng) {
  const PauliString p = tab.z_image(j);  // copy: rows mutate below
  if (!p.is_hermitian()) throw std::logic_error("measured string must be Hermitian");
  int sign_acc = p.sign();

  // Split the support: sites whose slot is an eigenstate of the local letter
  // contribute a fixed sign; the rest survive into the collective part.
  std::vector<std::uint32_t> support;
  std::vector<int> letters;
  p.for_each_site([&](std::uint32_t site, std::uint64_t x, std::uint64_t z) {
    const int letter = static_cast<int>(x | (z << 1));
    const SingleQubitState& slot = state.slot(site);
    if (slot.is_tagged()) {
      if (const int ev = tag_eigenvalue(slot.tag, letter); ev != 0) {
        sign_acc *= ev;
        return;
      }
    }
    support.push_back(site);
    letters.push_back(letter);
  });

  IterationReport rep;
  rep.support_size = static_cast<std::uint32_t>(support.size());

  if (support.empty()) {
    // The string acts as the scalar sign_acc on the state: deterministic
    // outcome, no state or tableau change.
    if (policy == OutcomePolicy::PostselectPlus && sign_acc < 0) {
      throw ZeroProbabilityError("postselected measurement outcome has probability 0");
    }
    rep.branch = StepBranch::TrivialDrop;
    rep.outcome = sign_acc;
    return rep;
  }

  // Rotate X and Y letters down to Z on the state and tableau alike. The
  // X rotation is H, the Y rotation is H S-dagger (applied right-to-left).
  std::vector<std::uint32_t> h_sites, y_sites;
  for (std::size_t k = 0; k < support.size(); ++k) {
    if (letters[k] == 1) {
      h_sites.push_back(support[k]);
      state.apply(GateKind::H, support[k]);
    } else if (letters[k] == 3) {
      y_sites.push_back(support[k]);
      state.apply(GateKind::Sdg, support[k]);
      state.apply(GateKind::H, support[k]);
    }
  }
  if (!h_sites.empty() || !y_sites.empty()) tab.rotate_before(h_sites, y_sites);

  double zprod = 1.0;
  for (const auto site : support) zprod *= state.slot(site).expect_z();

  int s_eff;  // outcome of the all-Z string with the absorbed sign factored out
  if (policy == OutcomePolicy::PostselectPlus) {
    s_eff = sign_acc;  // forces physical outcome +1
    if (0.5 * (1.0 + s_eff * zprod) < kProbTol) {
      throw ZeroProbabilityError("postselected measurement outcome has probability 0");
    }
  } else {
    s_eff = rng.next_sign(0.5 * (1.0 + zprod));
  }
  rep.outcome = s_eff * sign_acc;

  // Pick the slot (and local phase index) with the largest squared overlap
  // against the four equatorial targets psi(q) = (|0> + i^q |1>)/sqrt2.
  // Tagged survivors score exactly 1 at their own q, so ties cannot arise
  // from rounding; the first maximum in (site, q) order wins.
  std::size_t star_k = 0;
  int q_star = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < support.size(); ++k) {
    const SingleQubitState& slot = state.slot(support[k]);
    if (slot.is_tagged()) {
      if (1.0 > best) {
        best = 1.0;
        star_k = k;
        q_star = tag_q(slot.tag);
      }
    } else {
      for (int q = 0; q < 4; ++q) {
        const std::complex<double> amp = slot.a0 + i_pow((4 - q) & 3) * slot.a1;
        const double o = 0.5 * std::norm(amp);
        if (o > best) {
          best = o;
          star_k = k;
          q_star = q;
        }
      }
    }
  }
  const std::uint32_t star_site = support[star_k];
  rep.target_site = static_cast<int>(star_site);
  rep.target_q = q_star;

  if (state.slot(star_site).is_tagged()) {
    // The projected state factorizes exactly over the rebuilt product: every
    // other slot is untouched and no fidelity is lost.
    rep.branch = StepBranch::StabilizerTarget;
  } else {
    rep.branch = StepBranch::VariationalTarget;
    std::vector<SingleQubitState> alphas;
    alphas.reserve(support.size());
    for (const auto site : support) alphas.push_back(state.slot(site));
    const SupportOptimization opt = optimize_support(alphas, star_k, q_star, s_eff);
    const double nsq = 0.5 * (1.0 + s_eff * zprod);
    rep.fidelity = std::norm(opt.overlap) / nsq;
    rep.sweeps = opt.sweeps;
    rep.converged = opt.converged;
    rep.rank_delta = +1;
    for (std::size_t k = 0; k < support.size(); ++k) {
      if (k != star_k) state.set_slot(support[k], opt.betas[k]);
    }
  }

  // Compensating Clifford, time-ordered X^{(1-s)/2} -> CX fan-in -> S^{q*}.
  // append_before composes each call in front of the earlier ones, so the
  // chunks are issued latest-first.
  if (q_star != 0) {
    const GateKind kind =
        q_star == 1 ? GateKind::S : (q_star == 2 ? GateKind::Z : GateKind::Sdg);
    tab.append_before({GateRecord::one(kind, star_site)});
  }
  if (support.size() > 1) {
    std::vector<std::uint32_t> controls;
    controls.reserve(support.size() - 1);
    for (const auto site : support) {
      if (site != star_site) controls.push_back(site);
    }
    tab.cx_fan_in_before(controls, star_site);
  }
  if (s_eff < 0) tab.append_before({GateRecord::one(GateKind::X, star_site)});

  state.set_slot(star_site, SingleQubitState::tagged(StateTag::Zp));
  return rep;
}

}  // namespace iccr
