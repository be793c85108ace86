#include "iccr/dense_state.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "iccr/clifford_tableau.hpp"
#include "iccr/errors.hpp"
#include "iccr/two_qubit_cliffords.hpp"

namespace iccr {

namespace {

constexpr double kProjectTol = 1e-14;
constexpr double kFactorTol = 1e-9;

std::complex<double> i_pow(int d) {
  switch (d & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

GateKind inverse_kind(GateKind k) {
  if (k == GateKind::S) return GateKind::Sdg;
  if (k == GateKind::Sdg) return GateKind::S;
  return k;  // everything else is self-inverse
}

}  // namespace

DenseState::DenseState(std::uint32_t n_qubits) : n_(n_qubits) {
  if (n_ > kMaxQubits) throw std::invalid_argument("dense reference capped at 14 qubits");
  a_.assign(std::size_t{1} << n_, {0.0, 0.0});
  a_[0] = 1.0;
}

DenseState DenseState::from_product(const ProductState& st) {
  DenseState out(st.n_qubits());
  for (std::size_t idx = 0; idx < out.a_.size(); ++idx) {
    std::complex<double> amp{1.0, 0.0};
    for (std::uint32_t k = 0; k < out.n_; ++k) {
      const SingleQubitState& s = st.slot(k);
      amp *= (idx >> k) & 1 ? s.a1 : s.a0;
    }
    out.a_[idx] = amp;
  }
  return out;
}

void DenseState::apply_matrix1(std::uint32_t site, const Mat2& m) {
  const std::size_t bit = std::size_t{1} << site;
  for (std::size_t idx = 0; idx < a_.size(); ++idx) {
    if (idx & bit) continue;
    const std::complex<double> v0 = a_[idx];
    const std::complex<double> v1 = a_[idx | bit];
    a_[idx] = m[0] * v0 + m[1] * v1;
    a_[idx | bit] = m[2] * v0 + m[3] * v1;
  }
}

void DenseState::apply(const GateRecord& g) {
  if (is_single_qubit(g.kind)) {
    apply_matrix1(g.a, gate_matrix(g.kind));
    return;
  }
  const std::size_t ba = std::size_t{1} << g.a;
  const std::size_t bb = std::size_t{1} << g.b;
  switch (g.kind) {
    case GateKind::CX:
      for (std::size_t idx = 0; idx < a_.size(); ++idx) {
        if ((idx & ba) && !(idx & bb)) std::swap(a_[idx], a_[idx | bb]);
      }
      return;
    case GateKind::CY:
      for (std::size_t idx = 0; idx < a_.size(); ++idx) {
        if ((idx & ba) && !(idx & bb)) {
          const std::complex<double> v0 = a_[idx];
          const std::complex<double> v1 = a_[idx | bb];
          a_[idx] = std::complex<double>(0.0, -1.0) * v1;
          a_[idx | bb] = std::complex<double>(0.0, 1.0) * v0;
        }
      }
      return;
    case GateKind::CZ:
      for (std::size_t idx = 0; idx < a_.size(); ++idx) {
        if ((idx & ba) && (idx & bb)) a_[idx] = -a_[idx];
      }
      return;
    case GateKind::Swap:
      for (std::size_t idx = 0; idx < a_.size(); ++idx) {
        if ((idx & ba) && !(idx & bb)) std::swap(a_[idx], a_[(idx & ~ba) | bb]);
      }
      return;
    case GateKind::TwoQubitClifford: {
      const TwoQubitCliffordEntry& e = TwoQubitCliffords::instance().entry(g.index);
      for (const GateRecord& step : e.sequence) {
        GateRecord mapped = step;
        mapped.a = step.a == 0 ? g.a : g.b;
        mapped.b = step.b == 0 ? g.a : g.b;
        apply(mapped);
      }
      return;
    }
    default: throw std::logic_error("unhandled gate kind");
  }
}

void DenseState::apply_inverse(const std::vector<GateRecord>& time_ordered) {
  for (auto it = time_ordered.rbegin(); it != time_ordered.rend(); ++it) {
    if (it->kind == GateKind::TwoQubitClifford) {
      const TwoQubitCliffordEntry& e = TwoQubitCliffords::instance().entry(it->index);
      std::vector<GateRecord> mapped;
      mapped.reserve(e.sequence.size());
      for (const GateRecord& step : e.sequence) {
        GateRecord m = step;
        m.a = step.a == 0 ? it->a : it->b;
        m.b = step.b == 0 ? it->a : it->b;
        mapped.push_back(m);
      }
      apply_inverse(mapped);
    } else {
      GateRecord inv = *it;
      inv.kind = inverse_kind(it->kind);
      apply(inv);
    }
  }
}

double DenseState::project_pauli(const PauliString& p, int outcome) {
  if (p.n_qubits() != n_) throw std::invalid_argument("operator width mismatch");
  const std::uint64_t x = p.n_qubits() ? p.x_data()[0] : 0;
  const std::uint64_t z = p.n_qubits() ? p.z_data()[0] : 0;
  const std::complex<double> lead =
      i_pow(p.phase_exp() + std::popcount(x & z)) * (outcome < 0 ? -1.0 : 1.0);
  std::vector<std::complex<double>> out(a_.size());
  for (std::size_t b = 0; b < a_.size(); ++b) {
    const double sign = std::popcount(b & z) & 1 ? -1.0 : 1.0;
    out[b ^ x] = 0.5 * (a_[b ^ x] + lead * sign * a_[b]);
  }
  a_ = std::move(out);
  const double prob = norm();
  if (prob < kProjectTol) throw ZeroProbabilityError("projected branch has zero weight");
  const double scale = 1.0 / std::sqrt(prob);
  for (auto& amp : a_) amp *= scale;
  return prob;
}

double DenseState::expect_pauli(const PauliString& p) const {
  if (p.n_qubits() != n_) throw std::invalid_argument("operator width mismatch");
  const std::uint64_t x = p.n_qubits() ? p.x_data()[0] : 0;
  const std::uint64_t z = p.n_qubits() ? p.z_data()[0] : 0;
  const std::complex<double> lead = i_pow(p.phase_exp() + std::popcount(x & z));
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t b = 0; b < a_.size(); ++b) {
    const double sign = std::popcount(b & z) & 1 ? -1.0 : 1.0;
    acc += std::conj(a_[b ^ x]) * sign * a_[b];
  }
  return std::real(lead * acc);
}

std::complex<double> DenseState::overlap(const DenseState& other) const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t b = 0; b < a_.size(); ++b) acc += std::conj(a_[b]) * other.a_[b];
  return acc;
}

double DenseState::fidelity(const DenseState& other) const {
  return std::norm(overlap(other));
}

double DenseState::norm() const {
  double acc = 0.0;
  for (const auto& amp : a_) acc += std::norm(amp);
  return acc;
}

void DenseState::normalize() {
  const double scale = 1.0 / std::sqrt(norm());
  for (auto& amp : a_) amp *= scale;
}

DenseState DenseState::contracted(std::uint32_t column) const {
  const std::size_t bit = std::size_t{1} << column;
  const std::size_t low = bit - 1;
  const std::size_t half = a_.size() >> 1;
  std::vector<std::complex<double>> b0(half), b1(half);
  for (std::size_t j = 0; j < half; ++j) {
    const std::size_t idx = (j & low) | ((j & ~low) << 1);
    b0[j] = a_[idx];
    b1[j] = a_[idx | bit];
  }
  double n0 = 0.0, n1 = 0.0;
  for (std::size_t j = 0; j < half; ++j) {
    n0 += std::norm(b0[j]);
    n1 += std::norm(b1[j]);
  }
  // psi = rest (x) (c0|0> + c1|1>) when the column factorizes; recover rest
  // from the dominant branch and verify the residual.
  const std::vector<std::complex<double>>& big = n0 >= n1 ? b0 : b1;
  const double nbig = n0 >= n1 ? n0 : n1;
  DenseState out(n_ - 1);
  const double inv = 1.0 / std::sqrt(nbig);
  for (std::size_t j = 0; j < half; ++j) out.a_[j] = big[j] * inv;
  std::complex<double> c0{0.0, 0.0}, c1{0.0, 0.0};
  for (std::size_t j = 0; j < half; ++j) {
    c0 += std::conj(out.a_[j]) * b0[j];
    c1 += std::conj(out.a_[j]) * b1[j];
  }
  double residual = 0.0;
  for (std::size_t j = 0; j < half; ++j) {
    residual += std::norm(b0[j] - c0 * out.a_[j]) + std::norm(b1[j] - c1 * out.a_[j]);
  }
  if (std::sqrt(residual) > kFactorTol) {
    throw std::logic_error("contracted: column does not factorize");
  }
  // Fold the column amplitudes back in so the norm is preserved.
  const double cnorm = std::sqrt(std::norm(c0) + std::norm(c1));
  for (auto& amp : out.a_) amp *= cnorm;
  return out;
}

void DenseState::swap_qubits(std::uint32_t a, std::uint32_t b) {
  apply(GateRecord::two(GateKind::Swap, a, b));
}

DenseState replayed_state(const CliffordTableau& tab, const ProductState& st) {
  if (tab.n_qubits() != st.n_qubits()) throw std::invalid_argument("width mismatch");
  const std::uint32_t width = tab.log_width();
  if (width > DenseState::kMaxQubits) throw std::invalid_argument("replay width too large");
  ProductState columns(width, SingleQubitState::tagged(StateTag::Zp));
  std::vector<bool> live(width, false);
  for (std::uint32_t k = 0; k < tab.n_qubits(); ++k) {
    columns.set_slot(tab.column_alias(k), st.slot(k));
    live[tab.column_alias(k)] = true;
  }
  DenseState psi = DenseState::from_product(columns);
  for (const GateRecord& g : tab.log()) psi.apply(g);
  for (std::uint32_t col = width; col-- > 0;) {
    if (!live[col]) psi = psi.contracted(col);
  }
  // Remaining columns are the live aliases ascending; bring them to site
  // order with adjacent swaps.
  std::vector<std::uint32_t> order;
  order.reserve(tab.n_qubits());
  for (std::uint32_t col = 0; col < width; ++col) {
    if (!live[col]) continue;
    std::uint32_t site = 0;
    while (tab.column_alias(site) != col) ++site;
    order.push_back(site);
  }
  for (std::uint32_t pos = 0; pos < order.size(); ++pos) {
    while (order[pos] != pos) {
      const std::uint32_t other = order[pos];
      psi.swap_qubits(pos, other);
      std::swap(order[pos], order[other]);
    }
  }
  return psi;
}

double exact_sre(const DenseState& psi, double order) {
  const std::uint32_t n = psi.n_qubits();
  if (n > 8) throw std::invalid_argument("exact_sre capped at 8 qubits");
  const std::uint64_t count = std::uint64_t{1} << n;
  const double dim = static_cast<double>(count);
  if (order == 1.0) {
    double acc = 0.0;
    for (std::uint64_t x = 0; x < count; ++x) {
      for (std::uint64_t z = 0; z < count; ++z) {
        PauliString p(n);
        for (std::uint32_t k = 0; k < n; ++k) p.set_bits(k, (x >> k) & 1, (z >> k) & 1);
        const double e = psi.expect_pauli(p);
        const double xi = e * e / dim;
        if (xi > 0.0) acc -= xi * std::log2(xi);
      }
    }
    return acc - std::log2(dim);
  }
  double acc = 0.0;
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t z = 0; z < count; ++z) {
      PauliString p(n);
      for (std::uint32_t k = 0; k < n; ++k) p.set_bits(k, (x >> k) & 1, (z >> k) & 1);
      const double e = psi.expect_pauli(p);
      acc += std::pow(e * e, order);
    }
  }
  return std::log2(acc / dim) / (1.0 - order);
}

DenseState exact_projected_replacement(const DenseState& projected,
                                       const std::vector<GateRecord>& v_time_ordered) {
  DenseState out = projected;
  out.apply_inverse(v_time_ordered);
  out.normalize();
  return out;
}

}  // namespace iccr
