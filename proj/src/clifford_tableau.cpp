#include "iccr/clifford_tableau.hpp"

#include <bit>
#include <stdexcept>

#include "iccr/gate_luts.hpp"
#include "iccr/two_qubit_cliffords.hpp"

namespace iccr {

CliffordTableau::CliffordTableau(std::uint32_t n_qubits, bool retain_log)
    : n_(n_qubits), retain_log_(retain_log), log_width_(n_qubits) {
  rows_x_.reserve(n_);
  rows_z_.reserve(n_);
  col_alias_.reserve(n_);
  for (std::uint32_t k = 0; k < n_; ++k) {
    rows_x_.push_back(PauliString::single(n_, k, true, false));
    rows_z_.push_back(PauliString::single(n_, k, false, true));
    col_alias_.push_back(k);
  }
}

GateRecord CliffordTableau::aliased(const GateRecord& g) const {
  GateRecord out = g;
  out.a = col_alias_[g.a];
  out.b = col_alias_[g.b];
  return out;
}

const std::deque<GateRecord>& CliffordTableau::log() const {
  if (!retain_log_) throw std::logic_error("tableau was built without a log");
  return log_;
}

PauliString CliffordTableau::expand_pair(std::uint32_t a, std::uint32_t b, bool xa, bool za,
                                         bool xb, bool zb, int phase_d) const {
  // i^phase_d sigma(xa,za)_a sigma(xb,zb)_b conjugated through the stored
  // rows: each sigma(x,z) = i^{xz} X^x Z^z pulls in the X row then the Z row.
  PauliString out = PauliString::identity(n_);
  out.mul_phase_exp(phase_d + (xa && za ? 1 : 0) + (xb && zb ? 1 : 0));
  if (xa) out.mul(rows_x_[a]);
  if (za) out.mul(rows_z_[a]);
  if (xb) out.mul(rows_x_[b]);
  if (zb) out.mul(rows_z_[b]);
  return out;
}

void CliffordTableau::append_after(const GateRecord& g) {
  if (is_single_qubit(g.kind)) {
    const LetterImage& ix = adjoint_conj1(g.kind, letter_code(true, false));
    const LetterImage& iz = adjoint_conj1(g.kind, letter_code(false, true));
    PauliString nx = expand_pair(g.a, g.a, ix.x, ix.z, false, false, ix.phase_d);
    PauliString nz = expand_pair(g.a, g.a, iz.x, iz.z, false, false, iz.phase_d);
    rows_x_[g.a] = std::move(nx);
    rows_z_[g.a] = std::move(nz);
  } else if (g.kind == GateKind::TwoQubitClifford) {
    const TwoQubitCliffordEntry& e = TwoQubitCliffords::instance().entry(g.index);
    auto expand = [&](const PauliString& img) {
      return expand_pair(g.a, g.b, img.x_bit(0), img.z_bit(0), img.x_bit(1), img.z_bit(1),
                         img.phase_exp());
    };
    PauliString nxa = expand(e.img_xa);
    PauliString nza = expand(e.img_za);
    PauliString nxb = expand(e.img_xb);
    PauliString nzb = expand(e.img_zb);
    rows_x_[g.a] = std::move(nxa);
    rows_z_[g.a] = std::move(nza);
    rows_x_[g.b] = std::move(nxb);
    rows_z_[g.b] = std::move(nzb);
  } else {
    auto expand = [&](std::uint8_t ca, std::uint8_t cb) {
      const PairImage& im = adjoint_conj2(g.kind, ca, cb);
      return expand_pair(g.a, g.b, im.xa, im.za, im.xb, im.zb, im.phase_d);
    };
    PauliString nxa = expand(1, 0);
    PauliString nza = expand(2, 0);
    PauliString nxb = expand(0, 1);
    PauliString nzb = expand(0, 2);
    rows_x_[g.a] = std::move(nxa);
    rows_z_[g.a] = std::move(nza);
    rows_x_[g.b] = std::move(nxb);
    rows_z_[g.b] = std::move(nzb);
  }
  if (retain_log_) log_.push_back(aliased(g));
}

void CliffordTableau::conjugate_rows_by(const GateRecord& g) {
  if (is_single_qubit(g.kind)) {
    for (auto rows : {&rows_x_, &rows_z_}) {
      for (PauliString& r : *rows) {
        const std::uint8_t c = letter_code(r.x_bit(g.a), r.z_bit(g.a));
        if (!c) continue;
        const LetterImage& im = adjoint_conj1(g.kind, c);
        r.set_bits(g.a, im.x, im.z);
        r.mul_phase_exp(im.phase_d);
      }
    }
  } else if (g.kind == GateKind::TwoQubitClifford) {
    const TwoQubitCliffordEntry& e = TwoQubitCliffords::instance().entry(g.index);
    for (auto rows : {&rows_x_, &rows_z_}) {
      for (PauliString& r : *rows) {
        const bool xa = r.x_bit(g.a), za = r.z_bit(g.a);
        const bool xb = r.x_bit(g.b), zb = r.z_bit(g.b);
        if (!(xa || za || xb || zb)) continue;
        PauliString mini(2);
        mini.mul_phase_exp((xa && za ? 1 : 0) + (xb && zb ? 1 : 0));
        if (xa) mini.mul(e.img_xa);
        if (za) mini.mul(e.img_za);
        if (xb) mini.mul(e.img_xb);
        if (zb) mini.mul(e.img_zb);
        r.set_bits(g.a, mini.x_bit(0), mini.z_bit(0));
        r.set_bits(g.b, mini.x_bit(1), mini.z_bit(1));
        r.mul_phase_exp(mini.phase_exp());
      }
    }
  } else {
    for (auto rows : {&rows_x_, &rows_z_}) {
      for (PauliString& r : *rows) {
        const std::uint8_t ca = letter_code(r.x_bit(g.a), r.z_bit(g.a));
        const std::uint8_t cb = letter_code(r.x_bit(g.b), r.z_bit(g.b));
        if (!(ca | cb)) continue;
        const PairImage& im = adjoint_conj2(g.kind, ca, cb);
        r.set_bits(g.a, im.xa, im.za);
        r.set_bits(g.b, im.xb, im.zb);
        r.mul_phase_exp(im.phase_d);
      }
    }
  }
}

void CliffordTableau::append_before(const std::vector<GateRecord>& time_ordered) {
  // Rows become W^dag row W with W = g_m ... g_1, i.e. conjugation by each
  // gate's adjoint starting from the innermost factor g_m.
  for (auto it = time_ordered.rbegin(); it != time_ordered.rend(); ++it) {
    conjugate_rows_by(*it);
  }
  if (retain_log_) {
    for (auto it = time_ordered.rbegin(); it != time_ordered.rend(); ++it) {
      log_.push_front(aliased(*it));
    }
  }
}

void CliffordTableau::rotate_before(const std::vector<std::uint32_t>& h_sites,
                                    const std::vector<std::uint32_t>& y_sites) {
  const std::uint32_t words = (n_ + 63u) >> 6;
  std::vector<std::uint64_t> mh(words, 0), mg(words, 0);
  for (std::uint32_t s : h_sites) mh[s >> 6] |= 1ull << (s & 63);
  for (std::uint32_t s : y_sites) mg[s >> 6] |= 1ull << (s & 63);
  // Only words the masks touch can change; typical supports cover few words.
  std::vector<std::uint32_t> active;
  active.reserve(words);
  for (std::uint32_t w = 0; w < words; ++w) {
    if (mh[w] | mg[w]) active.push_back(w);
  }

  for (auto rows : {&rows_x_, &rows_z_}) {
    for (PauliString& r : *rows) {
      std::uint64_t* x = r.x_data();
      std::uint64_t* z = r.z_data();
      int flips = 0;
      for (const std::uint32_t w : active) {
        // H sites: swap x/z, sign flip on Y letters.
        flips += std::popcount(x[w] & z[w] & mh[w]);
        const std::uint64_t t = (x[w] ^ z[w]) & mh[w];
        x[w] ^= t;
        z[w] ^= t;
        // Cycle sites: (x, z) <- (x ^ z, x), no signs.
        const std::uint64_t ox = x[w];
        x[w] ^= z[w] & mg[w];
        z[w] ^= (z[w] ^ ox) & mg[w];
      }
      r.mul_phase_exp(2 * flips);
    }
  }

  if (retain_log_) {
    std::vector<GateRecord> records;
    records.reserve(h_sites.size() + 2 * y_sites.size());
    auto hi = h_sites.begin();
    auto yi = y_sites.begin();
    // Disjoint-site gates commute; emit per site ascending for a stable log.
    while (hi != h_sites.end() || yi != y_sites.end()) {
      if (yi == y_sites.end() || (hi != h_sites.end() && *hi < *yi)) {
        records.push_back(GateRecord::one(GateKind::H, *hi++));
      } else {
        records.push_back(GateRecord::one(GateKind::H, *yi));
        records.push_back(GateRecord::one(GateKind::S, *yi));
        ++yi;
      }
    }
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
      log_.push_front(aliased(*it));
    }
  }
}

void CliffordTableau::cx_fan_in_before(const std::vector<std::uint32_t>& controls,
                                       std::uint32_t target) {
  const std::uint32_t words = (n_ + 63u) >> 6;
  std::vector<std::uint64_t> m(words, 0);
  for (std::uint32_t s : controls) m[s >> 6] |= 1ull << (s & 63);
  std::vector<std::uint32_t> active;
  active.reserve(words);
  for (std::uint32_t w = 0; w < words; ++w) {
    if (m[w]) active.push_back(w);
  }

  for (auto rows : {&rows_x_, &rows_z_}) {
    for (PauliString& r : *rows) {
      std::uint64_t* x = r.x_data();
      std::uint64_t* z = r.z_data();
      const bool zt = r.z_bit(target);
      const bool xt = r.x_bit(target);
      int h = 0;
      if (zt) {
        int phase = 0;
        for (const std::uint32_t w : active) {
          h ^= std::popcount(x[w] & m[w]) & 1;
          phase += std::popcount(x[w] & ~z[w] & m[w]);
          phase += 3 * std::popcount(x[w] & z[w] & m[w]);
          z[w] ^= m[w];
        }
        phase += h * (2 * (xt ? 1 : 0) + 1);
        r.mul_phase_exp(phase);
      } else {
        for (const std::uint32_t w : active) h ^= std::popcount(x[w] & m[w]) & 1;
      }
      if (h) r.set_bits(target, !xt, zt);
    }
  }

  if (retain_log_) {
    for (auto it = controls.rbegin(); it != controls.rend(); ++it) {
      log_.push_front(aliased(GateRecord::two(GateKind::CX, *it, target)));
    }
  }
}

void CliffordTableau::add_qubit() {
  for (auto rows : {&rows_x_, &rows_z_}) {
    for (PauliString& r : *rows) r.push_back_qubit();
  }
  ++n_;
  rows_x_.push_back(PauliString::single(n_, n_ - 1, true, false));
  rows_z_.push_back(PauliString::single(n_, n_ - 1, false, true));
  col_alias_.push_back(log_width_++);
}

void CliffordTableau::drop_last_qubit() {
  const std::uint32_t a = n_ - 1;
  for (std::uint32_t k = 0; k + 1 < n_; ++k) {
    if (rows_x_[k].x_bit(a) || rows_x_[k].z_bit(a) || rows_z_[k].x_bit(a) ||
        rows_z_[k].z_bit(a)) {
      throw std::logic_error("drop_last_qubit: another row still touches the qubit");
    }
  }
  PauliString probe_x = rows_x_[a];
  probe_x.set_bits(a, false, false);
  PauliString probe_z = rows_z_[a];
  probe_z.set_bits(a, false, false);
  if (!probe_x.is_identity() || !probe_z.is_identity()) {
    throw std::logic_error("drop_last_qubit: the qubit is still entangled");
  }
  rows_x_.pop_back();
  rows_z_.pop_back();
  for (auto rows : {&rows_x_, &rows_z_}) {
    for (PauliString& r : *rows) r.pop_back_qubit();
  }
  --n_;
  col_alias_.pop_back();
}

bool CliffordTableau::is_valid() const {
  for (std::uint32_t k = 0; k < n_; ++k) {
    if (!rows_x_[k].is_hermitian() || !rows_z_[k].is_hermitian()) return false;
    if (rows_x_[k].commutes_with(rows_z_[k])) return false;
  }
  for (std::uint32_t k = 0; k < n_; ++k) {
    for (std::uint32_t j = k + 1; j < n_; ++j) {
      if (!rows_x_[k].commutes_with(rows_x_[j])) return false;
      if (!rows_x_[k].commutes_with(rows_z_[j])) return false;
      if (!rows_z_[k].commutes_with(rows_x_[j])) return false;
      if (!rows_z_[k].commutes_with(rows_z_[j])) return false;
    }
  }
  return true;
}

}  // namespace iccr
