#include "iccr/pauli_string.hpp"

#include <bit>
#include <stdexcept>

namespace iccr {

namespace {

// Bits beyond n_qubits stay zero in every path below, so the word-parallel
// popcount arithmetic never sees garbage tails.
std::uint32_t words_for(std::uint32_t n) { return (n + 63u) >> 6; }

}  // namespace

PauliString::PauliString(std::uint32_t n_qubits)
    : n_(n_qubits), x_(words_for(n_qubits), 0), z_(words_for(n_qubits), 0) {}

PauliString PauliString::single(std::uint32_t n_qubits, std::uint32_t site, bool x, bool z) {
  PauliString p(n_qubits);
  p.set_bits(site, x, z);
  return p;
}

void PauliString::set_bits(std::uint32_t site, bool x, bool z) {
  const std::uint64_t bit = 1ull << (site & 63);
  if (x) {
    x_[site >> 6] |= bit;
  } else {
    x_[site >> 6] &= ~bit;
  }
  if (z) {
    z_[site >> 6] |= bit;
  } else {
    z_[site >> 6] &= ~bit;
  }
}

bool PauliString::is_identity() const {
  for (std::uint32_t w = 0; w < n_words(); ++w) {
    if (x_[w] | z_[w]) return false;
  }
  return true;
}

std::uint32_t PauliString::weight() const {
  std::uint32_t total = 0;
  for (std::uint32_t w = 0; w < n_words(); ++w) {
    total += static_cast<std::uint32_t>(std::popcount(x_[w] | z_[w]));
  }
  return total;
}

void PauliString::mul(const PauliString& rhs) {
  // Per-word phase bookkeeping for sigma(x1,z1)*sigma(x2,z2) = i^g sigma(x3,z3):
  // g = x1 z1 + x2 z2 + 2 (z1 & x2) - x3 z3 (mod 4), summed over sites.
  int g = static_cast<int>(rhs.phase_exp_);
  for (std::uint32_t w = 0; w < n_words(); ++w) {
    const std::uint64_t x1 = x_[w], z1 = z_[w];
    const std::uint64_t x2 = rhs.x_[w], z2 = rhs.z_[w];
    const std::uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
    g += std::popcount(x1 & z1) + std::popcount(x2 & z2) + 2 * std::popcount(z1 & x2) -
         std::popcount(x3 & z3);
    x_[w] = x3;
    z_[w] = z3;
  }
  phase_exp_ = static_cast<std::uint8_t>((phase_exp_ + g) & 3);
}

bool PauliString::commutes_with(const PauliString& other) const {
  int parity = 0;
  for (std::uint32_t w = 0; w < n_words(); ++w) {
    parity ^= std::popcount(x_[w] & other.z_[w]) & 1;
    parity ^= std::popcount(z_[w] & other.x_[w]) & 1;
  }
  return parity == 0;
}

void PauliString::push_back_qubit() {
  ++n_;
  const std::uint32_t need = words_for(n_);
  if (need > n_words()) {
    x_.push_back(0);
    z_.push_back(0);
  }
}

void PauliString::pop_back_qubit() {
  const std::uint32_t site = n_ - 1;
  set_bits(site, false, false);
  --n_;
  const std::uint32_t need = words_for(n_);
  if (need < n_words()) {
    x_.pop_back();
    z_.pop_back();
  }
}

void PauliString::erase_qubit(std::uint32_t site) {
  for (std::uint32_t k = site; k + 1 < n_; ++k) {
    set_bits(k, x_bit(k + 1), z_bit(k + 1));
  }
  pop_back_qubit();
}

void PauliString::swap_sites(std::uint32_t a, std::uint32_t b) {
  const bool xa = x_bit(a), za = z_bit(a);
  const bool xb = x_bit(b), zb = z_bit(b);
  set_bits(a, xb, zb);
  set_bits(b, xa, za);
}

bool PauliString::operator==(const PauliString& other) const {
  return n_ == other.n_ && phase_exp_ == other.phase_exp_ && x_ == other.x_ && z_ == other.z_;
}

std::string PauliString::to_string() const {
  static const char* kPrefix[4] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_exp_];
  out.reserve(out.size() + n_);
  for (std::uint32_t k = 0; k < n_; ++k) {
    const bool x = x_bit(k), z = z_bit(k);
    out += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return out;
}

PauliString PauliString::from_string(const std::string& text) {
  std::size_t pos = 0;
  std::uint8_t phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    phase = text[pos] == '-' ? 2 : 0;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase = static_cast<std::uint8_t>((phase + 1) & 3);
    ++pos;
  }
  PauliString p(static_cast<std::uint32_t>(text.size() - pos));
  p.phase_exp_ = phase;
  for (std::uint32_t k = 0; pos < text.size(); ++pos, ++k) {
    switch (text[pos]) {
      case 'I': break;
      case 'X': p.set_bits(k, true, false); break;
      case 'Y': p.set_bits(k, true, true); break;
      case 'Z': p.set_bits(k, false, true); break;
      default: throw std::invalid_argument("bad Pauli letter in: " + text);
    }
  }
  return p;
}

}  // namespace iccr
