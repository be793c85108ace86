#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace iccr {

// N-qubit Pauli operator in symplectic form with a global phase.
//
// Conventions, used consistently everywhere:
//  * per-site letter sigma(x, z): (0,0)=I, (1,0)=X, (0,1)=Z, (1,1)=Y,
//    with sigma(x, z) = i^{xz} X^x Z^z (so sigma(1,1) is exactly Y);
//  * the whole operator is i^{phase_exp} * (tensor of letters),
//    phase_exp in {0,1,2,3};
//  * bits are packed 64 sites per word, site k in word k/64, bit k%64.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::uint32_t n_qubits);

  static PauliString identity(std::uint32_t n_qubits) { return PauliString(n_qubits); }
  // Single letter at `site`: x/z select the letter as above.
  static PauliString single(std::uint32_t n_qubits, std::uint32_t site, bool x, bool z);

  std::uint32_t n_qubits() const { return n_; }
  std::uint32_t n_words() const { return static_cast<std::uint32_t>(x_.size()); }

  std::uint8_t phase_exp() const { return phase_exp_; }
  void set_phase_exp(std::uint8_t e) { phase_exp_ = e & 3; }
  void mul_phase_exp(int e) { phase_exp_ = static_cast<std::uint8_t>((phase_exp_ + e) & 3); }
  // True when the phase is +/-1, i.e. the operator is Hermitian.
  bool is_hermitian() const { return (phase_exp_ & 1) == 0; }
  // +1 or -1; only meaningful for Hermitian strings.
  int sign() const { return phase_exp_ == 0 ? +1 : -1; }

  bool x_bit(std::uint32_t site) const { return (x_[site >> 6] >> (site & 63)) & 1; }
  bool z_bit(std::uint32_t site) const { return (z_[site >> 6] >> (site & 63)) & 1; }
  void set_bits(std::uint32_t site, bool x, bool z);

  const std::uint64_t* x_data() const { return x_.data(); }
  const std::uint64_t* z_data() const { return z_.data(); }
  std::uint64_t* x_data() { return x_.data(); }
  std::uint64_t* z_data() { return z_.data(); }

  bool is_identity() const;  // ignores phase
  std::uint32_t weight() const;

  // Calls fn(site, x, z) for every non-identity site, ascending.
  template <typename Fn>
  void for_each_site(Fn&& fn) const {
    for (std::uint32_t w = 0; w < n_words(); ++w) {
      std::uint64_t occ = x_[w] | z_[w];
      while (occ) {
        const int b = __builtin_ctzll(occ);
        occ &= occ - 1;
        const std::uint32_t site = (w << 6) + static_cast<std::uint32_t>(b);
        fn(site, (x_[w] >> b) & 1, (z_[w] >> b) & 1);
      }
    }
  }

  // this <- this * rhs, accumulating the product phase.
  void mul(const PauliString& rhs);

  bool commutes_with(const PauliString& other) const;

  // Grow/shrink by one qubit at the end (new site is identity).
  void push_back_qubit();
  void pop_back_qubit();
  // Remove `site`, shifting higher sites down by one.
  void erase_qubit(std::uint32_t site);

  // Exchange the letters at two sites (phase unchanged).
  void swap_sites(std::uint32_t a, std::uint32_t b);

  bool operator==(const PauliString& other) const;

  // Text form: phase prefix ("+", "-", "+i", "-i") then one letter per site,
  // site 0 leftmost, e.g. "-iXIZY". from_string is its exact inverse.
  std::string to_string() const;
  static PauliString from_string(const std::string& text);

 private:
  std::uint32_t n_ = 0;
  std::uint8_t phase_exp_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
};

inline PauliString operator*(PauliString lhs, const PauliString& rhs) {
  lhs.mul(rhs);
  return lhs;
}

}  // namespace iccr
