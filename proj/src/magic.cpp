#include "iccr/magic.hpp"

#include <cmath>

namespace iccr {

double single_qubit_sre(const SingleQubitState& s, double order) {
  if (s.is_tagged()) return 0.0;
  const double px = s.expect_x() * s.expect_x();
  const double py = s.expect_y() * s.expect_y();
  const double pz = s.expect_z() * s.expect_z();
  if (order == 1.0) {
    // Shannon limit of the Renyi family over the distribution <P>^2 / 2.
    double acc = 0.0;
    for (double p : {px, py, pz}) {
      if (p > 0.0) acc -= 0.5 * p * std::log2(0.5 * p);
    }
    acc -= 0.5 * std::log2(0.5);  // the identity term, <I>^2 = 1
    return acc - 1.0;
  }
  const double sum =
      1.0 + std::pow(px, order) + std::pow(py, order) + std::pow(pz, order);
  return std::log2(0.5 * sum) / (1.0 - order);
}

double sre(const ProductState& st, double order) {
  double acc = 0.0;
  for (std::uint32_t k = 0; k < st.n_qubits(); ++k) {
    acc += single_qubit_sre(st.slot(k), order);
  }
  return acc;
}

std::uint32_t nullity(const ProductState& st) {
  return st.n_qubits() - st.count_tagged();
}

}  // namespace iccr
