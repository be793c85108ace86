#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "iccr/clifford_tableau.hpp"
#include "iccr/product_state.hpp"
#include "iccr/rng.hpp"

namespace iccr {

// How the measurement outcome is chosen: sampled from the Born rule, or
// forced to the physical +1 branch (throws ZeroProbabilityError when that
// branch has vanishing probability).
enum class OutcomePolicy : std::uint8_t { BornSample, PostselectPlus };

// Which shape one renormalization step took:
//  * TrivialDrop        - every support site sat in an eigenstate of its
//                         letter, the outcome is deterministic, nothing moves;
//  * StabilizerTarget   - the replaced slot already matched a local target
//                         state exactly, the update is lossless;
//  * VariationalTarget  - the replacement product was fitted numerically.
enum class StepBranch : std::uint8_t { TrivialDrop, StabilizerTarget, VariationalTarget };

const char* to_string(StepBranch b);

// Summary of one measurement step.
struct IterationReport {
  StepBranch branch = StepBranch::TrivialDrop;
  int outcome = +1;                // physical +-1 result for the measured string
  std::uint32_t support_size = 0;  // sites left after eigenstate absorption
  int target_site = -1;            // replaced site, -1 when nothing was replaced
  int target_q = -1;               // local phase index of the replacement frame
  double fidelity = 1.0;           // squared overlap kept by this step
  int rank_delta = 0;              // +1 when a non-stabilizer slot was replaced
  std::uint32_t sweeps = 0;        // coordinate-ascent sweeps spent
  bool converged = true;           // false when the sweep cap was hit
};

// Result of fitting the post-measurement product ansatz.
struct SupportOptimization {
  std::vector<SingleQubitState> betas;  // one per support entry; the starred
                                        // entry is the local target state and
                                        // is not used by the caller
  std::complex<double> overlap{0.0, 0.0};  // W = <ansatz|unnormalized projected state>
  std::uint32_t sweeps = 0;
  bool converged = true;
};

// Fits product states beta_i maximizing |W| for the projected state
// (1 + s Z...Z)/2 acting on the product of alphas. `alphas` holds the
// support slots after every letter has been rotated down to Z, in ascending
// site order; `star_index` points at the slot that will be replaced by the
// local target state with phase index `q_star`. Coordinate ascent visits the
// free slots in ascending order; |W| is non-decreasing across updates and
// iteration stops once a full sweep improves it by less than 1e-12, or at
// 200 sweeps (converged=false, best iterate returned).
SupportOptimization optimize_support(const std::vector<SingleQubitState>& alphas,
                                     std::size_t star_index, int q_star, int s);

// One renormalized measurement of the Z-type string attached to site j:
// reads P = tab.z_image(j), absorbs eigenstate sites into the outcome sign,
// rotates surviving letters to Z, draws (or postselects) the outcome,
// replaces the best-matching slot by its local target state, and pushes the
// compensating Clifford onto the front of the tableau so that the tableau
// followed by the product state keeps representing the physical state.
// Throws ZeroProbabilityError for impossible postselection.
IterationReport iccr_step(CliffordTableau& tab, ProductState& state, std::uint32_t j,
                          OutcomePolicy policy, Rng& rng);

}  // namespace iccr
