#pragma once

#include <cstdint>

#include "iccr/clifford_tableau.hpp"
#include "iccr/iccr_step.hpp"
#include "iccr/product_state.hpp"
#include "iccr/rng.hpp"

namespace iccr {

// The resource state (|0> + e^{i pi/4} |1>)/sqrt2 consumed by one gadget.
SingleQubitState t_resource_state();

// Applies a T gate to `target` by gadget: grows the system by an ancilla
// holding the resource state, entangles it with CX(target -> ancilla),
// measures the ancilla's Z string postselected on the physical +1 branch,
// and (by default) recycles the ancilla so the tableau returns to its
// original width. The returned report is the embedded measurement step;
// its fidelity accounts for any variational loss.
IterationReport inject_t_gate(CliffordTableau& tab, ProductState& state,
                              std::uint32_t target, Rng& rng, bool recycle = true);

// Disentangles the last qubit from every tableau image and removes it.
// Preconditions established by inject_t_gate: the last slot ended up in
// |0> after the measurement step replaced slot `star_site` (they are
// swapped here when they differ), the Z image of the last qubit factors
// into Z there times letters on slots it holds as eigenstates, and the
// X image can be localized by controlled-Pauli corrections that act as
// identity on the |0> ancilla. Throws std::logic_error when the tableau
// does not have this shape.
void recycle_ancilla(CliffordTableau& tab, ProductState& state, std::uint32_t star_site);

}  // namespace iccr
