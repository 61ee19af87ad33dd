#pragma once

#include "qsc/state.hpp"

namespace qsc {

// A Hermitian generator plus how long to run it; the resulting propagator
// is exp(-i * duration * hamiltonian).
struct PropagatorSpec {
    ComplexMatrix hamiltonian;
    double duration = 0.0;
};

// (pi/2)(sx sy - sy sx) on two qubits. Swaps population between |01> and
// |10| while commuting with the local number operators, so energy moves
// between the qubits without a work term.
ComplexMatrix effective_hamiltonian_2q();

// t * H_AB + s * H_BC on [A,B,C], each pair coupled by (sx sy - sy sx)/2.
ComplexMatrix interaction_hamiltonian_3q(double t, double s);

// exp(-i * duration * H) through the eigendecomposition of H.
// duration = 0 returns the exact identity.
ComplexMatrix propagator(const PropagatorSpec& spec);

// u rho u^dagger, revalidated as a density matrix. u must be unitary
// within tol::derived.
DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u);

} // namespace qsc
