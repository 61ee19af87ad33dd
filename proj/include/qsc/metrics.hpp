#pragma once

#include <vector>

#include "qsc/state.hpp"

namespace qsc {

// Eigenvalue multiset of a density matrix: descending, each value in
// [0,1] after clamping, summing to 1 within tol::derived.
class Spectrum {
public:
    explicit Spectrum(std::vector<double> values);

    static Spectrum of(const DensityMatrix& rho);

    const std::vector<double>& values() const { return values_; }
    int dim() const { return static_cast<int>(values_.size()); }

private:
    std::vector<double> values_;
};

struct ComplexityResult {
    double complexity = 0.0;
    std::vector<double> argmin_permutation; // diagonal achieving the minimum
    std::vector<double> distances;          // one per candidate, enumeration order
};

// Tr sqrt(sqrt(rho2) rho1 sqrt(rho2)), in [0, 1] up to roundoff.
double fidelity_root(const DensityMatrix& rho1, const DensityMatrix& rho2);

// sqrt(2 - 2 * fidelity_root), radicand clamped at 0. Bitwise-identical
// inputs short-circuit to exactly 0.
double bures_distance(const DensityMatrix& rho1, const DensityMatrix& rho2);

// Every distinct diagonal arrangement of the spectrum, in lexicographic
// order starting from the ascending one. Refuses dim > 8 (factorial guard).
std::vector<DensityMatrix> zero_complexity_set(const Spectrum& spectrum);

// Minimal Bures distance from rho to the diagonal states carrying rho's
// own spectrum. Ties resolve to the earliest candidate in enumeration
// order.
ComplexityResult state_complexity(const DensityMatrix& rho);

// Wootters concurrence of a 2-qubit state, clamped to [0,1].
double concurrence(const DensityMatrix& rho);

// Binary entropy of 1/2 + sqrt(1 - c^2)/2, in bits; 0 at c=0, 1 at c=1.
double entanglement_of_formation(double c);

// Real part of trace(h rho); complains if the trace picks up an imaginary
// part, which signals a corrupted state or Hamiltonian.
double internal_energy(const DensityMatrix& rho, const ComplexMatrix& h);

// First differences of a time-ordered energy series; positive means the
// subsystem absorbed heat over that step.
std::vector<double> heat_flow(const std::vector<double>& energies);

} // namespace qsc
