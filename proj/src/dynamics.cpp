#include "qsc/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qsc {

namespace {

// (sx sy - sy sx) / 2, the exchange generator both experiment families share.
ComplexMatrix pair_exchange() {
    const ComplexMatrix sx = pauli_x();
    const ComplexMatrix sy = pauli_y();
    ComplexMatrix h = kronecker_product(sx, sy);
    h -= kronecker_product(sy, sx);
    h *= cd{0.5, 0.0};
    return h;
}

} // namespace

ComplexMatrix effective_hamiltonian_2q() {
    ComplexMatrix h = pair_exchange();
    h *= cd{std::numbers::pi, 0.0};
    return h;
}

ComplexMatrix interaction_hamiltonian_3q(double t, double s) {
    const ComplexMatrix pair = pair_exchange();
    const ComplexMatrix one = ComplexMatrix::identity(2);
    ComplexMatrix h = kronecker_product(pair, one);
    h *= cd{t, 0.0};
    ComplexMatrix h_bc = kronecker_product(one, pair);
    h_bc *= cd{s, 0.0};
    h += h_bc;
    return h;
}

ComplexMatrix propagator(const PropagatorSpec& spec) {
    const double defect = hermiticity_defect(spec.hamiltonian);
    if (defect > tol::structural)
        throw NotHermitian("propagator: hamiltonian defect " + std::to_string(defect));
    if (!std::isfinite(spec.duration))
        throw DomainError("propagator: duration must be finite");
    if (spec.duration == 0.0) return ComplexMatrix::identity(spec.hamiltonian.dim());

    const double tau = spec.duration;
    return spectral_function(spec.hamiltonian, [tau](double lambda) -> cd {
        return std::exp(cd{0.0, -tau * lambda});
    });
}

DensityMatrix evolve(const DensityMatrix& rho, const ComplexMatrix& u) {
    if (u.dim() != rho.dim())
        throw DimensionMismatch("evolve: propagator dim " + std::to_string(u.dim()) +
                                " vs state dim " + std::to_string(rho.dim()));
    ComplexMatrix gram = u.adjoint() * u;
    gram -= ComplexMatrix::identity(u.dim());
    const double defect = gram.frobenius_norm();
    if (defect > tol::derived)
        throw NotUnitary("evolve: |u^dagger u - 1| = " + std::to_string(defect));
    return DensityMatrix(unitary_conjugate(u, rho.matrix()), rho.labels());
}

} // namespace qsc
