#pragma once

#include <vector>

#include "qsc/linalg.hpp"

namespace qsc {

// Qubit registers are labeled with single characters ('A', 'B', ...). The
// first label owns the most significant bit of a basis index, so for labels
// [A,B] the basis state |01> (A=0, B=1) is index 1. |0> is the +1 eigenstate
// of pauli_z.
using QubitLabels = std::vector<char>;

QubitLabels default_labels(int qubits);

// Validated density matrix: Hermitian and unit trace within tol::structural,
// eigenvalues >= -tol::structural.
class DensityMatrix {
public:
    explicit DensityMatrix(ComplexMatrix m, QubitLabels labels = {});

    const ComplexMatrix& matrix() const { return m_; }
    int dim() const { return m_.dim(); }
    int qubits() const { return qubits_; }
    const QubitLabels& labels() const { return labels_; }

private:
    ComplexMatrix m_;
    QubitLabels labels_;
    int qubits_ = 0;
};

// exp(-beta h) / Z. Any finite beta is accepted; beta = 0 gives the
// maximally mixed state.
DensityMatrix thermal_state(double beta, const ComplexMatrix& h);

// Single-qubit Hamiltonians used by the two experiment families:
// diag(0,1) for the two-qubit system, diag(1,0) for the three-qubit one.
ComplexMatrix local_hamiltonian_2q();
ComplexMatrix local_hamiltonian_3q();

// Product of thermal qubits plus a coherence alpha placed at the
// (|01>, |10>) entry and its conjugate mirror. Throws NotPositive when
// alpha pushes an eigenvalue below -tol::structural.
DensityMatrix two_qubit_initial(double beta_a, double beta_b, cd alpha);

// Correlated A-C pair (marginals diag(lambda_a, 1-lambda_a) and
// diag(lambda_c, 1-lambda_c), spectrum {gamma, 1-gamma, 0, 0}) tensored
// with a thermal B at temperature temp_b, ordered [A,B,C].
DensityMatrix three_qubit_initial(double temp_b, double lambda_a, double lambda_c, double gamma);

// Keep is a set of labels from rho; kept labels retain their relative order.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitLabels& keep);

// Relabel by basis permutation. `from` must spell out rho's current labels
// and `to` must be a permutation of them.
DensityMatrix reorder_qubits(const DensityMatrix& rho, const QubitLabels& from, const QubitLabels& to);

} // namespace qsc
