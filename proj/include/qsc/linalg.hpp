#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "qsc/errors.hpp"
#include "qsc/tolerances.hpp"

namespace qsc {

using cd = std::complex<double>;

// ---- dense complex matrix ----

// Square, row-major. Small dimensions only (the library never needs more
// than 8x8), so storage is a flat vector and all checks stay on.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(int dim);

    static ComplexMatrix identity(int dim);

    int dim() const { return dim_; }

    // Checked access; throws std::out_of_range outside [0, dim).
    cd& operator()(int r, int c);
    const cd& operator()(int r, int c) const;

    ComplexMatrix adjoint() const;
    ComplexMatrix conjugate() const;
    cd trace() const;
    double frobenius_norm() const;

    // Largest |entry| of the difference; both operands must share dim.
    double max_abs_diff(const ComplexMatrix& other) const;

    // Bitwise entry equality (used for exact fast paths, not for tests).
    bool same_entries(const ComplexMatrix& other) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(cd scale);

    friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
    friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
    friend ComplexMatrix operator*(cd s, ComplexMatrix a) { return a *= s; }
    friend ComplexMatrix operator*(ComplexMatrix a, cd s) { return a *= s; }
    friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

private:
    void check_index(int r, int c) const;

    int dim_ = 0;
    std::vector<cd> a_;
};

// ---- pauli / identity helpers ----

ComplexMatrix pauli_x();
ComplexMatrix pauli_y();
ComplexMatrix pauli_z();

// ---- eigendecomposition ----

struct EigenDecomposition {
    std::vector<double> eigenvalues; // ascending; near-ties keep solver order
    ComplexMatrix eigenvectors;      // unitary, column k pairs with eigenvalues[k]
};

// max |h(i,j) - conj(h(j,i))| over all entries
double hermiticity_defect(const ComplexMatrix& m);

ComplexMatrix kronecker_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Cyclic complex Jacobi. Input must be Hermitian within tol::structural.
// Converges when the off-diagonal Frobenius mass drops below
// tol::accumulation; throws NoConvergence after 100 sweeps.
EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& h);

// V diag(f(lambda)) V^dagger for Hermitian input.
ComplexMatrix spectral_function(const ComplexMatrix& h, const std::function<cd(double)>& f);

// Positive-semidefinite square root. Eigenvalues in [-tol::structural, 0)
// are clamped to zero; anything lower throws NotPositive.
ComplexMatrix psd_sqrt(const ComplexMatrix& h);

// U A U^dagger; dims must match.
ComplexMatrix unitary_conjugate(const ComplexMatrix& u, const ComplexMatrix& a);

} // namespace qsc
