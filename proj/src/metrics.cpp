#include "qsc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

namespace qsc {

// ---- spectrum ----

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw DomainError("spectrum: no values");
    double sum = 0.0;
    for (double v : values_) {
        if (!(v >= -tol::structural && v <= 1.0 + tol::structural))
            throw DomainError("spectrum: value " + std::to_string(v) + " outside [0,1]");
        sum += v;
    }
    if (std::abs(sum - 1.0) > tol::derived)
        throw DomainError("spectrum: values sum to " + std::to_string(sum));
    std::sort(values_.begin(), values_.end(), std::greater<double>());
    for (double& v : values_) v = std::clamp(v, 0.0, 1.0);
}

Spectrum Spectrum::of(const DensityMatrix& rho) {
    return Spectrum(hermitian_eigendecomposition(rho.matrix()).eigenvalues);
}

// ---- fidelity and distance ----

double fidelity_root(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim() != rho2.dim()) throw DimensionMismatch("fidelity_root: dims differ");
    const ComplexMatrix root2 = psd_sqrt(rho2.matrix());
    const EigenDecomposition eig = hermitian_eigendecomposition(root2 * rho1.matrix() * root2);
    double sum = 0.0;
    for (double lambda : eig.eigenvalues) sum += std::sqrt(std::max(lambda, 0.0));
    return sum;
}

double bures_distance(const DensityMatrix& rho1, const DensityMatrix& rho2) {
    if (rho1.dim() != rho2.dim()) throw DimensionMismatch("bures_distance: dims differ");
    // Exact-zero fast path; roundoff in the fidelity route would blur a
    // true zero into ~1e-8 after the square root.
    if (rho1.matrix().same_entries(rho2.matrix())) return 0.0;
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * fidelity_root(rho1, rho2)));
}

// ---- complexity ----

std::vector<DensityMatrix> zero_complexity_set(const Spectrum& spectrum) {
    if (spectrum.dim() > 8)
        throw UnsupportedDim("zero_complexity_set: dim " + std::to_string(spectrum.dim()) +
                             " would need " + std::to_string(spectrum.dim()) + "! permutations");
    std::vector<double> perm = spectrum.values();
    std::sort(perm.begin(), perm.end());
    std::vector<DensityMatrix> out;
    do {
        ComplexMatrix m(spectrum.dim());
        for (int i = 0; i < spectrum.dim(); ++i) m(i, i) = perm[i];
        out.emplace_back(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

ComplexityResult state_complexity(const DensityMatrix& rho) {
    const std::vector<DensityMatrix> candidates = zero_complexity_set(Spectrum::of(rho));
    ComplexityResult out;
    out.complexity = std::numeric_limits<double>::infinity();
    out.distances.reserve(candidates.size());
    for (const DensityMatrix& zc : candidates) {
        const double d = bures_distance(rho, zc);
        out.distances.push_back(d);
        if (d < out.complexity) {
            out.complexity = d;
            out.argmin_permutation.resize(zc.dim());
            for (int i = 0; i < zc.dim(); ++i)
                out.argmin_permutation[i] = std::real(zc.matrix()(i, i));
        }
    }
    return out;
}

// ---- entanglement ----

namespace {

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

} // namespace

double concurrence(const DensityMatrix& rho) {
    if (rho.qubits() != 2)
        throw WrongArity("concurrence: needs 2 qubits, got " + std::to_string(rho.qubits()));
    const ComplexMatrix yy = kronecker_product(pauli_y(), pauli_y());
    const ComplexMatrix spun = yy * rho.matrix().conjugate() * yy;
    const ComplexMatrix root = psd_sqrt(rho.matrix());
    // Hermitian stand-in for rho * spun: same spectrum, stable eigensolve.
    const EigenDecomposition eig = hermitian_eigendecomposition(root * spun * root);
    double c = 0.0;
    for (int k = 0; k < 4; ++k) {
        const double lambda = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
        c += (k == 3) ? lambda : -lambda;
    }
    return std::clamp(c, 0.0, 1.0);
}

double entanglement_of_formation(double c) {
    if (!(c >= 0.0 && c <= 1.0))
        throw DomainError("entanglement_of_formation: concurrence " + std::to_string(c) +
                          " outside [0,1]");
    return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - c * c));
}

// ---- energy bookkeeping ----

double internal_energy(const DensityMatrix& rho, const ComplexMatrix& h) {
    if (h.dim() != rho.dim()) throw DimensionMismatch("internal_energy: dims differ");
    if (hermiticity_defect(h) > tol::structural)
        throw NotHermitian("internal_energy: hamiltonian is not hermitian");
    const cd e = (h * rho.matrix()).trace();
    if (std::abs(std::imag(e)) > tol::structural)
        throw NonRealEnergy("internal_energy: imaginary part " + std::to_string(std::imag(e)));
    return std::real(e);
}

std::vector<double> heat_flow(const std::vector<double>& energies) {
    if (energies.size() < 2) throw TooFewSamples("heat_flow: need at least 2 samples");
    std::vector<double> out(energies.size() - 1);
    for (size_t k = 0; k + 1 < energies.size(); ++k) out[k] = energies[k + 1] - energies[k];
    return out;
}

} // namespace qsc
