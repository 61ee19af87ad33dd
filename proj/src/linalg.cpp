#include "qsc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qsc {

// ---- ComplexMatrix ----

ComplexMatrix::ComplexMatrix(int dim) {
    if (dim < 1) throw DomainError("matrix dimension must be positive, got " + std::to_string(dim));
    dim_ = dim;
    a_.assign(static_cast<size_t>(dim) * dim, cd{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.a_[static_cast<size_t>(i) * dim + i] = 1.0;
    return m;
}

void ComplexMatrix::check_index(int r, int c) const {
    if (r < 0 || r >= dim_ || c < 0 || c >= dim_)
        throw std::out_of_range("matrix index (" + std::to_string(r) + "," + std::to_string(c) +
                                ") outside dim " + std::to_string(dim_));
}

cd& ComplexMatrix::operator()(int r, int c) {
    check_index(r, c);
    return a_[static_cast<size_t>(r) * dim_ + c];
}

const cd& ComplexMatrix::operator()(int r, int c) const {
    check_index(r, c);
    return a_[static_cast<size_t>(r) * dim_ + c];
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (int r = 0; r < dim_; ++r)
        for (int c = 0; c < dim_; ++c)
            out.a_[static_cast<size_t>(c) * dim_ + r] = std::conj(a_[static_cast<size_t>(r) * dim_ + c]);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out(dim_);
    for (size_t i = 0; i < a_.size(); ++i) out.a_[i] = std::conj(a_[i]);
    return out;
}

cd ComplexMatrix::trace() const {
    cd t{0.0, 0.0};
    for (int i = 0; i < dim_; ++i) t += a_[static_cast<size_t>(i) * dim_ + i];
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const cd& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
    if (dim_ != other.dim_) throw DimensionMismatch("max_abs_diff: dims differ");
    double m = 0.0;
    for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - other.a_[i]));
    return m;
}

bool ComplexMatrix::same_entries(const ComplexMatrix& other) const {
    return dim_ == other.dim_ && a_ == other.a_;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw DimensionMismatch("matrix add: dims differ");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (dim_ != other.dim_) throw DimensionMismatch("matrix subtract: dims differ");
    for (size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cd scale) {
    for (cd& v : a_) v *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.dim_ != b.dim_) throw DimensionMismatch("matrix multiply: dims differ");
    const int n = a.dim_;
    ComplexMatrix out(n);
    for (int r = 0; r < n; ++r) {
        for (int k = 0; k < n; ++k) {
            const cd ark = a.a_[static_cast<size_t>(r) * n + k];
            if (ark == cd{0.0, 0.0}) continue;
            for (int c = 0; c < n; ++c)
                out.a_[static_cast<size_t>(r) * n + c] += ark * b.a_[static_cast<size_t>(k) * n + c];
        }
    }
    return out;
}

// ---- pauli helpers ----

ComplexMatrix pauli_x() {
    ComplexMatrix m(2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    return m;
}

ComplexMatrix pauli_y() {
    ComplexMatrix m(2);
    m(0, 1) = cd{0.0, -1.0};
    m(1, 0) = cd{0.0, 1.0};
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2);
    m(0, 0) = 1.0;
    m(1, 1) = -1.0;
    return m;
}

// ---- free functions ----

double hermiticity_defect(const ComplexMatrix& m) {
    double d = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = r; c < m.dim(); ++c)
            d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
    return d;
}

ComplexMatrix kronecker_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const int ad = a.dim();
    const int bd = b.dim();
    ComplexMatrix out(ad * bd);
    for (int i = 0; i < ad; ++i)
        for (int j = 0; j < ad; ++j) {
            const cd aij = a(i, j);
            if (aij == cd{0.0, 0.0}) continue;
            for (int k = 0; k < bd; ++k)
                for (int l = 0; l < bd; ++l)
                    out(i * bd + k, j * bd + l) = aij * b(k, l);
        }
    return out;
}

namespace {

double offdiag_mass(const ComplexMatrix& m) {
    double s = 0.0;
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c)
            if (r != c) s += std::norm(m(r, c));
    return std::sqrt(s);
}

} // namespace

EigenDecomposition hermitian_eigendecomposition(const ComplexMatrix& h) {
    const double defect = hermiticity_defect(h);
    if (defect > tol::structural)
        throw NotHermitian("hermitian_eigendecomposition: defect " + std::to_string(defect));

    const int n = h.dim();

    // Work on an exactly Hermitian copy so rotations see symmetric data.
    ComplexMatrix a(n);
    for (int r = 0; r < n; ++r) {
        a(r, r) = std::real(h(r, r));
        for (int c = r + 1; c < n; ++c) {
            const cd mean = 0.5 * (h(r, c) + std::conj(h(c, r)));
            a(r, c) = mean;
            a(c, r) = std::conj(mean);
        }
    }

    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr int max_sweeps = 100;
    bool converged = false;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_mass(a) < tol::accumulation) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cd apq = a(p, q);
                const double b = std::abs(apq);
                if (b == 0.0) continue;

                const double alpha = std::real(a(p, p));
                const double gamma = std::real(a(q, q));
                const double tau = (gamma - alpha) / (2.0 * b);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cd s = (t * c) * (apq / b);

                // rows: a <- G^dagger a
                for (int j = 0; j < n; ++j) {
                    const cd apj = a(p, j);
                    const cd aqj = a(q, j);
                    a(p, j) = c * apj - s * aqj;
                    a(q, j) = std::conj(s) * apj + c * aqj;
                }
                // columns: a <- a G, and accumulate v <- v G
                for (int i = 0; i < n; ++i) {
                    const cd aip = a(i, p);
                    const cd aiq = a(i, q);
                    a(i, p) = c * aip - std::conj(s) * aiq;
                    a(i, q) = s * aip + c * aiq;
                    const cd vip = v(i, p);
                    const cd viq = v(i, q);
                    v(i, p) = c * vip - std::conj(s) * viq;
                    v(i, q) = s * vip + c * viq;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
            }
        }
    }
    if (!converged && offdiag_mass(a) >= tol::accumulation)
        throw NoConvergence("jacobi eigensolver: 100 sweeps exhausted");

    std::vector<double> vals(n);
    for (int i = 0; i < n; ++i) vals[i] = std::real(a(i, i));

    // Ascending insertion sort; values within tol::accumulation of each other
    // keep the order the sweep produced, which keeps output deterministic.
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    for (int i = 1; i < n; ++i) {
        int j = i;
        while (j > 0 && vals[order[j - 1]] > vals[order[j]] + tol::accumulation) {
            std::swap(order[j - 1], order[j]);
            --j;
        }
    }

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n);
    for (int k = 0; k < n; ++k) {
        out.eigenvalues[k] = vals[order[k]];
        for (int i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix spectral_function(const ComplexMatrix& h, const std::function<cd(double)>& f) {
    const EigenDecomposition eig = hermitian_eigendecomposition(h);
    const int n = h.dim();
    ComplexMatrix scaled = eig.eigenvectors; // columns scaled by f(lambda)
    for (int k = 0; k < n; ++k) {
        const cd fk = f(eig.eigenvalues[k]);
        for (int i = 0; i < n; ++i) scaled(i, k) *= fk;
    }
    return scaled * eig.eigenvectors.adjoint();
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    const EigenDecomposition eig = hermitian_eigendecomposition(h);
    const int n = h.dim();
    ComplexMatrix scaled = eig.eigenvectors;
    for (int k = 0; k < n; ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda < -tol::structural)
            throw NotPositive("psd_sqrt: eigenvalue " + std::to_string(lambda));
        const double root = std::sqrt(std::max(lambda, 0.0));
        for (int i = 0; i < n; ++i) scaled(i, k) *= root;
    }
    return scaled * eig.eigenvectors.adjoint();
}

ComplexMatrix unitary_conjugate(const ComplexMatrix& u, const ComplexMatrix& a) {
    if (u.dim() != a.dim()) throw DimensionMismatch("unitary_conjugate: dims differ");
    return u * a * u.adjoint();
}

} // namespace qsc
