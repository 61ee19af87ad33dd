#include "qsc/state.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace qsc {

namespace {

int qubit_count(int dim) {
    int q = 0;
    int d = dim;
    while (d > 1 && d % 2 == 0) {
        d /= 2;
        ++q;
    }
    if (d != 1 || q == 0)
        throw DomainError("density matrix dim must be a power of two >= 2, got " + std::to_string(dim));
    return q;
}

} // namespace

QubitLabels default_labels(int qubits) {
    QubitLabels out;
    for (int i = 0; i < qubits; ++i) out.push_back(static_cast<char>('A' + i));
    return out;
}

DensityMatrix::DensityMatrix(ComplexMatrix m, QubitLabels labels) : m_(std::move(m)) {
    qubits_ = qubit_count(m_.dim());
    labels_ = labels.empty() ? default_labels(qubits_) : std::move(labels);
    if (static_cast<int>(labels_.size()) != qubits_)
        throw LabelMismatch("density matrix: " + std::to_string(labels_.size()) + " labels for " +
                            std::to_string(qubits_) + " qubits");
    if (std::set<char>(labels_.begin(), labels_.end()).size() != labels_.size())
        throw LabelMismatch("density matrix: duplicate qubit label");

    const double defect = hermiticity_defect(m_);
    if (defect > tol::structural)
        throw NotHermitian("density matrix: hermiticity defect " + std::to_string(defect));

    const cd tr = m_.trace();
    if (std::abs(tr - cd{1.0, 0.0}) > tol::structural)
        throw DomainError("density matrix: trace " + std::to_string(std::real(tr)) + " is not 1");

    const EigenDecomposition eig = hermitian_eigendecomposition(m_);
    if (eig.eigenvalues.front() < -tol::structural)
        throw NotPositive("density matrix: eigenvalue " + std::to_string(eig.eigenvalues.front()));
}

DensityMatrix thermal_state(double beta, const ComplexMatrix& h) {
    if (!std::isfinite(beta)) throw DomainError("thermal_state: beta must be finite");
    ComplexMatrix boltzmann = spectral_function(h, [beta](double lambda) -> cd {
        return std::exp(-beta * lambda);
    });
    const double z = std::real(boltzmann.trace());
    boltzmann *= cd{1.0 / z, 0.0};
    return DensityMatrix(std::move(boltzmann));
}

ComplexMatrix local_hamiltonian_2q() {
    ComplexMatrix h(2); // (1 - pauli_z) / 2
    h(1, 1) = 1.0;
    return h;
}

ComplexMatrix local_hamiltonian_3q() {
    ComplexMatrix h(2); // (1 + pauli_z) / 2
    h(0, 0) = 1.0;
    return h;
}

DensityMatrix two_qubit_initial(double beta_a, double beta_b, cd alpha) {
    const ComplexMatrix h = local_hamiltonian_2q();
    const DensityMatrix rho_a = thermal_state(beta_a, h);
    const DensityMatrix rho_b = thermal_state(beta_b, h);
    ComplexMatrix m = kronecker_product(rho_a.matrix(), rho_b.matrix());
    m(1, 2) += alpha;
    m(2, 1) += std::conj(alpha);
    return DensityMatrix(std::move(m), {'A', 'B'});
}

DensityMatrix three_qubit_initial(double temp_b, double lambda_a, double lambda_c, double gamma) {
    if (!(temp_b > 0.0) || !std::isfinite(temp_b))
        throw DomainError("three_qubit_initial: temp_b must be positive");
    if (lambda_a < 0.0 || lambda_c < 0.0 || gamma < 0.0)
        throw DomainError("three_qubit_initial: lambda_a, lambda_c, gamma must be nonnegative");
    if (gamma < std::abs(lambda_c - lambda_a))
        throw DomainError("three_qubit_initial: gamma < |lambda_c - lambda_a|");
    if (lambda_a + lambda_c < gamma)
        throw DomainError("three_qubit_initial: lambda_a + lambda_c < gamma");
    if (lambda_a + lambda_c + gamma > 2.0)
        throw DomainError("three_qubit_initial: lambda_a + lambda_c + gamma > 2");

    // A-C pair in the [A,C] basis. The two 2x2 blocks ({|01>,|10>} and
    // {|00>,|11>}) are rank one by construction, so the spectrum is
    // {gamma, 1-gamma, 0, 0}.
    ComplexMatrix ac(4);
    const double inner = gamma * gamma - (lambda_c - lambda_a) * (lambda_c - lambda_a);
    const double outer = (lambda_a + lambda_c - gamma) * (2.0 - lambda_a - lambda_c - gamma);
    ac(2, 2) = 0.5 * (gamma + lambda_c - lambda_a);
    ac(1, 1) = 0.5 * (gamma - lambda_c + lambda_a);
    ac(2, 1) = 0.5 * std::sqrt(inner);
    ac(1, 2) = ac(2, 1);
    ac(0, 0) = 0.5 * (lambda_a + lambda_c - gamma);
    ac(3, 3) = 0.5 * (2.0 - lambda_a - lambda_c - gamma);
    ac(0, 3) = 0.5 * std::sqrt(outer);
    ac(3, 0) = ac(0, 3);

    const DensityMatrix rho_b = thermal_state(1.0 / temp_b, local_hamiltonian_3q());
    DensityMatrix acb(kronecker_product(ac, rho_b.matrix()), {'A', 'C', 'B'});
    return reorder_qubits(acb, {'A', 'C', 'B'}, {'A', 'B', 'C'});
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitLabels& keep) {
    if (keep.empty()) throw DomainError("partial_trace: keep set is empty");
    if (std::set<char>(keep.begin(), keep.end()).size() != keep.size())
        throw DomainError("partial_trace: duplicate label in keep set");

    const QubitLabels& labels = rho.labels();
    for (char k : keep)
        if (std::find(labels.begin(), labels.end(), k) == labels.end())
            throw UnknownLabel(std::string("partial_trace: label '") + k + "' not in state");

    const int n = rho.qubits();
    std::vector<int> keep_pos;  // positions in label order, preserving it
    std::vector<int> trace_pos;
    QubitLabels out_labels;
    for (int p = 0; p < n; ++p) {
        if (std::find(keep.begin(), keep.end(), labels[p]) != keep.end()) {
            keep_pos.push_back(p);
            out_labels.push_back(labels[p]);
        } else {
            trace_pos.push_back(p);
        }
    }

    const int kq = static_cast<int>(keep_pos.size());
    const int mq = n - kq;
    const int kd = 1 << kq;
    const int md = 1 << mq;
    const ComplexMatrix& in = rho.matrix();
    ComplexMatrix out(kd);
    for (int r = 0; r < kd; ++r) {
        for (int c = 0; c < kd; ++c) {
            cd sum{0.0, 0.0};
            for (int t = 0; t < md; ++t) {
                int fr = 0;
                int fc = 0;
                for (int b = 0; b < kq; ++b) {
                    const int bit = n - 1 - keep_pos[b];
                    fr |= ((r >> (kq - 1 - b)) & 1) << bit;
                    fc |= ((c >> (kq - 1 - b)) & 1) << bit;
                }
                for (int b = 0; b < mq; ++b) {
                    const int bit = n - 1 - trace_pos[b];
                    const int tb = (t >> (mq - 1 - b)) & 1;
                    fr |= tb << bit;
                    fc |= tb << bit;
                }
                sum += in(fr, fc);
            }
            out(r, c) = sum;
        }
    }
    return DensityMatrix(std::move(out), std::move(out_labels));
}

DensityMatrix reorder_qubits(const DensityMatrix& rho, const QubitLabels& from, const QubitLabels& to) {
    if (from != rho.labels())
        throw LabelMismatch("reorder_qubits: from does not match the state's labels");
    if (to.size() != from.size())
        throw LabelMismatch("reorder_qubits: label count differs");
    const int n = rho.qubits();
    std::vector<int> new_pos(n); // old label position -> new position
    for (int p = 0; p < n; ++p) {
        const auto it = std::find(to.begin(), to.end(), from[p]);
        if (it == to.end())
            throw LabelMismatch(std::string("reorder_qubits: target set lacks label '") + from[p] + "'");
        new_pos[p] = static_cast<int>(it - to.begin());
    }

    const int d = rho.dim();
    std::vector<int> map(d, 0); // old basis index -> new basis index
    for (int i = 0; i < d; ++i) {
        int j = 0;
        for (int p = 0; p < n; ++p) {
            const int bit = (i >> (n - 1 - p)) & 1;
            j |= bit << (n - 1 - new_pos[p]);
        }
        map[i] = j;
    }

    const ComplexMatrix& in = rho.matrix();
    ComplexMatrix out(d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            out(map[r], map[c]) = in(r, c);
    return DensityMatrix(std::move(out), to);
}

} // namespace qsc
