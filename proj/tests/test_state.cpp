#include "doctest.h"

#include <cmath>

#include "qsc/state.hpp"
#include "support.hpp"

using namespace qsc;

namespace {

DensityMatrix bell_state() {
    ComplexMatrix m(4);
    m(0, 0) = m(0, 3) = m(3, 0) = m(3, 3) = cd{0.5, 0.0};
    return DensityMatrix(m);
}

} // namespace

TEST_SUITE("state") {

TEST_CASE("default labels run from A") {
    CHECK(default_labels(1) == QubitLabels{'A'});
    CHECK(default_labels(3) == QubitLabels{'A', 'B', 'C'});
}

TEST_CASE("construction validates the matrix") {
    ComplexMatrix skew(2);
    skew(0, 0) = cd{0.5, 0.0};
    skew(1, 1) = cd{0.5, 0.0};
    skew(0, 1) = cd{0.1, 0.0};
    skew(1, 0) = cd{0.3, 0.0};
    CHECK_THROWS_AS(DensityMatrix{skew}, NotHermitian);

    ComplexMatrix heavy = ComplexMatrix::identity(2);
    CHECK_THROWS_AS(DensityMatrix{heavy}, DomainError); // trace 2

    ComplexMatrix tilted(2);
    tilted(0, 0) = cd{1.5, 0.0};
    tilted(1, 1) = cd{-0.5, 0.0};
    CHECK_THROWS_AS(DensityMatrix{tilted}, NotPositive);

    ComplexMatrix odd(3);
    odd(0, 0) = cd{1.0, 0.0};
    CHECK_THROWS_AS(DensityMatrix{odd}, DomainError); // dim 3 is not a qubit register
}

TEST_CASE("labels must be one per qubit and distinct") {
    const ComplexMatrix half = ComplexMatrix::identity(4) * cd{0.25, 0.0};
    CHECK_THROWS_AS(DensityMatrix(half, {'A'}), LabelMismatch);
    CHECK_THROWS_AS(DensityMatrix(half, {'A', 'A'}), LabelMismatch);
    const DensityMatrix ok(half, {'X', 'Y'});
    CHECK(ok.qubits() == 2);
    CHECK(ok.labels() == QubitLabels{'X', 'Y'});
}

TEST_CASE("thermal state of a single qubit") {
    const DensityMatrix rho = thermal_state(1.0, local_hamiltonian_2q());
    const double z = 1.0 + std::exp(-1.0);
    CHECK(std::real(rho.matrix()(0, 0)) == doctest::Approx(1.0 / z).epsilon(1e-12));
    CHECK(std::real(rho.matrix()(1, 1)) == doctest::Approx(std::exp(-1.0) / z).epsilon(1e-12));
    CHECK(std::real(rho.matrix()(0, 0)) == doctest::Approx(0.73106).epsilon(1e-4));

    const DensityMatrix flat = thermal_state(0.0, local_hamiltonian_2q());
    CHECK(flat.matrix().max_abs_diff(ComplexMatrix::identity(2) * cd{0.5, 0.0}) <
          tol::accumulation);

    CHECK_THROWS_AS(thermal_state(std::numeric_limits<double>::infinity(), local_hamiltonian_2q()),
                    DomainError);
}

TEST_CASE("two qubit initial state is thermal product plus coherence") {
    const double beta_a = 1.0;
    const double beta_b = 2.0;
    const cd alpha{0.05, 0.02};
    const DensityMatrix rho = two_qubit_initial(beta_a, beta_b, alpha);
    CHECK(rho.labels() == QubitLabels{'A', 'B'});

    const double pa1 = std::exp(-beta_a) / (1.0 + std::exp(-beta_a));
    const double pb1 = std::exp(-beta_b) / (1.0 + std::exp(-beta_b));
    const ComplexMatrix& m = rho.matrix();
    CHECK(std::real(m(0, 0)) == doctest::Approx((1 - pa1) * (1 - pb1)).epsilon(1e-12));
    CHECK(std::real(m(1, 1)) == doctest::Approx((1 - pa1) * pb1).epsilon(1e-12));
    CHECK(std::real(m(2, 2)) == doctest::Approx(pa1 * (1 - pb1)).epsilon(1e-12));
    CHECK(std::real(m(3, 3)) == doctest::Approx(pa1 * pb1).epsilon(1e-12));
    CHECK(m(1, 2) == alpha);
    CHECK(m(2, 1) == std::conj(alpha));
    CHECK(std::abs(m(0, 3)) == 0.0);
}

TEST_CASE("two qubit initial state rejects an overpowering coherence") {
    CHECK_THROWS_AS(two_qubit_initial(1.0, 2.0, cd{0.5, 0.0}), NotPositive);
}

TEST_CASE("three qubit initial state marginals and pair spectrum") {
    const DensityMatrix rho = three_qubit_initial(2.0, 0.15, 0.3, 0.4);
    CHECK(rho.labels() == QubitLabels{'A', 'B', 'C'});

    const DensityMatrix a = partial_trace(rho, {'A'});
    CHECK(std::real(a.matrix()(0, 0)) == doctest::Approx(0.15).epsilon(1e-12));
    const DensityMatrix c = partial_trace(rho, {'C'});
    CHECK(std::real(c.matrix()(0, 0)) == doctest::Approx(0.3).epsilon(1e-12));

    // B is thermal at temperature 2 with local Hamiltonian diag(1,0)
    const DensityMatrix b = partial_trace(rho, {'B'});
    const double z = std::exp(-0.5) + 1.0;
    CHECK(std::real(b.matrix()(0, 0)) == doctest::Approx(std::exp(-0.5) / z).epsilon(1e-12));
    CHECK(std::real(b.matrix()(0, 0)) == doctest::Approx(0.37754).epsilon(1e-4));

    const DensityMatrix ac = partial_trace(rho, {'A', 'C'});
    const EigenDecomposition eig = hermitian_eigendecomposition(ac.matrix());
    CHECK(std::abs(eig.eigenvalues[0]) < tol::structural);
    CHECK(std::abs(eig.eigenvalues[1]) < tol::structural);
    CHECK(eig.eigenvalues[2] == doctest::Approx(0.4).epsilon(1e-10));
    CHECK(eig.eigenvalues[3] == doctest::Approx(0.6).epsilon(1e-10));
}

TEST_CASE("three qubit marginals factor into products") {
    const DensityMatrix rho = three_qubit_initial(2.0, 0.15, 0.3, 0.4);
    const ComplexMatrix a = partial_trace(rho, {'A'}).matrix();
    const ComplexMatrix b = partial_trace(rho, {'B'}).matrix();
    const ComplexMatrix c = partial_trace(rho, {'C'}).matrix();
    const ComplexMatrix ab = partial_trace(rho, {'A', 'B'}).matrix();
    const ComplexMatrix bc = partial_trace(rho, {'B', 'C'}).matrix();
    CHECK(ab.max_abs_diff(kronecker_product(a, b)) < tol::structural);
    CHECK(bc.max_abs_diff(kronecker_product(b, c)) < tol::structural);
}

TEST_CASE("three qubit initial state rejects out-of-range parameters") {
    CHECK_THROWS_AS(three_qubit_initial(0.0, 0.15, 0.3, 0.4), DomainError);  // temp
    CHECK_THROWS_AS(three_qubit_initial(2.0, -0.1, 0.3, 0.4), DomainError);  // negative weight
    CHECK_THROWS_AS(three_qubit_initial(2.0, 0.15, 0.3, 0.05), DomainError); // gamma < |lc-la|
    CHECK_THROWS_AS(three_qubit_initial(2.0, 0.1, 0.1, 0.3), DomainError);   // gamma > la+lc
}

TEST_CASE("partial trace of a bell pair is maximally mixed") {
    const DensityMatrix half = partial_trace(bell_state(), {'A'});
    CHECK(half.matrix().max_abs_diff(ComplexMatrix::identity(2) * cd{0.5, 0.0}) <
          tol::accumulation);
}

TEST_CASE("partial trace validates the keep set") {
    const DensityMatrix rho = bell_state();
    CHECK_THROWS_AS(partial_trace(rho, {}), DomainError);
    CHECK_THROWS_AS(partial_trace(rho, {'A', 'A'}), DomainError);
    CHECK_THROWS_AS(partial_trace(rho, {'Q'}), UnknownLabel);
}

TEST_CASE("partial trace keeps label order of the state") {
    const DensityMatrix rho = three_qubit_initial(2.0, 0.15, 0.3, 0.4);
    const DensityMatrix ca = partial_trace(rho, {'C', 'A'});
    CHECK(ca.labels() == QubitLabels{'A', 'C'}); // state order, not request order
}

TEST_CASE("reordering swaps tensor factors") {
    std::mt19937_64 gen(31);
    const DensityMatrix one = testsupport::random_state(gen, 2);
    const DensityMatrix two = testsupport::random_state(gen, 2);
    const DensityMatrix both(kronecker_product(one.matrix(), two.matrix()), {'A', 'B'});

    const DensityMatrix flipped = reorder_qubits(both, {'A', 'B'}, {'B', 'A'});
    CHECK(flipped.labels() == QubitLabels{'B', 'A'});
    CHECK(flipped.matrix().max_abs_diff(kronecker_product(two.matrix(), one.matrix())) <
          tol::accumulation);

    const DensityMatrix back = reorder_qubits(flipped, {'B', 'A'}, {'A', 'B'});
    CHECK(back.matrix().max_abs_diff(both.matrix()) < tol::accumulation);
}

TEST_CASE("reordering validates both label lists") {
    const DensityMatrix rho = bell_state();
    CHECK_THROWS_AS(reorder_qubits(rho, {'B', 'A'}, {'A', 'B'}), LabelMismatch);
    CHECK_THROWS_AS(reorder_qubits(rho, {'A', 'B'}, {'A', 'C'}), LabelMismatch);
    CHECK_THROWS_AS(reorder_qubits(rho, {'A', 'B'}, {'A'}), LabelMismatch);
}

} // TEST_SUITE
