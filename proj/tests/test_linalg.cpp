#include "doctest.h"

#include <random>

#include "qsc/linalg.hpp"
#include "support.hpp"

using namespace qsc;
using testsupport::random_hermitian;

TEST_SUITE("linalg") {

TEST_CASE("matrix access is bounds checked") {
    ComplexMatrix m(2);
    m(0, 1) = cd{1.0, 2.0};
    CHECK(m(0, 1) == cd{1.0, 2.0});
    CHECK(m(1, 0) == cd{0.0, 0.0});
    CHECK_THROWS_AS(m(2, 0), std::out_of_range);
    CHECK_THROWS_AS(m(0, -1), std::out_of_range);
}

TEST_CASE("identity, trace, adjoint") {
    const ComplexMatrix id = ComplexMatrix::identity(3);
    CHECK(id.trace() == cd{3.0, 0.0});

    ComplexMatrix m(2);
    m(0, 1) = cd{0.0, 1.0};
    const ComplexMatrix a = m.adjoint();
    CHECK(a(1, 0) == cd{0.0, -1.0});
    CHECK(a(0, 1) == cd{0.0, 0.0});
}

TEST_CASE("arithmetic mixes entries the obvious way") {
    ComplexMatrix a(2);
    a(0, 0) = cd{1.0, 0.0};
    a(0, 1) = cd{2.0, 0.0};
    ComplexMatrix b(2);
    b(1, 0) = cd{0.0, 3.0};

    const ComplexMatrix sum = a + b;
    CHECK(sum(0, 1) == cd{2.0, 0.0});
    CHECK(sum(1, 0) == cd{0.0, 3.0});

    const ComplexMatrix prod = pauli_x() * pauli_y();
    CHECK(prod(0, 0) == cd{0.0, 1.0});
    CHECK(prod(1, 1) == cd{0.0, -1.0});
    CHECK(prod(0, 1) == cd{0.0, 0.0});

    ComplexMatrix c(2);
    CHECK_THROWS_AS(a.max_abs_diff(ComplexMatrix(3)), DimensionMismatch);
    CHECK(a.max_abs_diff(c) == doctest::Approx(2.0));
}

TEST_CASE("kronecker product of pauli x and y") {
    const ComplexMatrix k = kronecker_product(pauli_x(), pauli_y());
    CHECK(k.dim() == 4);
    CHECK(k(0, 3) == cd{0.0, -1.0});
    CHECK(k(1, 2) == cd{0.0, 1.0});
    CHECK(k(2, 1) == cd{0.0, -1.0});
    CHECK(k(3, 0) == cd{0.0, 1.0});
    double off = 0.0;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            if (r + c != 3) off += std::abs(k(r, c));
    CHECK(off == 0.0);
}

TEST_CASE("kronecker trace is multiplicative") {
    std::mt19937_64 gen(11);
    const ComplexMatrix a = random_hermitian(gen, 2);
    const ComplexMatrix b = random_hermitian(gen, 3);
    const cd lhs = kronecker_product(a, b).trace();
    const cd rhs = a.trace() * b.trace();
    CHECK(std::abs(lhs - rhs) < tol::accumulation);
}

TEST_CASE("hermiticity defect sees asymmetric entries") {
    ComplexMatrix m(2);
    m(0, 1) = cd{1.0, 0.0};
    m(1, 0) = cd{1.0, 0.5};
    CHECK(hermiticity_defect(m) == doctest::Approx(0.5));
    CHECK(hermiticity_defect(pauli_y()) == 0.0);
}

TEST_CASE("eigendecomposition of a permuted diagonal") {
    ComplexMatrix m(3);
    m(0, 0) = cd{3.0, 0.0};
    m(1, 1) = cd{1.0, 0.0};
    m(2, 2) = cd{2.0, 0.0};
    const EigenDecomposition eig = hermitian_eigendecomposition(m);
    REQUIRE(eig.eigenvalues.size() == 3);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(eig.eigenvalues[2] == doctest::Approx(3.0));
    // columns are basis vectors picking out the sorted diagonal entries
    CHECK(std::abs(eig.eigenvectors(1, 0)) == doctest::Approx(1.0));
    CHECK(std::abs(eig.eigenvectors(2, 1)) == doctest::Approx(1.0));
    CHECK(std::abs(eig.eigenvectors(0, 2)) == doctest::Approx(1.0));
}

TEST_CASE("pauli x spectrum") {
    const EigenDecomposition eig = hermitian_eigendecomposition(pauli_x());
    CHECK(eig.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
}

TEST_CASE("eigendecomposition reconstructs random hermitian matrices") {
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 25; ++trial) {
        const int dim = 2 + static_cast<int>(gen() % 7); // up to 8
        const ComplexMatrix h = random_hermitian(gen, dim);
        const EigenDecomposition eig = hermitian_eigendecomposition(h);

        const ComplexMatrix& v = eig.eigenvectors;
        CHECK((v.adjoint() * v).max_abs_diff(ComplexMatrix::identity(dim)) < tol::derived);

        ComplexMatrix d(dim);
        for (int k = 0; k < dim; ++k) d(k, k) = cd{eig.eigenvalues[k], 0.0};
        CHECK((v * d * v.adjoint()).max_abs_diff(h) < tol::derived);

        for (size_t k = 1; k < eig.eigenvalues.size(); ++k)
            CHECK(eig.eigenvalues[k] + tol::accumulation >= eig.eigenvalues[k - 1]);
    }
}

TEST_CASE("eigendecomposition rejects non-hermitian input") {
    ComplexMatrix m(2);
    m(0, 1) = cd{1.0, 0.0};
    CHECK_THROWS_AS(hermitian_eigendecomposition(m), NotHermitian);
}

TEST_CASE("spectral function turns pauli z into a phase pair") {
    const double t = 0.7;
    const ComplexMatrix u =
        spectral_function(pauli_z(), [t](double lambda) { return std::exp(cd{0.0, -t * lambda}); });
    CHECK(std::abs(u(0, 0) - std::exp(cd{0.0, -t})) < tol::derived);
    CHECK(std::abs(u(1, 1) - std::exp(cd{0.0, t})) < tol::derived);
    CHECK(std::abs(u(0, 1)) < tol::derived);
    CHECK(std::abs(u(1, 0)) < tol::derived);
}

TEST_CASE("psd sqrt squares back") {
    std::mt19937_64 gen(23);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix g = random_hermitian(gen, 4);
        const ComplexMatrix pos = g * g; // PSD by construction
        const ComplexMatrix root = psd_sqrt(pos);
        CHECK((root * root).max_abs_diff(pos) < tol::derived);
        CHECK(hermiticity_defect(root) < tol::derived);
    }
}

TEST_CASE("psd sqrt rejects a negative direction") {
    ComplexMatrix m(2);
    m(0, 0) = cd{1.5, 0.0};
    m(1, 1) = cd{-0.5, 0.0};
    CHECK_THROWS_AS(psd_sqrt(m), NotPositive);
}

TEST_CASE("unitary conjugation checks dimensions") {
    CHECK_THROWS_AS(unitary_conjugate(ComplexMatrix::identity(2), ComplexMatrix(3)),
                    DimensionMismatch);
    const ComplexMatrix spun = unitary_conjugate(pauli_x(), pauli_z());
    CHECK(spun.max_abs_diff(pauli_z() * cd{-1.0, 0.0}) < tol::accumulation);
}

} // TEST_SUITE
