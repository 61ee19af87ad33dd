#pragma once

// Shared generators and oracles for the unit and acceptance suites. All
// randomness is seeded explicitly so failures replay exactly.

#include <cmath>
#include <cstdint>
#include <random>

#include "qsc/dynamics.hpp"
#include "qsc/metrics.hpp"

namespace testsupport {

using qsc::cd;
using qsc::ComplexMatrix;
using qsc::DensityMatrix;

inline ComplexMatrix random_hermitian(std::mt19937_64& gen, int dim, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    ComplexMatrix h(dim);
    for (int r = 0; r < dim; ++r) {
        h(r, r) = cd{scale * u(gen), 0.0};
        for (int c = r + 1; c < dim; ++c) {
            const cd v{scale * u(gen), scale * u(gen)};
            h(r, c) = v;
            h(c, r) = std::conj(v);
        }
    }
    return h;
}

// Normalized Gram matrix G G^dagger / tr, a full-rank random mixed state.
inline DensityMatrix random_state(std::mt19937_64& gen, int dim) {
    std::normal_distribution<double> n(0.0, 1.0);
    ComplexMatrix g(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) g(r, c) = cd{n(gen), n(gen)};
    ComplexMatrix rho = g * g.adjoint();
    rho *= cd{1.0 / std::real(rho.trace()), 0.0};
    return DensityMatrix(rho);
}

// exp(-i tau h) by scaling and squaring on the plain Taylor series. Slow
// and independent of the spectral route, which is the point.
inline ComplexMatrix expm_taylor(const ComplexMatrix& h, double tau) {
    int squarings = 0;
    double norm = h.frobenius_norm() * std::abs(tau);
    while (norm > 0.25) {
        norm *= 0.5;
        ++squarings;
    }
    const ComplexMatrix a = h * cd{0.0, -tau / std::pow(2.0, squarings)};
    ComplexMatrix term = ComplexMatrix::identity(h.dim());
    ComplexMatrix sum = term;
    for (int k = 1; k <= 30; ++k) {
        term = term * a * cd{1.0 / k, 0.0};
        sum += term;
    }
    for (int i = 0; i < squarings; ++i) sum = sum * sum;
    return sum;
}

} // namespace testsupport
