#pragma once

// Central tolerance table. Structural checks (hermiticity, unit trace,
// positivity slack, unitarity of eigenvector matrices) use `structural`;
// quantities one algebraic step removed from inputs (fidelity symmetry,
// propagator unitarity, energy conservation) use `derived`; iterative
// convergence and accumulated sums use `accumulation`.

namespace qsc::tol {

inline constexpr double structural = 1e-10;
inline constexpr double derived = 1e-9;
inline constexpr double accumulation = 1e-12;

} // namespace qsc::tol
