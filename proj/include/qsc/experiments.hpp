#pragma once

#include <optional>
#include <vector>

#include "qsc/dynamics.hpp"
#include "qsc/metrics.hpp"

namespace qsc {

// ---- two-qubit heat exchange ----

struct TwoQubitScenario {
    double beta_a = 1.0;
    double beta_b = 2.0;
    cd alpha{0.0, 0.0};
    double t_start = 0.0;
    double t_end = 1.0;
    int steps = 201;
};

struct TimeSeriesRecord {
    double time = 0.0;
    double e_a = 0.0;
    double e_b = 0.0;
    double complexity = 0.0;
    double concurrence = 0.0;
    double eof = 0.0;
};

// Evolves the correlated thermal pair over an inclusive time grid; each
// propagator is built from t=0, never composed incrementally.
std::vector<TimeSeriesRecord> run_two_qubit(const TwoQubitScenario& scenario, int jobs = 1);

// ---- three-qubit sweeps ----

struct ThreeQubitGrid {
    double tau = 1.0;
    double s_min = -10.0;
    double s_max = 10.0;
    double t_min = -10.0;
    double t_max = 10.0;
    int resolution = 201;
    double lambda_a = 0.15;
    double lambda_c = 0.3;
    double gamma = 0.4;
    double temp_b = 2.0;
};

struct GridRecord {
    double t = 0.0;
    double s = 0.0;
    double e_a = 0.0;
    double e_b = 0.0;
    double e_c = 0.0;
    double c_ab = 0.0;
    double c_bc = 0.0;
    double c_ac = 0.0;
};

// Sweeps the coupling-strength plane at fixed tau. Row-major records:
// t is the outer loop, s the inner one, regardless of parallelism.
std::vector<GridRecord> run_three_qubit_grid(const ThreeQubitGrid& grid, int jobs = 1);

struct ThreeQubitTrace {
    double s = 1.0;
    double t = 1.0;
    double tau_start = 0.0;
    double tau_end = 10.0;
    int steps = 201;
    double lambda_a = 0.15;
    double lambda_c = 0.3;
    double gamma = 0.4;
    double temp_b = 2.0;
};

struct TraceRecord {
    double tau = 0.0;
    double e_a = 0.0;
    double e_b = 0.0;
    double e_c = 0.0;
    double c_ab = 0.0;
    double c_bc = 0.0;
    double c_ac = 0.0;
};

// Fixes the couplings and sweeps the evolution time.
std::vector<TraceRecord> run_three_qubit_trace(const ThreeQubitTrace& trace, int jobs = 1);

// ---- arrow-of-time bookkeeping ----

enum class Arrow { Normal, Reversed, Stalled };

enum class ArrowObservable { Complexity, Concurrence };

struct ArrowReportOptions {
    double dead_band = 1e-6;  // |derivative| below this counts as stalled
    ArrowObservable observable = ArrowObservable::Complexity;
};

struct ArrowReport {
    int interior = 0;    // samples with neighbors on both sides
    int normal = 0;
    int reversed = 0;
    int stalled = 0;
    int classified = 0;  // normal + reversed
    int consistent = 0;
    std::optional<double> consistency;  // empty when nothing was classified
    std::vector<Arrow> arrows;          // arrows[k] belongs to series[k+1]
    std::vector<double> mismatch_times;
};

// Classifies each interior sample by the sign of d|e_a - e_b|/dt (central
// difference): a closing energy gap means heat is running from the
// currently hotter qubit to the colder one (normal), an opening gap means
// the reverse. A sample counts as consistent when the chosen observable
// rises on normal samples and falls on reversed ones.
ArrowReport arrow_complexity_report(const std::vector<TimeSeriesRecord>& series,
                                    const ArrowReportOptions& options = {});

} // namespace qsc
