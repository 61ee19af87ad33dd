#include "qsc/experiments.hpp"

#include <cmath>
#include <mutex>
#include <string>
#include <thread>

namespace qsc {

namespace {

void check_finite(double v, const char* name) {
    if (!std::isfinite(v)) throw DomainError(std::string(name) + " must be finite");
}

void check_range(double lo, double hi, const char* name) {
    check_finite(lo, name);
    check_finite(hi, name);
    if (!(lo < hi)) throw DomainError(std::string(name) + " range is empty");
}

double grid_point(double lo, double hi, int steps, int k) {
    return lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(steps - 1);
}

// Runs fn(0..count-1) across up to `jobs` threads, strided so neighboring
// indices land on different workers. Each index owns its output slot, so
// results are identical at any parallelism level.
template <typename Fn>
void parallel_for(int count, int jobs, const Fn& fn) {
    if (jobs < 1) throw DomainError("jobs must be at least 1");
    const int workers = std::min(jobs, count);
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::exception_ptr first_error = nullptr;
    std::mutex error_lock;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            try {
                for (int i = w; i < count; i += workers) fn(i);
            } catch (...) {
                const std::lock_guard<std::mutex> hold(error_lock);
                if (!first_error) first_error = std::current_exception();
            }
        });
    }
    for (std::thread& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

} // namespace

std::vector<TimeSeriesRecord> run_two_qubit(const TwoQubitScenario& scenario, int jobs) {
    check_finite(scenario.beta_a, "beta_a");
    check_finite(scenario.beta_b, "beta_b");
    check_finite(std::real(scenario.alpha), "alpha");
    check_finite(std::imag(scenario.alpha), "alpha");
    check_range(scenario.t_start, scenario.t_end, "time");
    if (scenario.steps < 2) throw DomainError("steps must be at least 2");

    const DensityMatrix initial = two_qubit_initial(scenario.beta_a, scenario.beta_b, scenario.alpha);
    const ComplexMatrix h_int = effective_hamiltonian_2q();
    const ComplexMatrix h_local = local_hamiltonian_2q();

    std::vector<TimeSeriesRecord> records(scenario.steps);
    parallel_for(scenario.steps, jobs, [&](int k) {
        const double time = grid_point(scenario.t_start, scenario.t_end, scenario.steps, k);
        const DensityMatrix state = evolve(initial, propagator({h_int, time}));
        TimeSeriesRecord& rec = records[static_cast<size_t>(k)];
        rec.time = time;
        rec.e_a = internal_energy(partial_trace(state, {'A'}), h_local);
        rec.e_b = internal_energy(partial_trace(state, {'B'}), h_local);
        rec.complexity = state_complexity(state).complexity;
        rec.concurrence = concurrence(state);
        rec.eof = entanglement_of_formation(rec.concurrence);
    });
    return records;
}

std::vector<GridRecord> run_three_qubit_grid(const ThreeQubitGrid& grid, int jobs) {
    check_finite(grid.tau, "tau");
    check_range(grid.s_min, grid.s_max, "s");
    check_range(grid.t_min, grid.t_max, "t");
    if (grid.resolution < 2) throw DomainError("resolution must be at least 2");

    const DensityMatrix initial =
        three_qubit_initial(grid.temp_b, grid.lambda_a, grid.lambda_c, grid.gamma);
    const ComplexMatrix h_local = local_hamiltonian_3q();
    const int res = grid.resolution;

    std::vector<GridRecord> records(static_cast<size_t>(res) * res);
    parallel_for(res * res, jobs, [&](int idx) {
        GridRecord& rec = records[static_cast<size_t>(idx)];
        rec.t = grid_point(grid.t_min, grid.t_max, res, idx / res);
        rec.s = grid_point(grid.s_min, grid.s_max, res, idx % res);
        const DensityMatrix state =
            evolve(initial, propagator({interaction_hamiltonian_3q(rec.t, rec.s), grid.tau}));
        rec.e_a = internal_energy(partial_trace(state, {'A'}), h_local);
        rec.e_b = internal_energy(partial_trace(state, {'B'}), h_local);
        rec.e_c = internal_energy(partial_trace(state, {'C'}), h_local);
        rec.c_ab = state_complexity(partial_trace(state, {'A', 'B'})).complexity;
        rec.c_bc = state_complexity(partial_trace(state, {'B', 'C'})).complexity;
        rec.c_ac = state_complexity(partial_trace(state, {'A', 'C'})).complexity;
    });
    return records;
}

std::vector<TraceRecord> run_three_qubit_trace(const ThreeQubitTrace& trace, int jobs) {
    check_finite(trace.s, "s");
    check_finite(trace.t, "t");
    check_range(trace.tau_start, trace.tau_end, "tau");
    if (trace.steps < 2) throw DomainError("steps must be at least 2");

    const DensityMatrix initial =
        three_qubit_initial(trace.temp_b, trace.lambda_a, trace.lambda_c, trace.gamma);
    const ComplexMatrix h_int = interaction_hamiltonian_3q(trace.t, trace.s);
    const ComplexMatrix h_local = local_hamiltonian_3q();

    std::vector<TraceRecord> records(trace.steps);
    parallel_for(trace.steps, jobs, [&](int k) {
        const double tau = grid_point(trace.tau_start, trace.tau_end, trace.steps, k);
        const DensityMatrix state = evolve(initial, propagator({h_int, tau}));
        TraceRecord& rec = records[static_cast<size_t>(k)];
        rec.tau = tau;
        rec.e_a = internal_energy(partial_trace(state, {'A'}), h_local);
        rec.e_b = internal_energy(partial_trace(state, {'B'}), h_local);
        rec.e_c = internal_energy(partial_trace(state, {'C'}), h_local);
        rec.c_ab = state_complexity(partial_trace(state, {'A', 'B'})).complexity;
        rec.c_bc = state_complexity(partial_trace(state, {'B', 'C'})).complexity;
        rec.c_ac = state_complexity(partial_trace(state, {'A', 'C'})).complexity;
    });
    return records;
}

ArrowReport arrow_complexity_report(const std::vector<TimeSeriesRecord>& series,
                                    const ArrowReportOptions& options) {
    if (series.size() < 3)
        throw TooFewSamples("arrow report: need at least 3 samples, got " +
                            std::to_string(series.size()));
    if (!(options.dead_band >= 0.0))
        throw DomainError("arrow report: dead band must be nonnegative");

    const int n = static_cast<int>(series.size());
    for (int k = 1; k < n; ++k)
        if (!(series[k].time > series[k - 1].time))
            throw DomainError("arrow report: sample times must increase");

    ArrowReport report;
    report.interior = n - 2;
    report.arrows.reserve(report.interior);

    for (int k = 1; k + 1 < n; ++k) {
        const TimeSeriesRecord& prev = series[k - 1];
        const TimeSeriesRecord& next = series[k + 1];
        const double span = next.time - prev.time;

        const double gap_rate =
            (std::abs(next.e_a - next.e_b) - std::abs(prev.e_a - prev.e_b)) / span;
        const bool follow_concurrence = options.observable == ArrowObservable::Concurrence;
        const double obs_rate = ((follow_concurrence ? next.concurrence : next.complexity) -
                                 (follow_concurrence ? prev.concurrence : prev.complexity)) /
                                span;

        Arrow arrow = Arrow::Stalled;
        if (gap_rate < -options.dead_band) arrow = Arrow::Normal;
        else if (gap_rate > options.dead_band) arrow = Arrow::Reversed;
        report.arrows.push_back(arrow);

        if (arrow == Arrow::Stalled) {
            ++report.stalled;
            continue;
        }
        if (arrow == Arrow::Normal) ++report.normal;
        else ++report.reversed;

        const bool matched = (arrow == Arrow::Normal && obs_rate > options.dead_band) ||
                             (arrow == Arrow::Reversed && obs_rate < -options.dead_band);
        if (matched) ++report.consistent;
        else report.mismatch_times.push_back(series[k].time);
    }

    report.classified = report.normal + report.reversed;
    if (report.classified > 0)
        report.consistency = static_cast<double>(report.consistent) / report.classified;
    return report;
}

} // namespace qsc
