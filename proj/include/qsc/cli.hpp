#pragma once

#include <string>

#include "qsc/experiments.hpp"

namespace qsc {

enum class ExperimentKind { TwoQubit, ThreeQubitGrid, ThreeQubitTrace, Report };

// Everything one invocation needs: which experiment, its parameters,
// where the artifacts go, and how many worker threads may run.
struct RunConfig {
    ExperimentKind kind = ExperimentKind::TwoQubit;
    TwoQubitScenario two;
    ThreeQubitGrid grid;
    ThreeQubitTrace trace;
    std::string out;  // output path prefix, e.g. "two-qubit" -> two-qubit.csv
    bool plot = false;
    int jobs = 1;
    std::string report_csv;  // report input
    ArrowReportOptions report_options;
};

// Accepts "0.25", "0.1i", "-i", "0.3-0.4i", and the polar form "0.1@1.57"
// (magnitude @ angle in radians).
cd parse_complex(const std::string& text);

// Full command-line entry point; returns the process exit code.
int run_cli(int argc, char** argv);

} // namespace qsc
