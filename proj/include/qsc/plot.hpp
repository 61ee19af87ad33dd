#pragma once

#include <string>
#include <vector>

#include "qsc/experiments.hpp"

namespace qsc {

// Two stacked line panels sharing the time axis: energies on top, the
// scalar diagnostics below.
std::string timeseries_svg(const std::vector<TimeSeriesRecord>& records);
std::string timeseries_svg(const std::vector<TraceRecord>& records);

// Six heatmap panels (2 rows x 3 columns): per-qubit energies above, pair
// complexities below. records must hold resolution^2 rows in the order
// run_three_qubit_grid emits them.
std::string grid_svg(const std::vector<GridRecord>& records, int resolution);

} // namespace qsc
