#pragma once

#include <string>
#include <vector>

#include "qsc/experiments.hpp"

namespace qsc {

// 12 significant digits with trailing zeros kept; an exact zero prints
// as "0". Deterministic across platforms for identical doubles.
std::string format_sig12(double v);

std::string to_csv(const std::vector<TimeSeriesRecord>& records);
std::string to_csv(const std::vector<GridRecord>& records);
std::string to_csv(const std::vector<TraceRecord>& records);

// Writes through a temp file in the same directory, then renames, so a
// failed run never leaves a partial file at the target path.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

// Strict inverse of the two-qubit CSV; the header must match exactly.
std::vector<TimeSeriesRecord> parse_two_qubit_csv(const std::string& text);

} // namespace qsc
