#include "qsc/io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace qsc {

std::string format_sig12(double v) {
    if (v == 0.0) return "0"; // covers -0.0 as well
    char buf[40];
    std::snprintf(buf, sizeof buf, "%#.12g", v);
    return buf;
}

namespace {

constexpr char two_qubit_header[] = "time,e_a,e_b,complexity,concurrence,eof";

void append_row(std::string& out, const double* values, int count) {
    for (int i = 0; i < count; ++i) {
        if (i > 0) out += ',';
        out += format_sig12(values[i]);
    }
    out += '\n';
}

double parse_field(const std::string& field, int line_no) {
    double value = 0.0;
    const char* begin = field.data();
    const char* end = begin + field.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw DomainError("csv line " + std::to_string(line_no) + ": bad number '" + field + "'");
    return value;
}

} // namespace

std::string to_csv(const std::vector<TimeSeriesRecord>& records) {
    if (records.empty()) throw DomainError("csv: no records");
    std::string out = std::string(two_qubit_header) + "\n";
    for (const TimeSeriesRecord& r : records) {
        const double row[] = {r.time, r.e_a, r.e_b, r.complexity, r.concurrence, r.eof};
        append_row(out, row, 6);
    }
    return out;
}

std::string to_csv(const std::vector<GridRecord>& records) {
    if (records.empty()) throw DomainError("csv: no records");
    std::string out = "t,s,e_a,e_b,e_c,c_ab,c_bc,c_ac\n";
    for (const GridRecord& r : records) {
        const double row[] = {r.t, r.s, r.e_a, r.e_b, r.e_c, r.c_ab, r.c_bc, r.c_ac};
        append_row(out, row, 8);
    }
    return out;
}

std::string to_csv(const std::vector<TraceRecord>& records) {
    if (records.empty()) throw DomainError("csv: no records");
    std::string out = "tau,e_a,e_b,e_c,c_ab,c_bc,c_ac\n";
    for (const TraceRecord& r : records) {
        const double row[] = {r.tau, r.e_a, r.e_b, r.e_c, r.c_ab, r.c_bc, r.c_ac};
        append_row(out, row, 7);
    }
    return out;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::filesystem::path target(path);
    const std::filesystem::path temp = target.string() + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + temp.string() + ": " + std::strerror(errno));
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code drop;
            std::filesystem::remove(temp, drop);
            throw Error("cannot write " + temp.string());
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, target, ec);
    if (ec) {
        std::error_code drop;
        std::filesystem::remove(temp, drop);
        throw Error("cannot move " + temp.string() + " to " + path + ": " + ec.message());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path + ": " + std::strerror(errno));
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) throw Error("cannot read " + path);
    return buf.str();
}

std::vector<TimeSeriesRecord> parse_two_qubit_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != two_qubit_header)
        throw DomainError("csv: expected header '" + std::string(two_qubit_header) + "'");

    std::vector<TimeSeriesRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        size_t start = 0;
        while (true) {
            const size_t comma = line.find(',', start);
            fields.push_back(line.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        if (fields.size() != 6)
            throw DomainError("csv line " + std::to_string(line_no) + ": expected 6 fields, got " +
                              std::to_string(fields.size()));
        TimeSeriesRecord rec;
        rec.time = parse_field(fields[0], line_no);
        rec.e_a = parse_field(fields[1], line_no);
        rec.e_b = parse_field(fields[2], line_no);
        rec.complexity = parse_field(fields[3], line_no);
        rec.concurrence = parse_field(fields[4], line_no);
        rec.eof = parse_field(fields[5], line_no);
        records.push_back(rec);
    }
    if (records.empty()) throw DomainError("csv: no data rows");
    return records;
}

} // namespace qsc
