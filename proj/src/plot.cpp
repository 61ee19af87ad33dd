#include "qsc/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

namespace qsc {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// ---- line panels ----

struct LineSeries {
    const char* name;
    const char* color;
    std::vector<double> values;
};

void append_line_panel(std::string& svg, const char* title, const std::vector<double>& xs,
                       const std::vector<LineSeries>& series, double px, double py, double pw,
                       double ph) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const LineSeries& ln : series)
        for (double v : ln.values) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
    const double x0 = xs.front();
    const double x1 = xs.back();

    svg += "<g class=\"panel\">\n";
    svg += "<rect x=\"" + num(px) + "\" y=\"" + num(py) + "\" width=\"" + num(pw) +
           "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"#555555\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(py - 8) +
           "\" font-family=\"sans-serif\" font-size=\"15\">" + title + "</text>\n";

    for (const LineSeries& ln : series) {
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += ln.color;
        svg += "\" stroke-width=\"1.5\" points=\"";
        for (size_t i = 0; i < xs.size(); ++i) {
            const double x = px + (xs[i] - x0) / (x1 - x0) * pw;
            const double y = py + ph - (ln.values[i] - lo) / (hi - lo) * ph;
            if (i > 0) svg += ' ';
            svg += num(x) + "," + num(y);
        }
        svg += "\"/>\n";
    }

    // legend, stacked top-right inside the panel
    double ly = py + 16.0;
    for (const LineSeries& ln : series) {
        svg += "<text x=\"" + num(px + pw - 90.0) + "\" y=\"" + num(ly) + "\" fill=\"";
        svg += ln.color;
        svg += "\" font-family=\"sans-serif\" font-size=\"13\">";
        svg += ln.name;
        svg += "</text>\n";
        ly += 16.0;
    }

    // axis extremes
    svg += "<text x=\"" + num(px + 4.0) + "\" y=\"" + num(py + 12.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + num(hi) + "</text>\n";
    svg += "<text x=\"" + num(px + 4.0) + "\" y=\"" + num(py + ph - 4.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + num(lo) + "</text>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(py + ph + 14.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + num(x0) + "</text>\n";
    svg += "<text x=\"" + num(px + pw - 40.0) + "\" y=\"" + num(py + ph + 14.0) +
           "\" font-family=\"sans-serif\" font-size=\"11\">" + num(x1) + "</text>\n";
    svg += "</g>\n";
}

std::string two_panel_svg(const std::vector<double>& xs, const std::vector<LineSeries>& top,
                          const std::vector<LineSeries>& bottom) {
    if (xs.empty()) throw DomainError("plot: no records");
    const double width = 960.0;
    const double height = 780.0;
    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                      "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
                      num(height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"#ffffff\"/>\n";
    append_line_panel(svg, "internal energy", xs, top, 45.0, 35.0, 890.0, 310.0);
    append_line_panel(svg, "state diagnostics", xs, bottom, 45.0, 420.0, 890.0, 310.0);
    svg += "</svg>\n";
    return svg;
}

// ---- heatmaps ----

constexpr int viridis_anchor_count = 9;
constexpr double viridis_anchors[viridis_anchor_count][3] = {
    {68, 1, 84},   {72, 40, 120},  {62, 74, 137}, {49, 104, 142}, {38, 130, 142},
    {31, 158, 137}, {53, 183, 121}, {109, 205, 89}, {253, 231, 37},
};

std::string viridis_hex(double level) {
    level = std::clamp(level, 0.0, 1.0);
    const double seg = level * (viridis_anchor_count - 1);
    const int i = std::min(static_cast<int>(seg), viridis_anchor_count - 2);
    const double f = seg - i;
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x",
                  static_cast<int>(std::lround(viridis_anchors[i][0] * (1.0 - f) + viridis_anchors[i + 1][0] * f)),
                  static_cast<int>(std::lround(viridis_anchors[i][1] * (1.0 - f) + viridis_anchors[i + 1][1] * f)),
                  static_cast<int>(std::lround(viridis_anchors[i][2] * (1.0 - f) + viridis_anchors[i + 1][2] * f)));
    return buf;
}

void append_heat_panel(std::string& svg, const char* title, const std::vector<GridRecord>& records,
                       int res, double GridRecord::* field, double px, double py, double pw,
                       double ph) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (const GridRecord& r : records) {
        lo = std::min(lo, r.*field);
        hi = std::max(hi, r.*field);
    }
    const double span = hi - lo;

    svg += "<g class=\"panel\">\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(py - 8) +
           "\" font-family=\"sans-serif\" font-size=\"15\">" + title + "</text>\n";

    const double cell_w = pw / res;
    const double cell_h = ph / res;
    for (int it = 0; it < res; ++it) {
        const double y = py + (res - 1 - it) * cell_h; // t grows upward
        int is = 0;
        while (is < res) {
            const double v = records[static_cast<size_t>(it) * res + is].*field;
            const std::string color = viridis_hex(span > 0.0 ? (v - lo) / span : 0.0);
            int run = is + 1;
            while (run < res) {
                const double w = records[static_cast<size_t>(it) * res + run].*field;
                if (viridis_hex(span > 0.0 ? (w - lo) / span : 0.0) != color) break;
                ++run;
            }
            svg += "<rect x=\"" + num(px + is * cell_w) + "\" y=\"" + num(y) + "\" width=\"" +
                   num((run - is) * cell_w + 0.5) + "\" height=\"" + num(cell_h + 0.5) +
                   "\" fill=\"" + color + "\"/>\n";
            is = run;
        }
    }

    svg += "<rect x=\"" + num(px) + "\" y=\"" + num(py) + "\" width=\"" + num(pw) +
           "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"#555555\"/>\n";
    svg += "<text x=\"" + num(px) + "\" y=\"" + num(py + ph + 16.0) +
           "\" font-family=\"sans-serif\" font-size=\"12\">min=" + num(lo) + " max=" + num(hi) +
           "</text>\n";
    svg += "</g>\n";
}

} // namespace

std::string timeseries_svg(const std::vector<TimeSeriesRecord>& records) {
    if (records.empty()) throw DomainError("plot: no records");
    std::vector<double> xs;
    LineSeries e_a{"e_a", "#d62728", {}};
    LineSeries e_b{"e_b", "#1f77b4", {}};
    LineSeries cx{"complexity", "#9467bd", {}};
    LineSeries cc{"concurrence", "#ff7f0e", {}};
    LineSeries ef{"eof", "#8c564b", {}};
    for (const TimeSeriesRecord& r : records) {
        xs.push_back(r.time);
        e_a.values.push_back(r.e_a);
        e_b.values.push_back(r.e_b);
        cx.values.push_back(r.complexity);
        cc.values.push_back(r.concurrence);
        ef.values.push_back(r.eof);
    }
    return two_panel_svg(xs, {e_a, e_b}, {cx, cc, ef});
}

std::string timeseries_svg(const std::vector<TraceRecord>& records) {
    if (records.empty()) throw DomainError("plot: no records");
    std::vector<double> xs;
    LineSeries e_a{"e_a", "#d62728", {}};
    LineSeries e_b{"e_b", "#1f77b4", {}};
    LineSeries e_c{"e_c", "#2ca02c", {}};
    LineSeries ab{"c_ab", "#9467bd", {}};
    LineSeries bc{"c_bc", "#ff7f0e", {}};
    LineSeries ac{"c_ac", "#8c564b", {}};
    for (const TraceRecord& r : records) {
        xs.push_back(r.tau);
        e_a.values.push_back(r.e_a);
        e_b.values.push_back(r.e_b);
        e_c.values.push_back(r.e_c);
        ab.values.push_back(r.c_ab);
        bc.values.push_back(r.c_bc);
        ac.values.push_back(r.c_ac);
    }
    return two_panel_svg(xs, {e_a, e_b, e_c}, {ab, bc, ac});
}

std::string grid_svg(const std::vector<GridRecord>& records, int resolution) {
    if (resolution < 2) throw DomainError("plot: resolution must be at least 2");
    if (records.size() != static_cast<size_t>(resolution) * resolution)
        throw DomainError("plot: record count does not match the resolution");

    const double panel = 290.0;
    const double gap = 40.0;
    const double left = 40.0;
    const double top = 40.0;
    const double width = left * 2 + panel * 3 + gap * 2;
    const double height = top + (panel + gap + 20.0) * 2 + 10.0;

    std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) +
                      "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " +
                      num(height) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(width) + "\" height=\"" + num(height) +
           "\" fill=\"#ffffff\"/>\n";

    struct PanelSpec {
        const char* title;
        double GridRecord::* field;
    };
    const PanelSpec panels[6] = {
        {"e_a", &GridRecord::e_a},   {"e_b", &GridRecord::e_b},   {"e_c", &GridRecord::e_c},
        {"c_ab", &GridRecord::c_ab}, {"c_bc", &GridRecord::c_bc}, {"c_ac", &GridRecord::c_ac},
    };
    for (int k = 0; k < 6; ++k) {
        const double px = left + (k % 3) * (panel + gap);
        const double py = top + (k / 3) * (panel + gap + 20.0);
        append_heat_panel(svg, panels[k].title, records, resolution, panels[k].field, px, py,
                          panel, panel);
    }
    svg += "</svg>\n";
    return svg;
}

} // namespace qsc
