// SPDX-License-Identifier: Apache-2.0

#include "micap/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <string>

#include "micap/csv.hpp"
#include "micap/errors.hpp"

namespace micap {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 700.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 430.0;
constexpr int kTicks = 6;

constexpr std::array<const char*, 8> kPalette = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd",
    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
};

std::string xml_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

struct Range {
    double lo = 0.0;
    double hi = 1.0;

    double to_pixel(double v, double pixel_lo, double pixel_hi) const {
        return pixel_lo + (v - lo) / (hi - lo) * (pixel_hi - pixel_lo);
    }
};

Range data_range(const std::vector<PlotSeries>& series, bool use_x) {
    double lo = 0.0;
    double hi = 0.0;
    bool seen = false;
    for (const PlotSeries& s : series) {
        for (const auto& [x, y] : s.points) {
            const double v = use_x ? x : y;
            if (!std::isfinite(v)) throw config_error("line_plot_svg: nonfinite plot point");
            lo = seen ? std::min(lo, v) : v;
            hi = seen ? std::max(hi, v) : v;
            seen = true;
        }
    }
    if (!seen) throw config_error("line_plot_svg: no points to plot");
    if (lo == hi) {
        // Widen a degenerate range so the single value sits mid-axis.
        const double pad = std::max(0.5, std::abs(lo) * 0.05);
        lo -= pad;
        hi += pad;
    }
    return Range{lo, hi};
}

} // namespace

std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<PlotSeries>& series) {
    if (series.empty()) throw config_error("line_plot_svg: at least one series required");
    for (const PlotSeries& s : series)
        if (s.points.empty()) throw config_error("line_plot_svg: empty series " + s.name);

    const Range xr = data_range(series, true);
    const Range yr = data_range(series, false);

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + px(kWidth) + "\" height=\"" +
           px(kHeight) + "\" viewBox=\"0 0 " + px(kWidth) + " " + px(kHeight) + "\">\n";
    svg += "<rect width=\"" + px(kWidth) + "\" height=\"" + px(kHeight) +
           "\" fill=\"#ffffff\"/>\n";
    svg += "<text x=\"" + px(kWidth / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
           xml_escape(title) + "</text>\n";

    for (int t = 0; t < kTicks; ++t) {
        const double frac = double(t) / double(kTicks - 1);
        const double xv = xr.lo + frac * (xr.hi - xr.lo);
        const double yv = yr.lo + frac * (yr.hi - yr.lo);
        const double xp = xr.to_pixel(xv, kLeft, kRight);
        const double yp = yr.to_pixel(yv, kBottom, kTop);
        svg += "<line x1=\"" + px(xp) + "\" y1=\"" + px(kTop) + "\" x2=\"" + px(xp) + "\" y2=\"" +
               px(kBottom) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<line x1=\"" + px(kLeft) + "\" y1=\"" + px(yp) + "\" x2=\"" + px(kRight) +
               "\" y2=\"" + px(yp) + "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg += "<text x=\"" + px(xp) + "\" y=\"" + px(kBottom + 18) +
               "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" +
               xml_escape(format_sig(xv, 4)) + "</text>\n";
        svg += "<text x=\"" + px(kLeft - 8) + "\" y=\"" + px(yp + 4) +
               "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
               xml_escape(format_sig(yv, 4)) + "</text>\n";
    }

    svg += "<rect x=\"" + px(kLeft) + "\" y=\"" + px(kTop) + "\" width=\"" + px(kRight - kLeft) +
           "\" height=\"" + px(kBottom - kTop) +
           "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + px((kLeft + kRight) / 2) + "\" y=\"" + px(kHeight - 12) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">" +
           xml_escape(x_label) + "</text>\n";
    svg += "<text x=\"18\" y=\"" + px((kTop + kBottom) / 2) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" transform=\"rotate(-90 18 " +
           px((kTop + kBottom) / 2) + ")\">" + xml_escape(y_label) + "</text>\n";

    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % kPalette.size()];
        std::string points;
        for (const auto& [x, y] : series[s].points) {
            if (!points.empty()) points += ' ';
            points += px(xr.to_pixel(x, kLeft, kRight)) + ',' + px(yr.to_pixel(y, kBottom, kTop));
        }
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    }

    const double legend_x = kRight - 180.0;
    double legend_y = kTop + 16.0;
    for (std::size_t s = 0; s < series.size(); ++s) {
        const char* color = kPalette[s % kPalette.size()];
        svg += "<line x1=\"" + px(legend_x) + "\" y1=\"" + px(legend_y - 4) + "\" x2=\"" +
               px(legend_x + 24) + "\" y2=\"" + px(legend_y - 4) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"2\"/>\n";
        svg += "<text x=\"" + px(legend_x + 30) + "\" y=\"" + px(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"12\">" + xml_escape(series[s].name) +
               "</text>\n";
        legend_y += 18.0;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace micap
