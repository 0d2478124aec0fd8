// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_SVG_HPP
#define MICAP_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace micap {

/// One polyline of a line plot. Points are connected in the given order.
struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> points;  // (x, y) in data units
};

/// Renders a self-contained SVG line plot: fixed 720x480 canvas, linear
/// axes with six ticks, a legend naming each series, and one polyline per
/// series in a fixed palette. Series must be nonempty and finite.
std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label, const std::vector<PlotSeries>& series);

} // namespace micap

#endif
