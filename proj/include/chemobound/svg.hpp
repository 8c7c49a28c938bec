#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace chemobound {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// Self-contained SVG line chart (no external plotting dependency).
/// log_y drops nonpositive samples from the range and the polylines.
void write_line_chart_svg(std::ostream& os, const std::string& title, const std::string& xlabel,
                          const std::string& ylabel, const std::vector<Series>& series,
                          bool log_y);

}  // namespace chemobound
