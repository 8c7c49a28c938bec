#include "chemobound/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace chemobound {

namespace {

constexpr double kW = 840, kH = 520;
constexpr double kL = 80, kR = 20, kT = 44, kB = 56;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b"};

std::string fmt(double v, const char* f = "%.6g") {
    char buf[40];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

}  // namespace

void write_line_chart_svg(std::ostream& os, const std::string& title, const std::string& xlabel,
                          const std::string& ylabel, const std::vector<Series>& series,
                          bool log_y) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series) {
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double y = s.y[i];
            if (!std::isfinite(s.x[i]) || !std::isfinite(y)) continue;
            if (log_y && !(y > 0.0)) continue;
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            const double yv = log_y ? std::log10(y) : y;
            ymin = std::min(ymin, yv);
            ymax = std::max(ymax, yv);
        }
    }
    if (!(xmax > xmin)) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (!(ymax > ymin)) {
        ymin -= 0.5;
        ymax += 0.5;
    }

    auto px = [&](double x) { return kL + (x - xmin) / (xmax - xmin) * (kW - kL - kR); };
    auto py = [&](double yv) { return kH - kB - (yv - ymin) / (ymax - ymin) * (kH - kT - kB); };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
       << "\" viewBox=\"0 0 " << kW << " " << kH << "\">\n";
    os << "<rect width=\"" << kW << "\" height=\"" << kH << "\" fill=\"white\"/>\n";
    os << "<text x=\"" << kW / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"16\" "
          "font-family=\"sans-serif\">" << title << "</text>\n";

    // axes
    os << "<line x1=\"" << kL << "\" y1=\"" << kT << "\" x2=\"" << kL << "\" y2=\"" << kH - kB
       << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << kL << "\" y1=\"" << kH - kB << "\" x2=\"" << kW - kR << "\" y2=\""
       << kH - kB << "\" stroke=\"black\"/>\n";

    for (int i = 0; i <= 5; ++i) {
        const double fx = xmin + (xmax - xmin) * i / 5.0;
        const double X = px(fx);
        os << "<line x1=\"" << fmt(X, "%.2f") << "\" y1=\"" << kH - kB << "\" x2=\""
           << fmt(X, "%.2f") << "\" y2=\"" << kH - kB + 5 << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << fmt(X, "%.2f") << "\" y=\"" << kH - kB + 20
           << "\" text-anchor=\"middle\" font-size=\"11\" font-family=\"sans-serif\">" << fmt(fx)
           << "</text>\n";

        const double fy = ymin + (ymax - ymin) * i / 5.0;
        const double Y = py(fy);
        os << "<line x1=\"" << kL - 5 << "\" y1=\"" << fmt(Y, "%.2f") << "\" x2=\"" << kL
           << "\" y2=\"" << fmt(Y, "%.2f") << "\" stroke=\"black\"/>\n";
        const double label = log_y ? std::pow(10.0, fy) : fy;
        os << "<text x=\"" << kL - 8 << "\" y=\"" << fmt(Y + 4, "%.2f")
           << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
           << fmt(label, "%.3g") << "</text>\n";
    }

    os << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 16
       << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\">" << xlabel
       << "</text>\n";
    os << "<text x=\"20\" y=\"" << (kT + kH - kB) / 2
       << "\" text-anchor=\"middle\" font-size=\"13\" font-family=\"sans-serif\" "
          "transform=\"rotate(-90 20 " << (kT + kH - kB) / 2 << ")\">" << ylabel << "</text>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const char* color = kColors[si % 6];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            const double y = s.y[i];
            if (!std::isfinite(s.x[i]) || !std::isfinite(y)) continue;
            if (log_y && !(y > 0.0)) continue;
            os << fmt(px(s.x[i]), "%.2f") << ',' << fmt(py(log_y ? std::log10(y) : y), "%.2f")
               << ' ';
        }
        os << "\"/>\n";
        os << "<text x=\"" << kW - kR - 6 << "\" y=\"" << kT + 16 + 16 * si
           << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\" fill=\"" << color
           << "\">" << s.label << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace chemobound
