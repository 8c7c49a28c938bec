#pragma once

// Test-only oracles, independent of the library's numerical paths: plain
// composite Simpson, golden-section minimization, central differences.

#include <cmath>
#include <functional>

namespace oracles {

/// Composite Simpson with `panels` uniform panels (rounded up to even).
inline double simpson(const std::function<double(double)>& f, double a, double b, long panels) {
    if (panels % 2) ++panels;
    const double h = (b - a) / static_cast<double>(panels);
    double acc = f(a) + f(b);
    for (long i = 1; i < panels; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

/// Simpson in the log variable: exact change of variables x = e^s, suited to
/// integrands spanning many decades.
inline double simpson_log(const std::function<double(double)>& f, double a, double b,
                          long panels) {
    return simpson([&](double s) { const double x = std::exp(s); return f(x) * x; }, std::log(a),
                   std::log(b), panels);
}

struct MinResult {
    double x;
    double value;
};

/// Golden-section minimizer of a unimodal function on [a, b].
inline MinResult golden_section_min(const std::function<double(double)>& f, double a, double b,
                                    double tol = 1e-12, int max_iter = 400) {
    const double inv_phi = 0.6180339887498948482;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < max_iter && (b - a) > tol * (1.0 + std::abs(a) + std::abs(b)); ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracles
