#include "chemobound/initial_data.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chemobound {

InitialData InitialData::constant(double a) {
    InitialData d;
    d.kind = InitialKind::constant;
    d.amplitude = a;
    return d;
}

InitialData InitialData::gaussian(double a, double w, double c) {
    InitialData d;
    d.kind = InitialKind::gaussian_bump;
    d.amplitude = a;
    d.width = w;
    d.center = c;
    return d;
}

InitialData InitialData::table(std::vector<double> v) {
    InitialData d;
    d.kind = InitialKind::table;
    d.values = std::move(v);
    return d;
}

double InitialData::operator()(double r, double R) const {
    switch (kind) {
        case InitialKind::constant:
            return amplitude;
        case InitialKind::gaussian_bump: {
            const double z = (r - center) / width;
            return amplitude * std::exp(-z * z);
        }
        case InitialKind::table: {
            const auto K = values.size();
            if (K == 1) return values[0];
            const double x = std::clamp(r / R, 0.0, 1.0) * static_cast<double>(K - 1);
            const auto j = std::min(static_cast<std::size_t>(x), K - 2);
            const double w = x - static_cast<double>(j);
            return (1.0 - w) * values[j] + w * values[j + 1];
        }
    }
    return 0.0;
}

void InitialData::validate(const DomainGeometry&) const {
    switch (kind) {
        case InitialKind::constant:
            if (amplitude < 0.0) throw std::invalid_argument("initial data: negative constant");
            if (amplitude == 0.0) throw std::invalid_argument("initial data: trivial initial data");
            break;
        case InitialKind::gaussian_bump:
            if (amplitude < 0.0) throw std::invalid_argument("initial data: negative amplitude");
            if (amplitude == 0.0) throw std::invalid_argument("initial data: trivial initial data");
            if (!(width > 0.0)) throw std::invalid_argument("initial data: width must be positive");
            if (center < 0.0) throw std::invalid_argument("initial data: center offset must be >= 0");
            break;
        case InitialKind::table: {
            if (values.empty()) throw std::invalid_argument("initial data: empty table");
            double vmax = 0.0;
            for (double v : values) {
                if (v < 0.0) throw std::invalid_argument("initial data: negative table sample");
                vmax = std::max(vmax, v);
            }
            if (vmax == 0.0) throw std::invalid_argument("initial data: trivial initial data");
            break;
        }
    }
}

std::string InitialData::kind_name() const {
    switch (kind) {
        case InitialKind::constant: return "constant";
        case InitialKind::gaussian_bump: return "gaussian";
        case InitialKind::table: return "table";
    }
    return "?";
}

double radial_integral(const std::function<double(double)>& f, const DomainGeometry& geom,
                       int panels) {
    if (panels < 2) panels = 2;
    if (panels % 2) ++panels;
    const double R = geom.radius;
    const double h = R / panels;
    const int n = geom.dim;
    auto g = [&](double r) {
        double w = 1.0;
        for (int i = 1; i < n; ++i) w *= r;
        return f(r) * w;
    };
    double acc = g(0.0) + g(R);
    for (int i = 1; i < panels; ++i) acc += g(i * h) * (i % 2 ? 4.0 : 2.0);
    return geom.sphere_area() * acc * h / 3.0;
}

namespace {

// exact radial moment of a piecewise-linear table: sum of
// integral (a + b r) r^{n-1} dr over each segment
double table_radial_integral(const std::vector<double>& values, const DomainGeometry& geom) {
    const auto K = values.size();
    const int n = geom.dim;
    if (K == 1) {
        double rn = geom.radius;
        for (int i = 1; i < n; ++i) rn *= geom.radius;
        return geom.sphere_area() * values[0] * rn / n;
    }
    const double dr = geom.radius / static_cast<double>(K - 1);
    auto powi = [](double x, int e) {
        double y = 1.0;
        for (int i = 0; i < e; ++i) y *= x;
        return y;
    };
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < K; ++j) {
        const double r0 = dr * static_cast<double>(j);
        const double r1 = r0 + dr;
        const double b = (values[j + 1] - values[j]) / dr;
        const double a = values[j] - b * r0;
        acc += a * (powi(r1, n) - powi(r0, n)) / n +
               b * (powi(r1, n + 1) - powi(r0, n + 1)) / (n + 1);
    }
    return geom.sphere_area() * acc;
}

constexpr int kSmoothPanels = 1 << 17;

}  // namespace

double mean_mass(const InitialData& u0, const DomainGeometry& geom) {
    u0.validate(geom);
    switch (u0.kind) {
        case InitialKind::constant:
            return u0.amplitude;
        case InitialKind::table:
            return table_radial_integral(u0.values, geom) / geom.measure();
        case InitialKind::gaussian_bump:
        default:
            return radial_integral([&](double r) { return u0(r, geom.radius); }, geom,
                                   kSmoothPanels) /
                   geom.measure();
    }
}

double initial_phi(const InitialData& u0, const DomainGeometry& geom, double p, double alpha) {
    const double R = geom.radius;
    return radial_integral([&](double r) { return std::pow(u0(r, R) + alpha, p); }, geom,
                           kSmoothPanels) /
           p;
}

}  // namespace chemobound
