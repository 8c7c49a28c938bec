#include "chemobound/fields.hpp"

#include <algorithm>
#include <cmath>

namespace chemobound {

double field_mass(std::span<const double> u, const RadialGrid& g) {
    double acc = 0.0;
    for (int i = 0; i < g.cells; ++i) acc += g.mu[i] * u[i];
    return acc;
}

double field_power_integral(std::span<const double> u, const RadialGrid& g, double e,
                            double shift) {
    double acc = 0.0;
    for (int i = 0; i < g.cells; ++i) acc += g.mu[i] * std::pow(u[i] + shift, e);
    return acc;
}

double field_lp_norm(std::span<const double> u, const RadialGrid& g, double q) {
    double acc = 0.0;
    for (int i = 0; i < g.cells; ++i) acc += g.mu[i] * std::pow(std::abs(u[i]), q);
    return std::pow(acc, 1.0 / q);
}

double field_linf(std::span<const double> u) {
    double m = 0.0;
    for (double v : u) m = std::max(m, std::abs(v));
    return m;
}

double field_phi(std::span<const double> u, const RadialGrid& g, double p, double alpha) {
    return field_power_integral(u, g, p, alpha) / p;
}

double field_gradient_energy(std::span<const double> u, const RadialGrid& g, double e,
                             double alpha) {
    double acc = 0.0;
    double wl = std::pow(u[0] + alpha, e);
    for (int i = 1; i < g.cells; ++i) {
        const double wr = std::pow(u[i] + alpha, e);
        const double d = (wr - wl) / g.h;
        acc += g.face_area[i] * g.h * d * d;
        wl = wr;
    }
    return acc;
}

double field_crossdiff_norm(std::span<const double> u, std::span<const double> vr_face,
                            const RadialGrid& g, double m2, double alpha, double q) {
    double acc = 0.0;
    for (int i = 1; i < g.cells; ++i) {
        const double uf = 0.5 * (u[i - 1] + u[i]);
        const double t = uf * std::pow(uf + alpha, m2 - 2.0) * vr_face[i];
        acc += g.face_area[i] * g.h * std::pow(std::abs(t), q);
    }
    return std::pow(acc, 1.0 / q);
}

}  // namespace chemobound
