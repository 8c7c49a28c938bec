#include "chemobound/grid.hpp"

#include <cmath>
#include <stdexcept>

namespace chemobound {

RadialGrid build_grid(const DomainGeometry& geom, int N) {
    if (N < 8) throw std::invalid_argument("grid: need at least 8 cells");
    RadialGrid g;
    g.geom = geom;
    g.cells = N;
    g.h = geom.radius / N;
    g.face_r.resize(N + 1);
    g.face_area.resize(N + 1);
    g.center_r.resize(N);
    g.mu.resize(N);

    const int n = geom.dim;
    const double S = geom.sphere_area();
    auto rpow = [](double r, int e) {
        double y = 1.0;
        for (int i = 0; i < e; ++i) y *= r;
        return y;
    };
    for (int i = 0; i <= N; ++i) {
        g.face_r[i] = (i == N) ? geom.radius : i * g.h;
        g.face_area[i] = S * rpow(g.face_r[i], n - 1);
    }
    double total = 0.0;
    for (int i = 0; i < N; ++i) {
        g.center_r[i] = (i + 0.5) * g.h;
        g.mu[i] = S * (rpow(g.face_r[i + 1], n) - rpow(g.face_r[i], n)) / n;
        total += g.mu[i];
    }
    g.total_measure = total;
    return g;
}

}  // namespace chemobound
