#pragma once

#include <vector>

#include "chemobound/geometry.hpp"

namespace chemobound {

/// Uniform finite-volume grid on [0, R]: N cells, faces at i*h, centers at
/// (i+1/2)*h. Cell measures are the exact radial volumes
/// mu_i = |S^{n-1}| (r_{i+1}^n - r_i^n)/n, so sum(mu) = |Omega| to roundoff.
struct RadialGrid {
    DomainGeometry geom;
    int cells = 0;
    double h = 0.0;
    std::vector<double> face_r;     // N+1
    std::vector<double> face_area;  // N+1, |S^{n-1}| r^{n-1}
    std::vector<double> center_r;   // N
    std::vector<double> mu;         // N
    double total_measure = 0.0;     // sum of mu
};

/// N >= 8 cells; throws std::invalid_argument otherwise.
RadialGrid build_grid(const DomainGeometry& geom, int N);

}  // namespace chemobound
