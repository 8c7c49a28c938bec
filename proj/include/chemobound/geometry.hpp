#pragma once

#include <stdexcept>
#include <string>

namespace chemobound {

enum class DomainShape { interval, ball };

/// Radially symmetric domain: either the interval [-R, R] (reduced to [0, R]
/// by even symmetry) or the radius-R ball in R^n, n in {1,2,3}.
struct DomainGeometry {
    int dim = 1;
    DomainShape shape = DomainShape::ball;
    double radius = 1.0;

    static DomainGeometry interval(double R) { return checked(1, DomainShape::interval, R); }
    static DomainGeometry ball(int n, double R) { return checked(n, DomainShape::ball, R); }

    static DomainGeometry checked(int n, DomainShape s, double R) {
        if (n < 1 || n > 3) throw std::invalid_argument("geometry: dim must be 1, 2 or 3");
        if (!(R > 0.0)) throw std::invalid_argument("geometry: radius must be positive");
        if (s == DomainShape::interval && n != 1)
            throw std::invalid_argument("geometry: interval shape requires dim 1");
        return DomainGeometry{n, s, R};
    }

    // |S^{n-1}|: 2, 2*pi, 4*pi. The interval uses the same value as the n=1
    // ball, which makes |Omega| = 2R and keeps one radial code path.
    double sphere_area() const {
        switch (dim) {
            case 1: return 2.0;
            case 2: return 6.283185307179586476925286766559;
            default: return 12.566370614359172953850573533118;
        }
    }

    /// |Omega|: 2R, pi R^2, (4/3) pi R^3.
    double measure() const {
        double rn = radius;
        for (int i = 1; i < dim; ++i) rn *= radius;
        return sphere_area() * rn / dim;
    }

    std::string shape_name() const { return shape == DomainShape::interval ? "interval" : "ball"; }
};

}  // namespace chemobound
