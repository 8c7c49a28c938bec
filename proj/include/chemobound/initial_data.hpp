#pragma once

#include <functional>
#include <string>
#include <vector>

#include "chemobound/geometry.hpp"

namespace chemobound {

enum class InitialKind { constant, gaussian_bump, table };

/// Radial initial cell-density profile u0(r), r in [0, R].
///
/// Kinds:
///   constant       u0 = amplitude
///   gaussian_bump  u0 = amplitude * exp(-((r - center)/width)^2)
///   table          samples at equally spaced radii spanning [0, R],
///                  linearly interpolated
struct InitialData {
    InitialKind kind = InitialKind::constant;
    double amplitude = 1.0;
    double center = 0.0;
    double width = 0.25;
    std::vector<double> values;
    double kappa = 0.0;  // regularity note, informational only

    static InitialData constant(double a);
    static InitialData gaussian(double a, double w, double c = 0.0);
    static InitialData table(std::vector<double> v);

    double operator()(double r, double R) const;

    /// Nonnegative and not identically zero; throws std::invalid_argument.
    void validate(const DomainGeometry& geom) const;

    std::string kind_name() const;
};

/// |S^{n-1}| * integral_0^R f(r) r^{n-1} dr by composite Simpson with `panels`
/// uniform panels (panels is rounded up to an even count).
double radial_integral(const std::function<double(double)>& f, const DomainGeometry& geom,
                       int panels);

/// Domain average M = (1/|Omega|) * integral of u0 with the radial measure.
/// Exact for constant and table data, high-resolution Simpson for the bump.
/// Throws on trivial (identically zero) data.
double mean_mass(const InitialData& u0, const DomainGeometry& geom);

/// integral of (u0 + alpha)^p with the radial measure, divided by p.
/// Continuum counterpart of the grid energy functional, used for reporting
/// bounds without a grid in scope.
double initial_phi(const InitialData& u0, const DomainGeometry& geom, double p, double alpha);

}  // namespace chemobound
