#pragma once

#include <span>

#include "chemobound/grid.hpp"

namespace chemobound {

// Grid quadrature of cell fields: cell sums with the radial measure, face
// differences for gradients. One shared code path so that energy rows, the
// bound evaluation and the interpolation-constant calibration all measure the
// same discrete quantities.

/// sum_i mu_i u_i
double field_mass(std::span<const double> u, const RadialGrid& g);

/// sum_i mu_i (u_i + shift)^e
double field_power_integral(std::span<const double> u, const RadialGrid& g, double e,
                            double shift = 0.0);

/// (sum_i mu_i |u_i|^q)^(1/q); also valid for quasi-norm exponents q < 1
double field_lp_norm(std::span<const double> u, const RadialGrid& g, double q);

double field_linf(std::span<const double> u);

/// (1/p) sum_i mu_i (u_i + alpha)^p
double field_phi(std::span<const double> u, const RadialGrid& g, double p, double alpha);

/// sum over interior faces of |S^{n-1}| r^{n-1} h * ((w_{i+1}-w_i)/h)^2 with
/// w = (u + alpha)^e. Boundary faces carry zero gradient (zero flux).
double field_gradient_energy(std::span<const double> u, const RadialGrid& g, double e,
                             double alpha);

/// L^q norm (face quadrature) of u (u+alpha)^{m2-2} v_r, the transport factor
/// of the cross-diffusion term. u at faces by arithmetic mean.
double field_crossdiff_norm(std::span<const double> u, std::span<const double> vr_face,
                            const RadialGrid& g, double m2, double alpha, double q);

}  // namespace chemobound
