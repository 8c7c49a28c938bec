#pragma once

#include <span>

#include "chemobound/grid.hpp"

namespace chemobound {

struct OsgoodResult {
    double value = 0.0;      // midpoint of the bracketing interval
    double error = 0.0;      // half-width of the tail sandwich + quadrature estimate
    double tail_cut = 0.0;   // switch point between quadrature and analytic tail
};

/// (1/p) * sum mu_i (u_i + alpha)^p, the grid energy of a field. Shares the
/// cell quadrature used by the trace rows.
double phi0_of_field(std::span<const double> u, const RadialGrid& grid, double p, double alpha);

/// integral_{phi0}^{inf} dtau / (E8 tau^gamma + E9 tau^delta + E5).
///
/// The finite part [phi0, cut] is adaptive quadrature in log variable to
/// relative tolerance 1e-10; the tail is bracketed by
///   cut^{1-gamma} / ((E8 + e')(gamma-1)) <= tail <= cut^{1-gamma} / (E8 (gamma-1)),
/// e' = E9 cut^{delta-gamma} + E5 cut^{-gamma}, so the reported value carries
/// a certified-by-construction error bar instead of a silent truncation.
/// Requires E8 > 0, gamma > 1 (otherwise the integral diverges and no finite
/// bound exists), E9, E5 >= 0, delta < gamma when E9 > 0.
OsgoodResult osgood_lower_bound(double E8, double E9, double E5, double gamma, double delta,
                                double phi0);

/// phi0^{1-gamma} / (H (gamma-1)) with
/// H = E8 + E9 phi0^{delta-gamma} + E10 phi0^{1/p-gamma}.
double explicit_lower_bound(double E8, double E9, double E10, double gamma, double delta,
                            double pbar, double phi0);

}  // namespace chemobound
