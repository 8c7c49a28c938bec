#pragma once

#include "chemobound/exponents.hpp"
#include "chemobound/problem.hpp"

namespace chemobound {

/// Constants of the energy-derivative identity
///   dPhi/dt = -E0 * grad + E1 * pw1 - E2 * pw2 + E3 * pw3 + E4
/// and of the Young reduction that folds the pw3 term away:
///   dPhi/dt <= -E0 * grad + E1 * pw1 + E5.
struct EnergyConstants {
    double C1 = 0, C2 = 0, C3 = 0, C4 = 0, C5 = 0;
    double E0 = 0, E1 = 0, E2 = 0, E3 = 0, E4 = 0, E5 = 0;
    double delta0 = 0;  // Young split weight, fixed to E2 so the pw2 term cancels
    double D0 = 0;      // Young remainder evaluated at delta0
};

/// Constants of the closed scalar differential inequality
///   dPhi/dt <= E8 Phi^gamma + E9 Phi^delta + E5
/// and of its single-power domination Phi' <= H Phi^gamma on [phi0, inf).
struct OdiConstants {
    double eps = 0;  // gradient-absorption weight, fixed to E0/(2 E1)
    double c4 = 0, c5 = 0;
    double E8 = 0, E9 = 0, E10 = 0;
    double H = 0;
    double phi0 = 0;
};

/// Constants of the a-priori comparison path under a hypothetical L^{p0}
/// bound L: Phi(t) <= max(Phi(0), (J2/J1)^{1/lambda}) = L1.
struct LpPathConstants {
    double L = 0;
    double c1 = 0, E6 = 0;
    double c3 = 0, D1 = 0, E7 = 0;
    double J1 = 0, J2 = 0, L1 = 0;
};

/// Sharp remainder for E3 x^{s} <= delta0 x^{s+1} + D0/measure pointwise
/// (s = p+m2-3 > 0), scaled by the domain measure. Verifies the inequality on
/// a log-spaced sample grid and throws std::logic_error on any violation.
double young_d0(double delta0, double E3, double p, double m2, double measure);

/// Sharp remainder for c3 X^beta <= eps X + D1 over X >= 0, beta in (0,1).
double young_d1(double eps, double c3, double beta);

/// Closed form of int_0^u tau (tau+alpha)^{p+m2-4} dtau. Requires p+m2 > 3.
double f_antiderivative(double u, double p, double m2, double alpha);

EnergyConstants compute_energy_constants(const Problem& prob, double pbar);

/// phi0 is the initial energy value; it enters only through H.
OdiConstants compute_odi_constants(const Problem& prob, const ExponentSet& e,
                                   const EnergyConstants& en, double phi0);

LpPathConstants compute_lp_path_constants(const Problem& prob, const ExponentSet& e,
                                          const EnergyConstants& en, const OdiConstants& odi,
                                          double L, double phi0);

}  // namespace chemobound
