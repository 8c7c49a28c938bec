#include "chemobound/constants.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chemobound {

double young_d0(double delta0, double E3, double p, double m2, double measure) {
    const double s = p + m2 - 3.0;
    if (!(s > 0.0)) throw std::domain_error("young_d0: requires p+m2 > 3");
    if (!(delta0 > 0.0) || !(E3 > 0.0)) throw std::domain_error("young_d0: needs positive inputs");

    const double d0 =
        1.0 / (s + 1.0) *
        std::pow(delta0 * std::pow(E3, -(s + 1.0) / s) * (s + 1.0) / s, -s) * measure;

    // transcription guard: E3 x^s <= delta0 x^{s+1} + d0/measure on a sampled
    // log grid (exact at the minimizer, so allow a roundoff-scale slack)
    const double pointwise = d0 / measure;
    for (int i = 0; i < 200; ++i) {
        const double x = std::pow(10.0, -3.0 + 6.0 * i / 199.0);
        const double lhs = E3 * std::pow(x, s);
        const double rhs = delta0 * std::pow(x, s + 1.0) + pointwise;
        if (lhs > rhs * (1.0 + 1e-12))
            throw std::logic_error("young_d0: pointwise inequality failed at a sample");
    }
    return d0;
}

double young_d1(double eps, double c3, double beta) {
    if (!(beta > 0.0 && beta < 1.0)) throw std::domain_error("young_d1: beta must be in (0,1)");
    if (!(eps > 0.0) || !(c3 > 0.0)) throw std::domain_error("young_d1: needs positive inputs");
    const double q = beta / (1.0 - beta);
    return (1.0 - beta) * std::pow(beta, q) * std::pow(c3, 1.0 / (1.0 - beta)) * std::pow(eps, -q);
}

double f_antiderivative(double u, double p, double m2, double alpha) {
    const double s = p + m2 - 3.0;
    if (!(s > 0.0)) throw std::domain_error("f_antiderivative: requires p+m2 > 3");
    const double ua = u + alpha;
    return std::pow(ua, s + 1.0) / (s + 1.0) - alpha * std::pow(ua, s) / s +
           std::pow(alpha, s + 1.0) / (s * (s + 1.0));
}

EnergyConstants compute_energy_constants(const Problem& prob, double pbar) {
    const double p = pbar;
    const double m1 = prob.m1, m2 = prob.m2;
    const double alpha = prob.alpha, chi = prob.chi, M = prob.mass_mean;
    const double measure = prob.geom.measure();

    EnergyConstants c;
    c.C1 = chi * (p - 1.0) * M;
    c.C2 = chi * (p - 1.0);
    c.C3 = 1.0 / (p + m2 - 2.0);
    c.C4 = alpha / (p + m2 - 3.0);
    c.C5 = std::pow(alpha, p + m2 - 2.0) / ((p + m2 - 3.0) * (p + m2 - 2.0));

    c.E0 = 4.0 * (p - 1.0) / ((p + m1 - 1.0) * (p + m1 - 1.0));
    c.E1 = c.C2 * c.C3;
    c.E2 = alpha * c.C2 * c.C3 + c.C2 * c.C4 + c.C1 * c.C3;
    c.E3 = alpha * c.C2 * c.C4 + c.C1 * c.C4;
    // C1 = C2*M makes the two constant terms cancel identically; kept in the
    // E5 formula anyway, with the cancellation asserted.
    c.E4 = (c.C2 * M - c.C1) * c.C5 * measure;
    if (std::abs(c.E4) > 1e-12 * std::abs(c.C1 * c.C5 * measure))
        throw std::logic_error("energy constants: expected E4 cancellation failed");

    c.delta0 = c.E2;
    c.D0 = young_d0(c.delta0, c.E3, p, m2, measure);
    c.E5 = std::abs(c.E4) + c.D0;
    for (double v : {c.C1, c.C2, c.C3, c.C4, c.C5, c.E0, c.E1, c.E2, c.E3, c.E5, c.D0})
        if (!std::isfinite(v))
            throw std::overflow_error("energy constants exceed double range");
    return c;
}

OdiConstants compute_odi_constants(const Problem& prob, const ExponentSet& e,
                                   const EnergyConstants& en, double phi0) {
    if (!(prob.cgn > 0.0)) throw std::domain_error("odi constants: Cgn not set");
    if (!(phi0 > 0.0)) throw std::domain_error("odi constants: phi0 must be positive");
    const double p = e.pbar;
    const double cgn = prob.cgn;

    OdiConstants o;
    o.eps = en.E0 / (2.0 * en.E1);
    o.c4 = std::pow(p, e.gamma) * cgn * (1.0 - e.sigma) *
           std::pow(en.E0 / (en.E1 * cgn * e.sigma), -e.sigma / (1.0 - e.sigma));
    o.c5 = std::pow(p, e.delta) * cgn;
    o.E8 = o.c4 * en.E1;
    o.E9 = o.c5 * en.E1;
    o.E10 = en.E5 / prob.mass_mean * std::pow(p / prob.geom.measure(), 1.0 / p);
    o.phi0 = phi0;
    o.H = o.E8 + o.E9 * std::pow(phi0, e.delta - e.gamma) +
          o.E10 * std::pow(phi0, 1.0 / p - e.gamma);
    for (double v : {o.c4, o.c5, o.E8, o.E9, o.E10, o.H})
        if (!std::isfinite(v)) throw std::overflow_error("ODI constants exceed double range");
    return o;
}

LpPathConstants compute_lp_path_constants(const Problem& prob, const ExponentSet& e,
                                          const EnergyConstants& en, const OdiConstants& odi,
                                          double L, double phi0) {
    if (!(L > 0.0)) throw std::domain_error("lp path: L must be positive");
    const double p = e.pbar;
    const double measure = prob.geom.measure();
    const double mstar = (prob.mass_mean + prob.alpha) * measure;  // integral of u + alpha

    LpPathConstants lp;
    lp.L = L;
    lp.c1 = 2.0 * prob.cgn * std::max(std::pow(mstar, p * (1.0 - e.a1)), std::pow(mstar, p));
    lp.E6 = std::pow(p / lp.c1, e.lambda);

    // ||u + alpha||_{p0} <= L + alpha |Omega|^{1/p0} (triangle inequality),
    // raised to (p+m1-1)/2 to bound the interpolation norm of (u+alpha)^{(p+m1-1)/2};
    // see docs/constants.md for the full chain.
    const double lstar =
        std::pow(L + prob.alpha * std::pow(measure, 1.0 / prob.p0), 0.5 * (p + prob.m1 - 1.0));
    lp.c3 = 2.0 * prob.cgn *
            std::max(std::pow(lstar, e.k * (1.0 - e.a2)), std::pow(mstar, p + prob.m2 - 1.0));
    lp.D1 = young_d1(odi.eps, lp.c3, e.beta);
    lp.E7 = lp.c3 + lp.D1;

    lp.J1 = (en.E0 - en.E1 * odi.eps) * lp.E6;
    lp.J2 = en.E1 * lp.E7 + en.E5;
    lp.L1 = std::max(phi0, std::pow(lp.J2 / lp.J1, 1.0 / e.lambda));
    // the sharp D1 ~ c3^{1/(1-beta)} genuinely leaves double range at extreme
    // parameter corners (beta near 1); fail loud rather than carry infinities
    for (double v : {lp.c1, lp.E6, lp.c3, lp.D1, lp.E7, lp.J1, lp.J2, lp.L1})
        if (!std::isfinite(v))
            throw std::overflow_error("comparison-path constants exceed double range");
    return lp;
}

}  // namespace chemobound
