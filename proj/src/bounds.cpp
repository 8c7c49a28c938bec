#include "chemobound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chemobound/fields.hpp"
#include "chemobound/integrate.hpp"

namespace chemobound {

double phi0_of_field(std::span<const double> u, const RadialGrid& grid, double p, double alpha) {
    return field_phi(u, grid, p, alpha);
}

OsgoodResult osgood_lower_bound(double E8, double E9, double E5, double gamma, double delta,
                                double phi0) {
    if (!(E8 > 0.0)) throw std::domain_error("osgood: E8 must be positive");
    if (!(gamma > 1.0)) throw std::domain_error("osgood: gamma <= 1, integral diverges");
    if (!(phi0 > 0.0)) throw std::domain_error("osgood: phi0 must be positive");
    if (E9 < 0.0 || E5 < 0.0) throw std::domain_error("osgood: E9, E5 must be >= 0");
    if (E9 > 0.0 && !(gamma > delta)) throw std::domain_error("osgood: needs gamma > delta");

    // Everything runs in s = ln tau: near-critical exponent sets need switch
    // points far beyond double range in tau, but their logarithms stay small.
    const double ln_q9 = E9 > 0.0 ? std::log(E9 / E8) : 0.0;
    const double ln_q5 = E5 > 0.0 ? std::log(E5 / E8) : 0.0;
    const double mu = gamma - delta;
    const double lnE8 = std::log(E8);

    // integrand tau/psi(tau) at s = ln tau, evaluated via exponents so no
    // intermediate power overflows
    auto g = [&](double s) {
        double r = 0.0;
        if (E9 > 0.0) r += std::exp(ln_q9 - mu * s);
        if (E5 > 0.0) r += std::exp(ln_q5 - gamma * s);
        return std::exp((1.0 - gamma) * s - lnE8 - std::log1p(r));
    };
    // remainder of the integral beyond s, bounded by the pure-power majorant
    auto ln_remainder = [&](double s) {
        return (1.0 - gamma) * s - lnE8 - std::log(gamma - 1.0);
    };

    // the switch point starts at 1e3 x the largest intrinsic scale of psi
    double s_cut = std::log(phi0);
    if (E9 > 0.0) s_cut = std::max(s_cut, ln_q9 / mu);
    if (E5 > 0.0) s_cut = std::max(s_cut, ln_q5 / gamma);
    s_cut += std::log(1e3);

    const QuadResult head = integrate_adaptive(g, std::log(phi0), s_cut, 1e-11, 56);

    // extend until the certified remainder is negligible against the running
    // total; [0, rem] is the tail sandwich (the integrand is positive)
    double total = head.value;
    double err = head.error;
    double s_end = s_cut;
    double rem = std::exp(ln_remainder(s_end));
    for (int pass = 0; pass < 64 && rem > 1e-11 * total; ++pass) {
        const double target =
            (std::log(1.0 / (1e-11 * total)) - lnE8 - std::log(gamma - 1.0)) / (gamma - 1.0);
        const double s_next = std::max(target, s_end + 1.0);
        const QuadResult ext = integrate_adaptive(g, s_end, s_next, 1e-11, 56);
        total += ext.value;
        err += ext.error;
        s_end = s_next;
        rem = std::exp(ln_remainder(s_end));
    }

    OsgoodResult r;
    r.value = total + 0.5 * rem;
    r.error = err + 0.5 * rem;
    r.tail_cut = s_end > 700.0 ? std::numeric_limits<double>::max() : std::exp(s_end);
    return r;
}

double explicit_lower_bound(double E8, double E9, double E10, double gamma, double delta,
                            double pbar, double phi0) {
    if (!(gamma > 1.0)) throw std::domain_error("explicit bound: gamma must exceed 1");
    if (!(phi0 > 0.0)) throw std::domain_error("explicit bound: phi0 must be positive");
    const double H = E8 + E9 * std::pow(phi0, delta - gamma) +
                     E10 * std::pow(phi0, 1.0 / pbar - gamma);
    return std::pow(phi0, 1.0 - gamma) / (H * (gamma - 1.0));
}

}  // namespace chemobound
