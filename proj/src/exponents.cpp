#include "chemobound/exponents.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace chemobound {

std::array<double, 9> pbar_branches(double m1, double m2, int n, double p0, double q1, double q2) {
    const double nn = static_cast<double>(n);
    const double d8 = q1 - (nn + 2.0);
    if (d8 == 0.0) throw std::domain_error("pbar: q1 = n+2 makes a branch singular");
    if (q2 == 1.0) throw std::domain_error("pbar: q2 = 1 makes a branch singular");
    const double d9 = 1.0 - (nn / (nn + 2.0)) * (q2 / (q2 - 1.0));
    if (d9 == 0.0) throw std::domain_error("pbar: q2 branch denominator is zero");
    return {
        p0,
        1.0 - m1,
        3.0 - m2,
        2.0 - m1 - 2.0 / nn,
        p0 - m2 + 1.0,
        q1,
        q1 * (m2 - 1.0),
        1.0 - m1 * ((nn + 1.0) * q1 - (nn + 2.0)) / d8,
        1.0 - m1 / d9,
    };
}

double compute_pbar(double m1, double m2, int n, double p0, double q1, double q2) {
    const auto b = pbar_branches(m1, m2, n, p0, q1, q2);
    return *std::max_element(b.begin(), b.end()) + 1.0;
}

ExponentSet compute_exponents(double m1, double m2, int n, double p0, double pbar) {
    const double p = pbar;
    const double nn = static_cast<double>(n);
    const double s1 = p + m1 - 1.0;  // the diffusion-shifted exponent
    const double s2 = p + m2 - 1.0;
    const double half_gap = 1.0 / nn - 0.5;

    ExponentSet e;
    e.pbar = p;
    e.k = 2.0 * s2 / s1;

    const double den1 = 0.5 * s1 + half_gap;
    const double den2 = s1 / (2.0 * p0) + half_gap;
    const double den3 = s1 / (2.0 * p) + half_gap;
    if (den1 <= 0.0 || den2 <= 0.0 || den3 <= 0.0)
        throw std::domain_error("exponents: nonpositive interpolation denominator");

    e.a1 = (0.5 * s1 * (1.0 - 1.0 / p)) / den1;
    e.a2 = (s1 / (2.0 * p0) - 1.0 / e.k) / den2;
    e.a3 = (s1 / (2.0 * p) - 1.0 / e.k) / den3;
    e.beta = e.k * e.a2 / 2.0;
    e.sigma = e.k * e.a3 / 2.0;
    e.delta = s2 / p;
    if (e.sigma >= 1.0) throw std::domain_error("exponents: sigma >= 1");
    e.gamma = e.delta * (1.0 - e.a3) / (1.0 - e.sigma);
    if (p * e.a1 <= 0.0) throw std::domain_error("exponents: p*a1 <= 0");
    e.lambda = s1 / (p * e.a1);
    return e;
}

namespace {

RelationCheck unit_interval(const std::string& name, double v) {
    return RelationCheck{name, v > 0.0 && v < 1.0, std::min(v, 1.0 - v)};
}

}  // namespace

RelationReport check_exponent_relations(const ExponentSet& e, double m1, double m2, int n,
                                        double p0) {
    (void)m2;
    (void)p0;
    const double nn = static_cast<double>(n);
    RelationReport rep;

    const double pr = e.pbar - 0.5 * nn * (1.0 - m1);
    rep.checks.push_back({"p_range", pr > 0.0, pr});
    rep.checks.push_back(unit_interval("a1_range", e.a1));
    rep.checks.push_back(unit_interval("beta_range", e.beta));
    const double kc = 1.0 / e.k - (0.5 - 1.0 / nn);
    rep.checks.push_back({"k_subcritical", kc > 0.0, kc});
    rep.checks.push_back(unit_interval("a2_range", e.a2));
    rep.checks.push_back(unit_interval("a3_range", e.a3));
    rep.checks.push_back(unit_interval("sigma_range", e.sigma));
    const double gd = std::min(e.gamma - e.delta, e.delta - 1.0);
    rep.checks.push_back({"gamma_delta_order", e.gamma > e.delta && e.delta > 1.0, gd});

    rep.all_pass = true;
    for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
    return rep;
}

}  // namespace chemobound
