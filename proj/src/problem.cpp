#include "chemobound/problem.hpp"

#include <cmath>
#include <sstream>

namespace chemobound {

BlowupCheck validate_blowup_restrictions(double m1, double m2, int n) {
    BlowupCheck r;
    if (!(m2 > m1 + 2.0 / n)) r.violations.push_back("m2>m1+2/n");
    if (!(m1 <= 1.0)) r.violations.push_back("m1<=1");
    if (!(m2 > 1.0)) r.violations.push_back("m2>1");
    r.ok = r.violations.empty();
    return r;
}

FreeParameters default_free_parameters(double m1, double m2, int n) {
    return FreeParameters{0.5 * n * (m2 - m1) + 1.0, static_cast<double>(n) + 3.0,
                          0.5 * (n + 2) + 1.0};
}

Problem Problem::validated(DomainGeometry geom, double m1, double m2, double alpha, double chi,
                           InitialData u0, double p0, double q1, double q2, double cgn) {
    std::vector<std::string> violations;

    const BlowupCheck bu = validate_blowup_restrictions(m1, m2, geom.dim);
    violations.insert(violations.end(), bu.violations.begin(), bu.violations.end());
    if (!(alpha > 0.0)) violations.push_back("alpha>0");
    if (!(chi > 0.0)) violations.push_back("chi>0");

    const FreeParameters def = default_free_parameters(m1, m2, geom.dim);
    Problem prob;
    prob.geom = geom;
    prob.m1 = m1;
    prob.m2 = m2;
    prob.alpha = alpha;
    prob.chi = chi;
    prob.u0 = std::move(u0);
    prob.p0 = p0 > 0.0 ? p0 : def.p0;
    prob.q1 = q1 > 0.0 ? q1 : def.q1;
    prob.q2 = q2 > 0.0 ? q2 : def.q2;
    prob.cgn = cgn;
    prob.cgn_provenance = cgn > 0.0 ? CgnProvenance::user : CgnProvenance::calibrated;

    const int n = geom.dim;
    if (!(prob.p0 > 0.5 * n * (m2 - m1))) violations.push_back("p0>(n/2)(m2-m1)");
    if (!(prob.q1 > n + 2)) violations.push_back("q1>n+2");
    if (!(prob.q2 > 0.5 * (n + 2))) violations.push_back("q2>(n+2)/2");

    try {
        prob.mass_mean = mean_mass(prob.u0, geom);
    } catch (const std::invalid_argument& e) {
        violations.push_back(e.what());
    }
    if (violations.empty() && !(prob.mass_mean > 0.0)) violations.push_back("M>0");

    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "invalid problem:";
        for (const auto& v : violations) msg << " [" << v << "]";
        throw SpecError(msg.str(), std::move(violations));
    }
    return prob;
}

}  // namespace chemobound
