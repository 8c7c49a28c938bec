#include "chemobound/cascade.hpp"

#include <stdexcept>

namespace chemobound {

Cascade build_cascade(const Problem& prob, const GnOptions& gn_opts, double L_hypothetical) {
    Cascade c;
    c.prob = prob;

    c.branches = pbar_branches(prob.m1, prob.m2, prob.geom.dim, prob.p0, prob.q1, prob.q2);
    const double pbar = compute_pbar(prob.m1, prob.m2, prob.geom.dim, prob.p0, prob.q1, prob.q2);
    c.exps = compute_exponents(prob.m1, prob.m2, prob.geom.dim, prob.p0, pbar);
    c.relations = check_exponent_relations(c.exps, prob.m1, prob.m2, prob.geom.dim, prob.p0);
    if (!c.relations.all_pass)
        throw std::logic_error("cascade: exponent relations failed for a validated problem");

    if (!(c.prob.cgn > 0.0)) {
        c.prob.cgn = gn_default_cgn(prob.geom, c.exps, prob.m1, prob.p0, gn_opts);
        c.prob.cgn_provenance = CgnProvenance::calibrated;
    }
    c.gn = gn_validate(c.prob.cgn, prob.geom, c.exps, prob.m1, prob.p0, gn_opts);
    if (!c.gn.pass)
        throw CalibrationError("cascade: configured Cgn does not dominate the observed ratio");

    c.phi0 = initial_phi(prob.u0, prob.geom, c.exps.pbar, prob.alpha);
    c.en = compute_energy_constants(c.prob, c.exps.pbar);
    c.odi = compute_odi_constants(c.prob, c.exps, c.en, c.phi0);
    c.lp = compute_lp_path_constants(c.prob, c.exps, c.en, c.odi, L_hypothetical, c.phi0);

    c.t_osgood = osgood_lower_bound(c.odi.E8, c.odi.E9, c.en.E5, c.exps.gamma, c.exps.delta,
                                    c.phi0);
    c.t_explicit = explicit_lower_bound(c.odi.E8, c.odi.E9, c.odi.E10, c.exps.gamma, c.exps.delta,
                                        c.exps.pbar, c.phi0);
    return c;
}

}  // namespace chemobound
