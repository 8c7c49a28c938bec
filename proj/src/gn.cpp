#include "chemobound/gn.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "chemobound/fields.hpp"
#include "chemobound/rng.hpp"

namespace chemobound {

std::array<GnUseCase, 3> gn_use_cases(const ExponentSet& e, double m1, double p0) {
    const double p = e.pbar;
    const double s1 = p + m1 - 1.0;
    return {
        GnUseCase{"p_power", 2.0 / s1, 2.0 / s1, 2.0 * p / s1, e.a1},
        GnUseCase{"k_power_lp", 2.0 * p0 / s1, 2.0 / s1, e.k, e.a2},
        GnUseCase{"k_power_closing", 2.0 * p / s1, 2.0 * p / s1, e.k, e.a3},
    };
}

namespace {

// Two sample families: exp of a random cosine series (oscillatory, sign-free)
// and offset concentric bumps (sharp concentration, the shape the estimates
// meet near collapse). Amplitudes span several decades.
void sample_profile(Rng& rng, const RadialGrid& g, int index, std::vector<double>& w) {
    const double R = g.geom.radius;
    w.resize(g.cells);
    if (index % 2 == 0) {
        constexpr int modes = 8;
        double coef[modes + 1];
        for (int j = 0; j <= modes; ++j) coef[j] = rng.uniform(-1.0, 1.0);
        const double gain = rng.uniform(0.5, 2.5);
        for (int i = 0; i < g.cells; ++i) {
            const double r = g.center_r[i];
            double s = coef[0];
            for (int j = 1; j <= modes; ++j)
                s += coef[j] * std::cos(j * 3.14159265358979323846 * r / R);
            w[i] = std::exp(gain * s);
        }
    } else {
        const double base = rng.log_uniform(1e-3, 1.0);
        const double amp = rng.log_uniform(0.1, 1e3);
        const double width = rng.log_uniform(0.02 * R, 0.5 * R);
        const double center = rng.uniform(0.0, 0.3 * R);
        for (int i = 0; i < g.cells; ++i) {
            const double z = (g.center_r[i] - center) / width;
            w[i] = base + amp * std::exp(-z * z);
        }
    }
}

double ratio_for(const std::vector<double>& w, const RadialGrid& g, const GnUseCase& uc) {
    const double num = field_lp_norm(w, g, uc.p);
    const double grad = std::sqrt(field_gradient_energy(w, g, 1.0, 0.0));
    const double nq = field_lp_norm(w, g, uc.q);
    const double ns = field_lp_norm(w, g, uc.s);
    const double den = std::pow(grad, uc.a) * std::pow(nq, 1.0 - uc.a) + ns;
    return den > 0.0 ? num / den : 0.0;
}

}  // namespace

GnReport gn_observed_max(const DomainGeometry& geom, const ExponentSet& e, double m1, double p0,
                         const GnOptions& opts) {
    const auto cases = gn_use_cases(e, m1, p0);
    const RadialGrid g = build_grid(geom, opts.grid_cells);

    GnReport rep;
    rep.samples = opts.samples;
    rep.seed = opts.seed;
    Rng rng(opts.seed);
    std::vector<double> w;
    for (int s = 0; s < opts.samples; ++s) {
        sample_profile(rng, g, s, w);
        for (std::size_t c = 0; c < cases.size(); ++c)
            rep.per_case_max[c] = std::max(rep.per_case_max[c], ratio_for(w, g, cases[c]));
    }
    rep.observed_max = *std::max_element(rep.per_case_max.begin(), rep.per_case_max.end());
    return rep;
}

GnReport gn_validate(double cgn, const DomainGeometry& geom, const ExponentSet& e, double m1,
                     double p0, const GnOptions& opts) {
    GnReport rep = gn_observed_max(geom, e, m1, p0, opts);
    rep.cgn = cgn;
    rep.pass = cgn > rep.observed_max;
    return rep;
}

double gn_default_cgn(const DomainGeometry& geom, const ExponentSet& e, double m1, double p0,
                      const GnOptions& opts) {
    return 2.0 * gn_observed_max(geom, e, m1, p0, opts).observed_max;
}

}  // namespace chemobound
