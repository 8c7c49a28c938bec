#include "chemobound/diagnostics.hpp"

#include <algorithm>
#include <cmath>

namespace chemobound {

std::vector<TraceRow> energy_series(std::span<const RadialState> states, const RadialGrid& grid,
                                    const RowSpec& spec) {
    std::vector<TraceRow> rows;
    rows.reserve(states.size());
    for (const RadialState& s : states)
        rows.push_back(make_trace_row(s.u, s.v, s.vr_face, grid, spec, s.t, s.dt_last, 0.0));
    return rows;
}

std::vector<IntervalDiag> interval_diagnostics(const std::vector<TraceRow>& rows,
                                               const EnergyConstants& en, const OdiConstants& odi,
                                               const ExponentSet& exps) {
    std::vector<IntervalDiag> out;
    if (rows.size() < 2) return out;
    out.reserve(rows.size() - 1);
    for (std::size_t k = 0; k + 1 < rows.size(); ++k) {
        const TraceRow& a = rows[k];
        const TraceRow& b = rows[k + 1];
        const double dt = b.t - a.t;
        if (!(dt > 0.0)) continue;

        IntervalDiag d;
        d.t_mid = 0.5 * (a.t + b.t);
        d.dphi_dt = (b.phi - a.phi) / dt;

        const double grad = 0.5 * (a.grad_term + b.grad_term);
        const double pw1 = 0.5 * (a.pw1 + b.pw1);
        const double pw2 = 0.5 * (a.pw2 + b.pw2);
        const double pw3 = 0.5 * (a.pw3 + b.pw3);
        const double phi = 0.5 * (a.phi + b.phi);

        d.identity_rhs = -en.E0 * grad + en.E1 * pw1 - en.E2 * pw2 + en.E3 * pw3 + en.E4;
        d.residual = d.dphi_dt - d.identity_rhs;
        const double rhs_scale = std::max(std::abs(d.identity_rhs), 1e-300);
        d.rel_residual = std::abs(d.residual) / rhs_scale;

        d.ph_margin = (-en.E0 * grad + en.E1 * pw1 + en.E5) - d.dphi_dt;
        d.odi_margin = (odi.E8 * std::pow(phi, exps.gamma) + odi.E9 * std::pow(phi, exps.delta) +
                        en.E5) -
                       d.dphi_dt;
        d.tol = 3.0 * std::abs(d.residual) + 1e-12 * (std::abs(d.identity_rhs) + std::abs(d.dphi_dt));
        out.push_back(d);
    }
    return out;
}

LadderCheck lp_blowup_check(const SimTrace& trace, double growth_factor) {
    LadderCheck c;
    if (trace.verdict != Verdict::blowup_threshold || trace.crossings.size() < 2) return c;
    c.applicable = true;
    for (const auto& cross : trace.crossings) {
        // rows are recorded at every crossing, so an exact match exists;
        // fall back to the first row at or past the crossing time
        const TraceRow* hit = nullptr;
        for (const auto& r : trace.rows) {
            if (r.t >= cross.t) {
                hit = &r;
                break;
            }
        }
        if (hit) c.lp0_at_crossings.emplace_back(cross.threshold, hit->lp0);
    }
    c.strictly_increasing = true;
    for (std::size_t i = 1; i < c.lp0_at_crossings.size(); ++i)
        c.strictly_increasing =
            c.strictly_increasing && c.lp0_at_crossings[i].second > c.lp0_at_crossings[i - 1].second;
    if (c.lp0_at_crossings.size() >= 2 && c.lp0_at_crossings.front().second > 0.0)
        c.growth = c.lp0_at_crossings.back().second / c.lp0_at_crossings.front().second;
    c.pass = c.strictly_increasing && c.growth >= growth_factor;
    return c;
}

ReplayCheck lp_apriori_replay(const SimTrace& trace, const LpPathConstants& lp) {
    ReplayCheck c;
    for (const auto& r : trace.rows) {
        c.max_phi = std::max(c.max_phi, r.phi);
        c.max_lp0 = std::max(c.max_lp0, r.lp0);
    }
    c.L1 = lp.L1;
    c.applicable = c.max_lp0 <= lp.L;
    c.pass = c.applicable && c.max_phi <= lp.L1 * (1.0 + 1e-12);
    return c;
}

}  // namespace chemobound
