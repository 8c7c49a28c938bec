#pragma once

#include <vector>

#include "chemobound/constants.hpp"
#include "chemobound/simulator.hpp"
#include "chemobound/trace.hpp"

namespace chemobound {

/// Rows for a raw state sequence, one per state; the same quadrature the
/// simulator applies while recording (states carry no dt or clamp ledger, so
/// those columns are zero).
std::vector<TraceRow> energy_series(std::span<const RadialState> states, const RadialGrid& grid,
                                    const RowSpec& spec);

/// Finite-difference audit of one recording interval: how closely the energy
/// derivative tracks the identity, and with how much margin it sits below the
/// two one-sided estimates.
struct IntervalDiag {
    double t_mid = 0;
    double dphi_dt = 0;
    double identity_rhs = 0;   // -E0 grad + E1 pw1 - E2 pw2 + E3 pw3 + E4
    double residual = 0;       // dphi_dt - identity_rhs
    double rel_residual = 0;   // |residual| / |identity_rhs|
    double ph_margin = 0;      // (-E0 grad + E1 pw1 + E5) - dphi_dt
    double odi_margin = 0;     // (E8 phi^gamma + E9 phi^delta + E5) - dphi_dt
    double tol = 0;            // 3x the measured identity residual
};

/// Row quantities are averaged over the interval endpoints; dphi/dt is the
/// forward difference at the recording stride. The margin tolerance is tied
/// to the identity residual, the measured discretization floor of the trace.
std::vector<IntervalDiag> interval_diagnostics(const std::vector<TraceRow>& rows,
                                               const EnergyConstants& en, const OdiConstants& odi,
                                               const ExponentSet& exps);

struct LadderCheck {
    bool applicable = false;
    bool strictly_increasing = false;
    double growth = 0;  // last rung lp0 / first rung lp0
    bool pass = false;
    std::vector<std::pair<double, double>> lp0_at_crossings;  // (threshold, lp0)
};

/// Divergence signature check: the L^{p0} norm sampled at the ladder
/// crossings must increase strictly and grow by at least growth_factor.
LadderCheck lp_blowup_check(const SimTrace& trace, double growth_factor = 2.0);

struct ReplayCheck {
    bool applicable = false;
    double max_phi = 0;
    double max_lp0 = 0;
    double L1 = 0;
    bool pass = false;
};

/// Comparison-path replay: when the L^{p0} norm stayed at or below lp.L over
/// the whole trace, the energy must have stayed at or below L1.
ReplayCheck lp_apriori_replay(const SimTrace& trace, const LpPathConstants& lp);

}  // namespace chemobound
