#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "chemobound/grid.hpp"

namespace chemobound {

/// One recorded observation of a run. Column order is the CSV contract:
/// t, dt, linf, lp0, phi, grad_term, pw1, pw2, pw3, mass, vmean,
/// crossdiff_q1, clamped_mass_cum.
struct TraceRow {
    double t = 0;
    double dt = 0;
    double linf = 0;
    double lp0 = 0;
    double phi = 0;
    double grad_term = 0;
    double pw1 = 0;  // integral of (u+alpha)^{p+m2-1}
    double pw2 = 0;  // ... ^{p+m2-2}
    double pw3 = 0;  // ... ^{p+m2-3}
    double mass = 0;
    double vmean = 0;
    double crossdiff_q1 = 0;
    double clamped_mass_cum = 0;
};

/// Exponents a row is evaluated with; shared by the simulator and any
/// post-processing so both sides quadrate identically.
struct RowSpec {
    double pbar = 0, p0 = 0, q1 = 0;
    double m1 = 0, m2 = 0, alpha = 0;
};

TraceRow make_trace_row(std::span<const double> u, std::span<const double> v,
                        std::span<const double> vr_face, const RadialGrid& grid,
                        const RowSpec& spec, double t, double dt, double clamped_mass_cum);

enum class Verdict { reached_t_end, blowup_threshold, dt_floor, step_budget };

std::string verdict_name(Verdict v);

struct ThresholdCrossing {
    double threshold = 0;
    double t = 0;
};

struct StateSnapshot {
    double t = 0;  // first discrete time at or past the requested checkpoint
    std::vector<double> u, v;
};

struct SimTrace {
    std::vector<TraceRow> rows;
    Verdict verdict = Verdict::reached_t_end;
    double t_final = 0;  // crossing time for blow-up, stall time for dt_floor
    std::vector<ThresholdCrossing> crossings;
    std::vector<StateSnapshot> snapshots;
    double clamped_mass_total = 0;
    bool unreliable = false;      // cumulative clamped mass above 1e-8 * M|Omega|
    double vmean_rel_max = 0;     // max |mean v| / max|v| over recorded states
    long long steps = 0;
};

/// Field snapshot as CSV with columns r,u,v (one row per cell).
void write_snapshot_csv(std::ostream& os, const RadialGrid& grid, const StateSnapshot& snap);

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows);

/// Strict parse of the pinned column set; throws std::runtime_error on any
/// header or shape mismatch.
std::vector<TraceRow> parse_trace_csv(std::istream& is);

}  // namespace chemobound
