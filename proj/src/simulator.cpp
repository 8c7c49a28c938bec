#include "chemobound/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chemobound/fields.hpp"

namespace chemobound {

namespace {

// pow with the exponents this model actually hits (0, 1/2, 1, -1/2) special
// cased; the step and dt loops evaluate it per face per step.
inline double fpow(double x, double e) {
    if (e == 0.0) return 1.0;
    if (e == 1.0) return x;
    if (e == 0.5) return std::sqrt(x);
    if (e == -0.5) return 1.0 / std::sqrt(x);
    if (e == -1.0) return 1.0 / x;
    return std::pow(x, e);
}

}  // namespace

PoissonSolution solve_poisson(std::span<const double> u, double M, const RadialGrid& grid) {
    const int N = grid.cells;
    const double mean = field_mass(u, grid) / grid.total_measure;
    const double mscale = std::max(std::abs(M), std::numeric_limits<double>::min());
    if (std::abs(mean - M) > 1e-10 * mscale)
        throw std::invalid_argument("poisson: source mean incompatible with M");

    PoissonSolution sol;
    sol.v.assign(N, 0.0);
    sol.vr_face.assign(N + 1, 0.0);

    const double S = grid.geom.sphere_area();
    double flux = 0.0;  // r^{n-1} v_r at the running face
    for (int f = 1; f <= N; ++f) {
        flux += (M - u[f - 1]) * grid.mu[f - 1] / S;
        sol.vr_face[f] = flux / (grid.face_area[f] / S);
    }
    sol.boundary_residual = std::abs(sol.vr_face[N]);

    // v_r at face f is the exact midpoint of centers f-1, f
    for (int i = 1; i < N; ++i) sol.v[i] = sol.v[i - 1] + grid.h * sol.vr_face[i];
    const double vmean = field_mass(sol.v, grid) / grid.total_measure;
    for (auto& x : sol.v) x -= vmean;
    return sol;
}

RadialState initial_state(const Problem& prob, const RadialGrid& grid) {
    RadialState s;
    s.u.resize(grid.cells);
    for (int i = 0; i < grid.cells; ++i)
        s.u[i] = std::max(0.0, prob.u0(grid.center_r[i], grid.geom.radius));
    const double mean = field_mass(s.u, grid) / grid.total_measure;
    if (!(mean > 0.0)) throw std::invalid_argument("initial state: zero sampled mass");
    PoissonSolution p = solve_poisson(s.u, mean, grid);
    s.v = std::move(p.v);
    s.vr_face = std::move(p.vr_face);
    return s;
}

double adaptive_dt(const RadialState& s, const Problem& prob, const RadialGrid& grid, double cfl) {
    const int N = grid.cells;
    const double em1 = prob.m1 - 1.0;
    const double em2 = prob.m2 - 2.0;

    double dmax = 0.0;
    for (int i = 0; i < N; ++i) dmax = std::max(dmax, fpow(s.u[i] + prob.alpha, em1));
    double dt = grid.h * grid.h / (2.0 * dmax);

    double speed = 0.0;
    for (int f = 1; f < N; ++f) {
        const double uf = 0.5 * (s.u[f - 1] + s.u[f]);
        speed = std::max(speed, prob.chi * fpow(uf + prob.alpha, em2) * std::abs(s.vr_face[f]));
    }
    if (speed > 0.0) dt = std::min(dt, grid.h / speed);
    return cfl * dt;
}

StepOutcome step(RadialState& s, double dt, const Problem& prob, const RadialGrid& grid) {
    const int N = grid.cells;
    const double h = grid.h;
    const double em1 = prob.m1 - 1.0;
    const double em2 = prob.m2 - 2.0;
    const double alpha = prob.alpha;
    const double chi = prob.chi;

    static thread_local std::vector<double> flux;
    flux.assign(N + 1, 0.0);
    for (int f = 1; f < N; ++f) {
        const double ul = s.u[f - 1];
        const double ur = s.u[f];
        const double diff = fpow(0.5 * (ul + ur) + alpha, em1) * (ur - ul) / h;
        const double w = s.vr_face[f];
        const double up = w > 0.0 ? ul * fpow(ul + alpha, em2) : ur * fpow(ur + alpha, em2);
        flux[f] = diff - chi * up * w;
    }

    static thread_local std::vector<double> unew;
    unew.resize(N);
    double clamped = 0.0;
    bool finite = true;
    for (int i = 0; i < N; ++i) {
        double val = s.u[i] +
                     dt * (grid.face_area[i + 1] * flux[i + 1] - grid.face_area[i] * flux[i]) /
                         grid.mu[i];
        if (!std::isfinite(val)) finite = false;
        if (val < 0.0) {
            clamped += -val * grid.mu[i];
            val = 0.0;
        }
        unew[i] = val;
    }
    if (!finite) return {false, 0.0};

    s.u.swap(unew);
    const double mean = field_mass(s.u, grid) / grid.total_measure;
    PoissonSolution p = solve_poisson(s.u, mean, grid);
    s.v = std::move(p.v);
    s.vr_face = std::move(p.vr_face);
    s.t += dt;
    s.dt_last = dt;
    return {true, clamped};
}

SimTrace run(const Problem& prob, const RadialGrid& grid, const RunOptions& opts) {
    RadialState s = initial_state(prob, grid);
    const double mass0 = field_mass(s.u, grid);

    std::vector<double> ladder = opts.threshold_ladder;
    std::sort(ladder.begin(), ladder.end());
    const double stop_threshold =
        ladder.empty() ? opts.u_linf_threshold
                       : std::max(opts.u_linf_threshold, ladder.back());

    SimTrace trace;
    double clamped_cum = 0.0;
    double last_recorded_t = -1.0;
    auto record = [&](const RadialState& st, double dt) {
        if (st.t == last_recorded_t) return;
        trace.rows.push_back(
            make_trace_row(st.u, st.v, st.vr_face, grid, opts.row, st.t, dt, clamped_cum));
        last_recorded_t = st.t;
        const double vmax = field_linf(st.v);
        if (vmax > 0.0)
            trace.vmean_rel_max =
                std::max(trace.vmean_rel_max, std::abs(trace.rows.back().vmean) / vmax);
    };
    record(s, 0.0);

    std::size_t rung = 0;
    {
        const double linf0 = field_linf(s.u);
        while (rung < ladder.size() && linf0 >= ladder[rung]) ++rung;
    }

    std::vector<double> checkpoints = opts.checkpoint_times;
    std::sort(checkpoints.begin(), checkpoints.end());
    std::size_t next_checkpoint = 0;
    auto snapshot_due = [&](const RadialState& st) {
        while (next_checkpoint < checkpoints.size() && st.t >= checkpoints[next_checkpoint]) {
            trace.snapshots.push_back({st.t, st.u, st.v});
            ++next_checkpoint;
        }
    };
    snapshot_due(s);

    RadialState prev = s;
    long long steps = 0;
    for (;;) {
        if (s.t >= opts.t_end) {
            trace.verdict = Verdict::reached_t_end;
            trace.t_final = s.t;
            break;
        }
        if (steps >= opts.max_steps) {
            trace.verdict = Verdict::step_budget;
            trace.t_final = s.t;
            break;
        }
        const double dt_cfl = adaptive_dt(s, prob, grid, opts.cfl);
        if (dt_cfl < opts.dt_floor) {
            trace.verdict = Verdict::dt_floor;
            trace.t_final = s.t;
            break;
        }
        const double dt = std::min({dt_cfl, opts.dt_max, opts.t_end - s.t});

        prev = s;
        const StepOutcome out = step(s, dt, prob, grid);
        ++steps;
        if (!out.finite) {
            // overflow inside the step: report blow-up at the last finite time
            s = prev;
            trace.verdict = Verdict::blowup_threshold;
            trace.t_final = s.t;
            break;
        }
        clamped_cum += out.clamped_mass;
        snapshot_due(s);

        const double linf = field_linf(s.u);
        bool crossed = false;
        while (rung < ladder.size() && linf >= ladder[rung]) {
            trace.crossings.push_back({ladder[rung], s.t});
            ++rung;
            crossed = true;
        }
        if (crossed) record(s, dt);
        if (linf >= stop_threshold) {
            trace.verdict = Verdict::blowup_threshold;
            trace.t_final = s.t;
            break;
        }
        if (steps % opts.stride == 0) record(s, dt);
    }

    record(s, s.dt_last);
    trace.steps = steps;
    trace.clamped_mass_total = clamped_cum;
    trace.unreliable = clamped_cum > 1e-8 * mass0;
    return trace;
}

}  // namespace chemobound
