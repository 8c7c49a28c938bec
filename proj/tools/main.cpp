// chemobound: evaluates the analytic blow-up-time lower bound for the
// radial nonlinear-diffusion chemotaxis model, simulates the system to
// blow-up, and cross-checks every estimate the bound rests on against the
// recorded trace.
//
// Subcommands:
//   bound <run.cfg>     constants + bound report (constants.json)
//   simulate <run.cfg>  time integration -> trace.csv + run.json
//   verify <run.cfg>    bound + simulation + full check list -> report, plots
//   report <trace.csv>  summarize an existing trace
//
// Exit codes: 0 ok, 1 verification failure, 2 config/spec error,
// 3 interpolation-constant calibration failure.

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include "chemobound/cascade.hpp"
#include "chemobound/config.hpp"
#include "chemobound/diagnostics.hpp"
#include "chemobound/report.hpp"
#include "chemobound/simulator.hpp"
#include "chemobound/svg.hpp"

namespace cb = chemobound;

namespace {

struct CheckResult {
    std::string name;
    int state = 0;  // 1 pass, 0 fail, -1 not applicable
    std::string detail;
};

std::string g17(double v) { return cb::JsonWriter::format_double(v); }

cb::GnOptions gn_options(const cb::RunConfig& rc) {
    cb::GnOptions o;
    o.samples = rc.gn_samples;
    o.grid_cells = rc.gn_grid;
    o.seed = rc.seed;
    return o;
}

cb::RunOptions run_options(const cb::RunConfig& rc, const cb::Cascade& c) {
    cb::RunOptions o;
    o.t_end = rc.t_end;
    o.u_linf_threshold = rc.u_linf_threshold;
    o.threshold_ladder = rc.threshold_ladder;
    o.dt_floor = rc.dt_floor;
    o.dt_max = rc.dt_max;
    o.max_steps = rc.max_steps;
    o.stride = rc.stride;
    o.cfl = rc.cfl;
    o.row = cb::RowSpec{c.exps.pbar, rc.problem.p0, rc.problem.q1,
                        rc.problem.m1, rc.problem.m2, rc.problem.alpha};
    o.checkpoint_times = rc.checkpoint_times;
    return o;
}

void write_snapshots(const std::filesystem::path& outdir, const cb::RadialGrid& grid,
                     const cb::SimTrace& trace) {
    for (std::size_t i = 0; i < trace.snapshots.size(); ++i) {
        std::ofstream os(outdir / ("checkpoint_" + std::to_string(i) + ".csv"));
        cb::write_snapshot_csv(os, grid, trace.snapshots[i]);
    }
}

void write_run_sidecar(std::ostream& os, const cb::RunConfig& rc, const cb::SimTrace& trace,
                       int grid_cells) {
    cb::JsonWriter j(os);
    j.begin_object();
    j.kv("schema", "chemobound-run-v1");
    j.kv("N", static_cast<long long>(grid_cells));
    j.kv("cfl", rc.cfl);
    j.kv("stride", static_cast<long long>(rc.stride));
    j.kv("seed", static_cast<long long>(rc.seed));
    j.kv("verdict", cb::verdict_name(trace.verdict));
    j.kv("t_final", trace.t_final);
    j.key("crossings").begin_array();
    for (const auto& cr : trace.crossings) {
        j.begin_object();
        j.kv("threshold", cr.threshold);
        j.kv("t", cr.t);
        j.end_object();
    }
    j.end_array();
    j.kv("steps", trace.steps);
    j.kv("rows", static_cast<long long>(trace.rows.size()));
    j.key("checkpoints").begin_array();
    for (std::size_t i = 0; i < trace.snapshots.size(); ++i) {
        j.begin_object();
        j.kv("t", trace.snapshots[i].t);
        j.kv("file", "checkpoint_" + std::to_string(i) + ".csv");
        j.end_object();
    }
    j.end_array();
    j.kv("clamped_mass_total", trace.clamped_mass_total);
    j.kv("unreliable", trace.unreliable);
    j.kv("vmean_rel_max", trace.vmean_rel_max);
    j.end_object();
    os << '\n';
}

double smooth_residual_max(const std::vector<cb::IntervalDiag>& diags,
                           const std::vector<cb::TraceRow>& rows, double cap, int* count) {
    double worst = 0.0;
    int n = 0;
    for (std::size_t k = 0; k + 1 < rows.size() && k < diags.size(); ++k) {
        if (rows[k + 1].linf > cap) break;
        worst = std::max(worst, diags[k].rel_residual);
        ++n;
    }
    if (count) *count = n;
    return worst;
}

// majorant curve for the phi plot: integrates dPhi/dt = E8 Phi^g + E9 Phi^d + E5
cb::Series ode_envelope(const cb::Cascade& c, double phi_start, double t0, double t_max,
                        double phi_cap) {
    cb::Series s;
    s.label = "scalar ODI envelope";
    double t = t0, phi = phi_start;
    for (int i = 0; i < 20000 && t <= t_max && phi <= phi_cap; ++i) {
        s.x.push_back(t);
        s.y.push_back(phi);
        const double rate = c.odi.E8 * std::pow(phi, c.exps.gamma) +
                            c.odi.E9 * std::pow(phi, c.exps.delta) + c.en.E5;
        const double dt = std::min(0.02 * phi / rate, (t_max - t0) / 500.0);
        phi += dt * rate;
        t += dt;
    }
    return s;
}

int cmd_bound(const std::string& cfg_path) {
    const cb::RunConfig rc = cb::load_run_config(cfg_path);
    const cb::Cascade c = cb::build_cascade(rc.problem, gn_options(rc), rc.L_hypothetical);

    std::filesystem::create_directories(rc.outdir);
    std::ofstream out(std::filesystem::path(rc.outdir) / "constants.json");
    cb::write_constants_report(out, c);

    std::cout << "pbar       = " << g17(c.exps.pbar) << "\n"
              << "gamma      = " << g17(c.exps.gamma) << "\n"
              << "delta      = " << g17(c.exps.delta) << "\n"
              << "phi0       = " << g17(c.phi0) << "\n"
              << "T_osgood   = " << g17(c.t_osgood.value) << " +/- " << g17(c.t_osgood.error)
              << "  (conservative " << g17(c.t_osgood.value - c.t_osgood.error) << ")\n"
              << "T_explicit = " << g17(c.t_explicit) << "\n"
              << "report: " << (std::filesystem::path(rc.outdir) / "constants.json").string()
              << "\n";
    return 0;
}

int cmd_simulate(const std::string& cfg_path) {
    const cb::RunConfig rc = cb::load_run_config(cfg_path);
    const double pbar = cb::compute_pbar(rc.problem.m1, rc.problem.m2, rc.problem.geom.dim,
                                         rc.problem.p0, rc.problem.q1, rc.problem.q2);
    cb::Cascade shim;  // only the row exponents are needed here
    shim.exps = cb::compute_exponents(rc.problem.m1, rc.problem.m2, rc.problem.geom.dim,
                                      rc.problem.p0, pbar);

    const cb::RadialGrid grid = cb::build_grid(rc.problem.geom, rc.grid_cells);
    const cb::SimTrace trace = cb::run(rc.problem, grid, run_options(rc, shim));

    std::filesystem::create_directories(rc.outdir);
    {
        std::ofstream csv(std::filesystem::path(rc.outdir) / "trace.csv");
        cb::write_trace_csv(csv, trace.rows);
    }
    {
        std::ofstream js(std::filesystem::path(rc.outdir) / "run.json");
        write_run_sidecar(js, rc, trace, rc.grid_cells);
    }
    write_snapshots(rc.outdir, grid, trace);

    std::cout << "verdict = " << cb::verdict_name(trace.verdict) << " at t = " << g17(trace.t_final)
              << " after " << trace.steps << " steps (" << trace.rows.size() << " rows)\n";
    for (const auto& cr : trace.crossings)
        std::cout << "  linf >= " << g17(cr.threshold) << " at t = " << g17(cr.t) << "\n";
    if (trace.unreliable)
        std::cout << "  WARNING: cumulative clamped mass " << g17(trace.clamped_mass_total)
                  << " exceeds the reliability budget\n";
    return 0;
}

int cmd_verify(const std::string& cfg_path) {
    const cb::RunConfig rc = cb::load_run_config(cfg_path);
    const cb::Cascade c = cb::build_cascade(rc.problem, gn_options(rc), rc.L_hypothetical);

    const cb::RunOptions opts = run_options(rc, c);
    const cb::RadialGrid grid = cb::build_grid(rc.problem.geom, rc.grid_cells);

    std::optional<cb::SimTrace> coarse_trace;
    std::future<cb::SimTrace> coarse_future;
    if (rc.refine_check && rc.grid_cells / 2 >= 8) {
        coarse_future = std::async(std::launch::async, [&]() {
            const cb::RadialGrid g2 = cb::build_grid(rc.problem.geom, rc.grid_cells / 2);
            return cb::run(rc.problem, g2, opts);
        });
    }
    const cb::SimTrace trace = cb::run(rc.problem, grid, opts);
    if (coarse_future.valid()) coarse_trace = coarse_future.get();

    const auto diags = cb::interval_diagnostics(trace.rows, c.en, c.odi, c.exps);

    std::vector<CheckResult> checks;
    auto push = [&](const std::string& name, int state, const std::string& detail) {
        checks.push_back({name, state, detail});
    };

    {
        double drift = 0.0;
        const double m0 = trace.rows.front().mass;
        for (const auto& r : trace.rows) drift = std::max(drift, std::abs(r.mass - m0));
        const double rel = drift / m0;
        push("mass_conservation", rel <= 1e-10 ? 1 : 0, "max relative drift " + g17(rel));
    }
    push("v_zero_mean", trace.vmean_rel_max <= 1e-10 ? 1 : 0,
         "max |mean v| / max|v| = " + g17(trace.vmean_rel_max));

    const double smooth_cap = rc.smooth_linf_factor * trace.rows.front().linf;
    int smooth_n = 0;
    const double res_fine = smooth_residual_max(diags, trace.rows, smooth_cap, &smooth_n);
    if (smooth_n >= 3)
        push("identity_residual_smooth", res_fine <= 0.05 ? 1 : 0,
             "max relative residual " + g17(res_fine) + " over " + std::to_string(smooth_n) +
                 " intervals");
    else
        push("identity_residual_smooth", -1, "fewer than 3 smooth intervals");

    if (coarse_trace) {
        const auto diags2 = cb::interval_diagnostics(coarse_trace->rows, c.en, c.odi, c.exps);
        int n2 = 0;
        const double res_coarse =
            smooth_residual_max(diags2, coarse_trace->rows, smooth_cap, &n2);
        if (smooth_n >= 3 && n2 >= 3)
            push("identity_residual_refinement", res_fine <= res_coarse ? 1 : 0,
                 "fine " + g17(res_fine) + " vs coarse " + g17(res_coarse));
        else
            push("identity_residual_refinement", -1, "not enough smooth intervals");
    } else {
        push("identity_residual_refinement", -1, "refinement run disabled");
    }

    {
        double worst_ph = 0.0, worst_odi = 0.0;
        bool ok_ph = true, ok_odi = true;
        for (const auto& d : diags) {
            if (d.ph_margin < -d.tol) ok_ph = false;
            if (d.odi_margin < -d.tol) ok_odi = false;
            worst_ph = std::min(worst_ph, d.ph_margin + d.tol);
            worst_odi = std::min(worst_odi, d.odi_margin + d.tol);
        }
        push("energy_inequality_margin", ok_ph ? 1 : 0, "min(margin+tol) " + g17(worst_ph));
        push("odi_margin", ok_odi ? 1 : 0, "min(margin+tol) " + g17(worst_odi));
    }

    const cb::LadderCheck ladder = cb::lp_blowup_check(trace, rc.growth_factor);
    if (ladder.applicable)
        push("lp_divergence_ladder", ladder.pass ? 1 : 0,
             std::string(ladder.strictly_increasing ? "strictly increasing" : "NOT increasing") +
                 ", growth " + g17(ladder.growth));
    else
        push("lp_divergence_ladder", -1, "run did not end by threshold");

    if (trace.verdict == cb::Verdict::blowup_threshold) {
        const double t_cross = trace.t_final;
        const bool ok = c.t_osgood.value <= t_cross && c.t_explicit <= t_cross;
        push("bound_below_crossing", ok ? 1 : 0,
             "T_osgood " + g17(c.t_osgood.value) + ", T_explicit " + g17(c.t_explicit) +
                 ", t_cross " + g17(t_cross));
    } else {
        push("bound_below_crossing", -1, "no blow-up verdict");
    }

    push("bound_ordering", c.t_explicit <= c.t_osgood.value + c.t_osgood.error ? 1 : 0,
         "T_explicit " + g17(c.t_explicit) + " vs T_osgood+err " +
             g17(c.t_osgood.value + c.t_osgood.error));

    if (trace.verdict == cb::Verdict::reached_t_end) {
        double max_lp0 = 0.0;
        for (const auto& r : trace.rows) max_lp0 = std::max(max_lp0, r.lp0);
        const cb::LpPathConstants lp_replay = cb::compute_lp_path_constants(
            c.prob, c.exps, c.en, c.odi, 1.01 * max_lp0, c.phi0);
        const cb::ReplayCheck replay = cb::lp_apriori_replay(trace, lp_replay);
        push("lp_apriori_replay", replay.pass ? 1 : 0,
             "max phi " + g17(replay.max_phi) + " vs L1 " + g17(replay.L1));
    } else {
        push("lp_apriori_replay", -1, "needs a bounded run");
    }

    if (trace.unreliable)
        push("clamped_mass_budget", 0, "clamped " + g17(trace.clamped_mass_total));
    else
        push("clamped_mass_budget", 1, "clamped " + g17(trace.clamped_mass_total));

    // outputs
    std::filesystem::create_directories(rc.outdir);
    {
        std::ofstream csv(std::filesystem::path(rc.outdir) / "trace.csv");
        cb::write_trace_csv(csv, trace.rows);
    }
    write_snapshots(rc.outdir, grid, trace);
    bool all_ok = true;
    for (const auto& ck : checks) all_ok = all_ok && ck.state != 0;
    {
        std::ofstream os(std::filesystem::path(rc.outdir) / "verify_report.json");
        cb::JsonWriter j(os);
        j.begin_object();
        j.kv("schema", "chemobound-verify-v1");
        j.kv("verdict", cb::verdict_name(trace.verdict));
        j.kv("t_final", trace.t_final);
        j.kv("N", static_cast<long long>(rc.grid_cells));
        j.kv("seed", static_cast<long long>(rc.seed));
        j.key("crossings").begin_array();
        for (const auto& cr : trace.crossings) {
            j.begin_object();
            j.kv("threshold", cr.threshold);
            j.kv("t", cr.t);
            j.end_object();
        }
        j.end_array();
        j.key("checks").begin_array();
        for (const auto& ck : checks) {
            j.begin_object();
            j.kv("name", ck.name);
            j.kv("status",
                 ck.state == 1 ? "pass" : (ck.state == 0 ? "fail" : "not_applicable"));
            j.kv("detail", ck.detail);
            j.end_object();
        }
        j.end_array();
        j.kv("overall_pass", all_ok);
        j.kv("T_osgood", c.t_osgood.value);
        j.kv("T_osgood_error", c.t_osgood.error);
        j.kv("T_explicit", c.t_explicit);
        j.kv("phi0", c.phi0);
        j.end_object();
        os << '\n';
    }
    {
        std::ofstream os(std::filesystem::path(rc.outdir) / "constants.json");
        cb::write_constants_report(os, c);
    }

    // plots
    {
        cb::Series s;
        s.label = "max u";
        for (const auto& r : trace.rows) {
            s.x.push_back(r.t);
            s.y.push_back(r.linf);
        }
        std::ofstream os(std::filesystem::path(rc.outdir) / "linf_vs_t.svg");
        cb::write_line_chart_svg(os, "sup-norm growth", "t", "max u (log)", {s}, true);
    }
    {
        cb::Series sp;
        sp.label = "phi(t)";
        double phimax = 0.0;
        for (const auto& r : trace.rows) {
            sp.x.push_back(r.t);
            sp.y.push_back(r.phi);
            phimax = std::max(phimax, r.phi);
        }
        const cb::Series env =
            ode_envelope(c, trace.rows.front().phi, trace.rows.front().t, trace.t_final,
                         10.0 * phimax);
        std::ofstream os(std::filesystem::path(rc.outdir) / "phi_odi.svg");
        cb::write_line_chart_svg(os, "energy vs scalar ODI envelope", "t", "phi (log)", {sp, env},
                                 true);
    }
    {
        cb::Series m1s, m2s, tols;
        m1s.label = "energy-inequality margin";
        m2s.label = "ODI margin";
        tols.label = "-tol";
        for (const auto& d : diags) {
            m1s.x.push_back(d.t_mid);
            m1s.y.push_back(d.ph_margin);
            m2s.x.push_back(d.t_mid);
            m2s.y.push_back(d.odi_margin);
            tols.x.push_back(d.t_mid);
            tols.y.push_back(-d.tol);
        }
        std::ofstream os(std::filesystem::path(rc.outdir) / "margins.svg");
        cb::write_line_chart_svg(os, "per-interval inequality margins", "t", "margin",
                                 {m1s, m2s, tols}, false);
    }

    for (const auto& ck : checks)
        std::cout << (ck.state == 1 ? "PASS " : (ck.state == 0 ? "FAIL " : "N/A  ")) << ck.name
                  << ": " << ck.detail << "\n";
    std::cout << (all_ok ? "verification OK" : "verification FAILED") << " (report in "
              << rc.outdir << ")\n";
    return all_ok ? 0 : 1;
}

int cmd_report(const std::string& csv_path) {
    std::ifstream in(csv_path);
    if (!in) {
        std::cerr << "cannot open " << csv_path << "\n";
        return 2;
    }
    const std::vector<cb::TraceRow> rows = cb::parse_trace_csv(in);
    if (rows.empty()) {
        std::cout << "empty trace\n";
        return 0;
    }
    double mass_drift = 0.0, vmean_max = 0.0, phimax = 0.0;
    for (const auto& r : rows) {
        mass_drift = std::max(mass_drift, std::abs(r.mass - rows.front().mass));
        vmean_max = std::max(vmean_max, std::abs(r.vmean));
        phimax = std::max(phimax, r.phi);
    }
    std::cout << "rows            = " << rows.size() << "\n"
              << "t range         = [" << g17(rows.front().t) << ", " << g17(rows.back().t)
              << "]\n"
              << "final linf      = " << g17(rows.back().linf) << "\n"
              << "max phi         = " << g17(phimax) << "\n"
              << "mass drift      = " << g17(mass_drift / rows.front().mass) << " (relative)\n"
              << "max |vmean|     = " << g17(vmean_max) << "\n"
              << "clamped mass    = " << g17(rows.back().clamped_mass_cum) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"blow-up time lower bounds and verification for a radial chemotaxis model"};
    app.require_subcommand(1);

    std::string cfg, csv;
    auto* bound = app.add_subcommand("bound", "compute the constant cascade and the lower bounds");
    bound->add_option("config", cfg, "run config file")->required();
    auto* simulate = app.add_subcommand("simulate", "integrate the system and write a trace");
    simulate->add_option("config", cfg, "run config file")->required();
    auto* verify = app.add_subcommand("verify", "bound + simulation + inequality checks");
    verify->add_option("config", cfg, "run config file")->required();
    auto* report = app.add_subcommand("report", "summarize a trace CSV");
    report->add_option("trace", csv, "trace.csv path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) return cmd_bound(cfg);
        if (simulate->parsed()) return cmd_simulate(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (report->parsed()) return cmd_report(csv);
    } catch (const cb::CalibrationError& e) {
        std::cerr << "calibration error: " << e.what() << "\n";
        return 3;
    } catch (const cb::SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        for (const auto& v : e.violations()) std::cerr << "  violated: " << v << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
