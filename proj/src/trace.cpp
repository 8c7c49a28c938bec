#include "chemobound/trace.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "chemobound/fields.hpp"

namespace chemobound {

TraceRow make_trace_row(std::span<const double> u, std::span<const double> v,
                        std::span<const double> vr_face, const RadialGrid& grid,
                        const RowSpec& spec, double t, double dt, double clamped_mass_cum) {
    TraceRow r;
    r.t = t;
    r.dt = dt;
    r.linf = field_linf(u);
    r.lp0 = field_lp_norm(u, grid, spec.p0);
    r.phi = field_phi(u, grid, spec.pbar, spec.alpha);
    r.grad_term = field_gradient_energy(u, grid, 0.5 * (spec.pbar + spec.m1 - 1.0), spec.alpha);
    r.pw1 = field_power_integral(u, grid, spec.pbar + spec.m2 - 1.0, spec.alpha);
    r.pw2 = field_power_integral(u, grid, spec.pbar + spec.m2 - 2.0, spec.alpha);
    r.pw3 = field_power_integral(u, grid, spec.pbar + spec.m2 - 3.0, spec.alpha);
    r.mass = field_mass(u, grid);
    r.vmean = field_mass(v, grid) / grid.total_measure;
    r.crossdiff_q1 = field_crossdiff_norm(u, vr_face, grid, spec.m2, spec.alpha, spec.q1);
    r.clamped_mass_cum = clamped_mass_cum;
    return r;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::reached_t_end: return "reached_t_end";
        case Verdict::blowup_threshold: return "blowup_threshold";
        case Verdict::dt_floor: return "dt_floor";
        case Verdict::step_budget: return "step_budget";
    }
    return "?";
}

namespace {

constexpr const char* kHeader =
    "t,dt,linf,lp0,phi,grad_term,pw1,pw2,pw3,mass,vmean,crossdiff_q1,clamped_mass_cum";
constexpr int kColumns = 13;

std::array<double, kColumns> row_values(const TraceRow& r) {
    return {r.t,   r.dt,  r.linf, r.lp0,  r.phi,   r.grad_term,   r.pw1,
            r.pw2, r.pw3, r.mass, r.vmean, r.crossdiff_q1, r.clamped_mass_cum};
}

}  // namespace

void write_snapshot_csv(std::ostream& os, const RadialGrid& grid, const StateSnapshot& snap) {
    char buf[32];
    os << "r,u,v\n";
    for (int i = 0; i < grid.cells; ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", grid.center_r[i]);
        os << buf;
        std::snprintf(buf, sizeof buf, "%.17g", snap.u[i]);
        os << ',' << buf;
        std::snprintf(buf, sizeof buf, "%.17g", snap.v[i]);
        os << ',' << buf << '\n';
    }
}

void write_trace_csv(std::ostream& os, const std::vector<TraceRow>& rows) {
    os << kHeader << '\n';
    char buf[32];
    for (const auto& r : rows) {
        const auto vals = row_values(r);
        for (int c = 0; c < kColumns; ++c) {
            std::snprintf(buf, sizeof buf, "%.17g", vals[c]);
            os << (c ? "," : "") << buf;
        }
        os << '\n';
    }
}

std::vector<TraceRow> parse_trace_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("trace csv: empty file");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kHeader) throw std::runtime_error("trace csv: unexpected header: " + line);

    std::vector<TraceRow> rows;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::array<double, kColumns> vals{};
        std::stringstream ss(line);
        std::string cell;
        int c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= kColumns) throw std::runtime_error("trace csv: too many columns");
            char* end = nullptr;
            vals[c] = std::strtod(cell.c_str(), &end);
            if (end == cell.c_str() || *end != '\0')
                throw std::runtime_error("trace csv: bad number: " + cell);
            ++c;
        }
        if (c != kColumns) throw std::runtime_error("trace csv: wrong column count");
        TraceRow r;
        r.t = vals[0];
        r.dt = vals[1];
        r.linf = vals[2];
        r.lp0 = vals[3];
        r.phi = vals[4];
        r.grad_term = vals[5];
        r.pw1 = vals[6];
        r.pw2 = vals[7];
        r.pw3 = vals[8];
        r.mass = vals[9];
        r.vmean = vals[10];
        r.crossdiff_q1 = vals[11];
        r.clamped_mass_cum = vals[12];
        if (!rows.empty() && !(r.t > rows.back().t))
            throw std::runtime_error("trace csv: rows not strictly increasing in t");
        rows.push_back(r);
    }
    return rows;
}

}  // namespace chemobound
