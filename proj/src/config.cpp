#include "chemobound/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace chemobound {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& v, const std::string& key) {
    char* end = nullptr;
    const double x = std::strtod(v.c_str(), &end);
    if (end == v.c_str() || *end != '\0')
        throw ConfigError("config: key '" + key + "' is not a number: " + v);
    return x;
}

}  // namespace

KeyValues KeyValues::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

KeyValues KeyValues::parse_text(const std::string& text, const std::string& origin) {
    KeyValues kv;
    kv.origin_ = origin;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
        if (!kv.entries_.emplace(key, value).second)
            throw ConfigError(origin + ": duplicate key '" + key + "'");
        kv.consumed_[key] = false;
    }
    return kv;
}

bool KeyValues::has(const std::string& key) const { return entries_.count(key) > 0; }

std::string KeyValues::take_string(const std::string& key) {
    const auto it = entries_.find(key);
    if (it == entries_.end()) throw ConfigError(origin_ + ": missing required key '" + key + "'");
    consumed_[key] = true;
    return it->second;
}

std::string KeyValues::take_string(const std::string& key, const std::string& fallback) {
    if (!has(key)) return fallback;
    return take_string(key);
}

double KeyValues::take_double(const std::string& key) {
    return parse_double(take_string(key), key);
}

double KeyValues::take_double(const std::string& key, double fallback) {
    if (!has(key)) return fallback;
    return take_double(key);
}

long long KeyValues::take_int(const std::string& key, long long fallback) {
    if (!has(key)) return fallback;
    const double x = take_double(key);
    const auto i = static_cast<long long>(x);
    if (static_cast<double>(i) != x)
        throw ConfigError(origin_ + ": key '" + key + "' must be an integer");
    return i;
}

std::vector<double> KeyValues::take_double_list(const std::string& key,
                                                std::vector<double> fallback) {
    if (!has(key)) return fallback;
    const std::string raw = take_string(key);
    std::vector<double> out;
    std::stringstream ss(raw);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        cell = trim(cell);
        if (cell.empty()) continue;
        out.push_back(parse_double(cell, key));
    }
    if (out.empty()) throw ConfigError(origin_ + ": key '" + key + "' has no values");
    return out;
}

void KeyValues::finish() const {
    std::vector<std::string> leftover;
    for (const auto& [k, used] : consumed_)
        if (!used) leftover.push_back(k);
    if (!leftover.empty()) {
        std::string msg = origin_ + ": unknown keys:";
        for (const auto& k : leftover) msg += " '" + k + "'";
        throw ConfigError(msg);
    }
}

Problem load_problem_config(const std::string& path) {
    KeyValues kv = KeyValues::parse_file(path);

    const auto n = static_cast<int>(kv.take_int("geometry.n", 0));
    const std::string shape = kv.take_string("geometry.shape");
    const double R = kv.take_double("geometry.R");
    DomainGeometry geom;
    if (shape == "interval")
        geom = DomainGeometry::interval(R);
    else if (shape == "ball")
        geom = DomainGeometry::ball(n, R);
    else
        throw ConfigError(path + ": geometry.shape must be 'interval' or 'ball'");
    if (shape == "interval" && n != 1)
        throw ConfigError(path + ": interval geometry requires geometry.n = 1");

    const double m1 = kv.take_double("model.m1");
    const double m2 = kv.take_double("model.m2");
    const double alpha = kv.take_double("model.alpha");
    const double chi = kv.take_double("model.chi");

    const double p0 = kv.take_double("proof.p0", 0.0);
    const double q1 = kv.take_double("proof.q1", 0.0);
    const double q2 = kv.take_double("proof.q2", 0.0);
    const double cgn = kv.take_double("proof.Cgn", 0.0);

    const std::string kind = kv.take_string("init.kind");
    InitialData u0;
    if (kind == "constant") {
        u0 = InitialData::constant(kv.take_double("init.amplitude"));
    } else if (kind == "gaussian") {
        u0 = InitialData::gaussian(kv.take_double("init.amplitude"),
                                   kv.take_double("init.width"),
                                   kv.take_double("init.center", 0.0));
    } else if (kind == "table") {
        u0 = InitialData::table(kv.take_double_list("init.values", {}));
    } else {
        throw ConfigError(path + ": init.kind must be constant, gaussian or table");
    }
    u0.kappa = kv.take_double("init.kappa", 0.0);
    kv.finish();

    return Problem::validated(geom, m1, m2, alpha, chi, std::move(u0), p0, q1, q2, cgn);
}

RunConfig load_run_config(const std::string& path) {
    KeyValues kv = KeyValues::parse_file(path);

    RunConfig rc;
    const std::string spec = kv.take_string("spec");
    std::filesystem::path spec_path(spec);
    if (spec_path.is_relative())
        spec_path = std::filesystem::path(path).parent_path() / spec_path;
    rc.spec_path = spec_path.string();

    rc.grid_cells = static_cast<int>(kv.take_int("run.N", rc.grid_cells));
    rc.cfl = kv.take_double("run.cfl", rc.cfl);
    rc.t_end = kv.take_double("run.t_end", rc.t_end);
    rc.u_linf_threshold = kv.take_double("run.u_linf_threshold", rc.u_linf_threshold);
    rc.threshold_ladder = kv.take_double_list("run.thresholds", rc.threshold_ladder);
    rc.dt_floor = kv.take_double("run.dt_floor", rc.dt_floor);
    rc.dt_max = kv.take_double("run.dt_max", rc.dt_max);
    rc.max_steps = kv.take_int("run.max_steps", rc.max_steps);
    rc.stride = static_cast<int>(kv.take_int("run.stride", rc.stride));
    rc.seed = static_cast<std::uint64_t>(kv.take_int("run.seed", static_cast<long long>(rc.seed)));
    rc.outdir = kv.take_string("run.outdir", rc.outdir);
    rc.gn_samples = static_cast<int>(kv.take_int("run.gn_samples", rc.gn_samples));
    rc.gn_grid = static_cast<int>(kv.take_int("run.gn_grid", rc.gn_grid));
    rc.L_hypothetical = kv.take_double("run.L_hypothetical", rc.L_hypothetical);
    rc.growth_factor = kv.take_double("run.growth_factor", rc.growth_factor);
    rc.smooth_linf_factor = kv.take_double("run.smooth_linf_factor", rc.smooth_linf_factor);
    rc.refine_check = kv.take_int("run.refine", rc.refine_check ? 1 : 0) != 0;
    rc.checkpoint_times = kv.take_double_list("run.checkpoints", {});
    kv.finish();

    if (rc.grid_cells < 8) throw ConfigError(path + ": run.N must be >= 8");
    if (!(rc.cfl > 0.0 && rc.cfl < 1.0)) throw ConfigError(path + ": run.cfl must be in (0,1)");
    if (rc.stride < 1) throw ConfigError(path + ": run.stride must be >= 1");

    if (const char* env = std::getenv("CHEMOBOUND_OUTDIR"); env && *env) rc.outdir = env;

    rc.problem = load_problem_config(rc.spec_path);
    return rc;
}

}  // namespace chemobound
