#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chemobound/problem.hpp"

namespace chemobound {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Flat key = value text. '#' starts a comment, blank lines are skipped,
/// duplicate and unknown keys are errors.
class KeyValues {
public:
    static KeyValues parse_file(const std::string& path);
    static KeyValues parse_text(const std::string& text, const std::string& origin);

    bool has(const std::string& key) const;
    std::string take_string(const std::string& key);
    std::string take_string(const std::string& key, const std::string& fallback);
    double take_double(const std::string& key);
    double take_double(const std::string& key, double fallback);
    long long take_int(const std::string& key, long long fallback);
    std::vector<double> take_double_list(const std::string& key, std::vector<double> fallback);

    /// Errors if any key was never consumed (catches typos and stale keys).
    void finish() const;

    const std::string& origin() const { return origin_; }

private:
    std::string origin_;
    std::map<std::string, std::string> entries_;
    mutable std::map<std::string, bool> consumed_;
};

/// geometry.* / model.* / proof.* / init.* schema -> validated Problem.
Problem load_problem_config(const std::string& path);

struct RunConfig {
    std::string spec_path;  // resolved against the run-config directory
    Problem problem;

    int grid_cells = 256;
    double cfl = 0.4;
    double t_end = 1.0;
    double u_linf_threshold = 1e5;
    std::vector<double> threshold_ladder = {1e3, 1e4, 1e5};
    double dt_floor = 1e-14;
    double dt_max = 1e-2;
    long long max_steps = 50'000'000;
    int stride = 10;
    std::uint64_t seed = 20240901;
    std::string outdir = "out";
    int gn_samples = 500;
    int gn_grid = 512;
    double L_hypothetical = 1.0;
    double growth_factor = 2.0;
    double smooth_linf_factor = 5.0;
    bool refine_check = true;
    std::vector<double> checkpoint_times;
};

/// `spec = <path>` plus run.* knobs. CHEMOBOUND_OUTDIR overrides run.outdir.
RunConfig load_run_config(const std::string& path);

}  // namespace chemobound
