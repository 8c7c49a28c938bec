#pragma once

#include <functional>

namespace chemobound {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // accumulated local Richardson estimates
};

/// Adaptive Simpson on [a, b] to relative tolerance rel_tol (with respect to
/// a first coarse estimate of the whole integral). Deterministic recursion
/// order, depth-capped.
QuadResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                              double rel_tol, int max_depth = 48);

}  // namespace chemobound
