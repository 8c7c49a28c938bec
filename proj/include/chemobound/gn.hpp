#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "chemobound/exponents.hpp"
#include "chemobound/geometry.hpp"

namespace chemobound {

/// One (q, s, p) exponent configuration of the interpolation inequality
///   ||w||_p <= C (||grad w||_2^a ||w||_q^{1-a} + ||w||_s),
/// with a = (1/q - 1/p) / (1/q + 1/n - 1/2).
struct GnUseCase {
    std::string name;
    double q = 0, s = 0, p = 0, a = 0;
};

/// The three configurations the estimates actually use: the p-power bound,
/// the L-assisted k-power bound, and the closing k-power bound.
std::array<GnUseCase, 3> gn_use_cases(const ExponentSet& e, double m1, double p0);

struct GnReport {
    double cgn = 0.0;
    double observed_max = 0.0;
    std::array<double, 3> per_case_max{};
    int samples = 0;
    std::uint64_t seed = 0;
    bool pass = false;
};

struct GnOptions {
    int samples = 500;   // per configuration
    int grid_cells = 512;
    std::uint64_t seed = 20240901;
};

/// Max of ||w||_p / (||grad w||_2^a ||w||_q^{1-a} + ||w||_s) over a fixed-seed
/// family of positive radial test profiles (oscillatory exponential-cosine
/// fields plus concentrated bumps), for each use case. Grid quadrature at
/// opts.grid_cells.
GnReport gn_observed_max(const DomainGeometry& geom, const ExponentSet& e, double m1, double p0,
                         const GnOptions& opts);

/// pass iff cgn strictly exceeds the observed max (a configured constant equal
/// to the sampled ratio has no margin left and is rejected).
GnReport gn_validate(double cgn, const DomainGeometry& geom, const ExponentSet& e, double m1,
                     double p0, const GnOptions& opts);

/// Default constant: twice the fixed-seed observed max. Heuristic, not
/// certified; reports carry the provenance.
double gn_default_cgn(const DomainGeometry& geom, const ExponentSet& e, double m1, double p0,
                      const GnOptions& opts);

}  // namespace chemobound
