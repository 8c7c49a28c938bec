#pragma once

#include <array>

#include "chemobound/bounds.hpp"
#include "chemobound/constants.hpp"
#include "chemobound/exponents.hpp"
#include "chemobound/gn.hpp"
#include "chemobound/problem.hpp"

namespace chemobound {

/// Every number feeding the lower bound, assembled in dependency order:
/// exponents -> interpolation constant -> energy constants -> scalar ODI
/// constants -> the two bound evaluations.
struct Cascade {
    Problem prob;  // with cgn resolved
    std::array<double, 9> branches{};
    ExponentSet exps;
    RelationReport relations;
    GnReport gn;
    EnergyConstants en;
    OdiConstants odi;
    LpPathConstants lp;
    double phi0 = 0;  // continuum quadrature of the initial energy
    OsgoodResult t_osgood;
    double t_explicit = 0;
};

class CalibrationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Runs the full pipeline. A nonpositive prob.cgn is replaced by the
/// fixed-seed calibration default; a user-supplied one is validated and
/// CalibrationError is thrown when it sits at or below the observed ratio.
/// L_hypothetical feeds the comparison-path constants.
Cascade build_cascade(const Problem& prob, const GnOptions& gn_opts, double L_hypothetical = 1.0);

}  // namespace chemobound
