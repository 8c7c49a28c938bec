#pragma once

#include <string>
#include <vector>

#include "chemobound/geometry.hpp"
#include "chemobound/initial_data.hpp"

namespace chemobound {

struct BlowupCheck {
    bool ok = false;
    std::vector<std::string> violations;
};

/// Checks m2 > m1 + 2/n, m1 <= 1, m2 > 1. Total: never throws, lists every
/// failed inequality by name.
BlowupCheck validate_blowup_restrictions(double m1, double m2, int n);

struct FreeParameters {
    double p0, q1, q2;
};

/// Interior defaults of the admissible open ranges:
/// p0 = (n/2)(m2-m1)+1, q1 = n+3, q2 = (n+2)/2 + 1.
FreeParameters default_free_parameters(double m1, double m2, int n);

enum class CgnProvenance { calibrated, user };

/// Validated instance of the model plus the free analysis parameters.
/// Immutable after validation; safe to share read-only across runs.
struct Problem {
    DomainGeometry geom;
    double m1 = 1.0;
    double m2 = 2.5;
    double alpha = 1.0;
    double chi = 1.0;
    InitialData u0;

    double p0 = 0.0;  // norm exponent
    double q1 = 0.0;
    double q2 = 0.0;
    double cgn = 0.0;  // interpolation-inequality constant; 0 = calibrate
    CgnProvenance cgn_provenance = CgnProvenance::calibrated;

    double mass_mean = 0.0;  // M, domain average of u0

    /// Fills unset free parameters with defaults, computes M, and re-checks
    /// every range constraint. Throws SpecError listing all violations.
    static Problem validated(DomainGeometry geom, double m1, double m2, double alpha, double chi,
                             InitialData u0, double p0 = 0.0, double q1 = 0.0, double q2 = 0.0,
                             double cgn = 0.0);
};

class SpecError : public std::invalid_argument {
public:
    SpecError(const std::string& what, std::vector<std::string> violations)
        : std::invalid_argument(what), violations_(std::move(violations)) {}
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

}  // namespace chemobound
