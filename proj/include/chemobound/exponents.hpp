#pragma once

#include <array>
#include <string>
#include <vector>

namespace chemobound {

/// The working exponent p and everything derived from it.
///
/// k, delta, sigma, gamma are tied together:
///   k = 2(p+m2-1)/(p+m1-1), delta = (p+m2-1)/p,
///   sigma = k*a3/2,          gamma = delta*(1-a3)/(1-sigma),
/// and lambda = (p+m1-1)/(p*a1).
struct ExponentSet {
    double pbar = 0.0;
    double k = 0.0;
    double a1 = 0.0, a2 = 0.0, a3 = 0.0;
    double beta = 0.0;
    double sigma = 0.0;
    double gamma = 0.0;
    double delta = 0.0;
    double lambda = 0.0;
};

/// The nine candidate expressions whose maximum (plus one) fixes the working
/// exponent. Exposed separately so reports can show which branch is active.
std::array<double, 9> pbar_branches(double m1, double m2, int n, double p0, double q1, double q2);

/// max(branches) + 1. Throws std::domain_error when a branch denominator
/// vanishes (q1 = n+2, q2 = 1, or the q2-branch denominator hits zero).
double compute_pbar(double m1, double m2, int n, double p0, double q1, double q2);

/// Evaluates every derived exponent at p = pbar. Throws std::domain_error if
/// an interpolation denominator is <= 0 (cannot happen for inputs that passed
/// validation; indicates an invalid parameter set slipped through).
ExponentSet compute_exponents(double m1, double m2, int n, double p0, double pbar);

struct RelationCheck {
    std::string name;
    bool pass = false;
    double margin = 0.0;  // smallest slack among the strict inequalities of the relation
};

struct RelationReport {
    std::vector<RelationCheck> checks;
    bool all_pass = false;
};

/// Machine-checks the eight strict relations the derivation rests on:
/// p-range, a1/a2/a3/beta/sigma in (0,1), 1/k > 1/2 - 1/n, gamma > delta > 1.
/// Strict comparisons, zero tolerance; the +1 margin in pbar keeps every
/// relation non-marginal.
RelationReport check_exponent_relations(const ExponentSet& e, double m1, double m2, int n,
                                        double p0);

}  // namespace chemobound
