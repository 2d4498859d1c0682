#pragma once

// Auto-equivalences of a semisimple triangulated category and the isometries
// they induce on the space of stability conditions.
//
// An auto-equivalence is a permutation pi of the simples together with
// integer exponents m_i: it sends S_i to S_{pi(i)}[-m_i], so its matrix has
// the single entry z^{m_i} at position (pi(i), i).  The induced action on
// stability conditions is
//
//     mass'_{pi(i)} = mass_i,      phase'_{pi(i)} = phase_i + m_i,
//
// an isometry for the distance of semisimple.hpp.
//
// Exact invariants.  Let the cycles of pi be O with length c_O and shift
// total n_O = sum of m_i over O, and let k = lcm of the cycle lengths (the
// order of pi).  Then matrix^k is diagonal with exponent (k/c_O) n_O at
// every index of O, and
//
//     translation length      l = max_O |n_O| / c_O        (attained)
//     eventual displacement   d = max_O |(k/c_O) n_O| / k  (= l)
//     mass growth             h(t) = max_O ( -t n_O / c_O )
//
// all exact rationals.  A witness stability condition with all masses 1 and
// phases accumulated around each cycle by m_i - n_O/c_O (smallest index in
// each cycle pinned to phase 0) satisfies dist(witness, alpha witness) = l.

#include <cstdint>
#include <string>
#include <vector>

#include "stabdyn/laurent.hpp"
#include "stabdyn/rational.hpp"
#include "stabdyn/semisimple.hpp"

namespace stabdyn {

class AutoEquivalence {
public:
    // permutation[i] is the image index of simple i; shifts[i] is the
    // exponent m_i.  Throws std::invalid_argument unless permutation is a
    // bijection and the sizes agree.
    AutoEquivalence(std::vector<int> permutation,
                    std::vector<std::int64_t> shifts);

    static AutoEquivalence identity(int simple_count);

    // The shift functor [n]: fixes every simple, exponent -n everywhere.
    static AutoEquivalence shift_functor(int simple_count, std::int64_t n);

    int simple_count() const { return static_cast<int>(permutation_.size()); }
    const std::vector<int>& permutation() const { return permutation_; }
    const std::vector<std::int64_t>& shifts() const { return shifts_; }

    // Matrix with entry z^{m_i} at (permutation[i], i).
    LaurentMatrix matrix() const;

    AutoEquivalence inverse() const;

    // Composition: first other, then this.
    AutoEquivalence compose(const AutoEquivalence& other) const;

    bool operator==(const AutoEquivalence& other) const = default;

private:
    std::vector<int> permutation_;
    std::vector<std::int64_t> shifts_;
};

// Induced isometry on stability conditions.
// Throws std::invalid_argument on simple-count mismatch.
StabilityCondition act(const AutoEquivalence& alpha,
                       const StabilityCondition& sigma);

// |dist(alpha sigma, alpha tau) - dist(sigma, tau)|; zero up to rounding.
double isometry_check(const AutoEquivalence& alpha,
                      const StabilityCondition& sigma,
                      const StabilityCondition& tau);

struct OrbitData {
    std::vector<int> members;  // cycle of pi, starting at its smallest index
    std::int64_t length = 0;          // c_O
    std::int64_t shift_total = 0;     // n_O
    std::int64_t power_exponent = 0;  // (order/c_O) n_O: exponent in matrix^order
    Rational rate;                    // n_O / c_O
};

struct IsometryReport {
    std::int64_t order;  // k: lcm of cycle lengths
    std::vector<OrbitData> orbits;
    Rational eventual_displacement;  // max |power_exponent| / order
    Rational translation_length;     // max |shift_total| / length
    StabilityCondition witness;
    double witness_displacement;  // dist(witness, alpha witness)
    bool witness_attains;         // within 1e-12 of translation_length
    // Merged convention: "elliptic" when every shift total vanishes,
    // "hyperbolic" when pi is a single cycle with nonzero translation
    // length, otherwise "parabolic-paper-convention".
    std::string classification;
    // Infimum-based convention: "elliptic" iff the translation length is 0
    // (the witness always attains the infimum), otherwise "hyperbolic".
    std::string classification_by_definition;
};

IsometryReport exact_report(const AutoEquivalence& alpha);

struct DisplacementEstimate {
    std::vector<double> ratios;  // ratios[n-1] = dist(sigma, alpha^n sigma) / n
    double infimum;              // min over the ratios; the subadditive limit
};

// Requires n_max >= 1; throws std::invalid_argument otherwise.
DisplacementEstimate estimate_displacement(const AutoEquivalence& alpha,
                                           const StabilityCondition& sigma,
                                           int n_max);

// h(t) = max_O(-t n_O / c_O); exact up to one multiplication per orbit.
double mass_growth_exact(const AutoEquivalence& alpha, double t);

// max over simples S_i of (1/n_max) log mass(sigma, alpha^{n_max} S_i, t),
// evaluated in log-space so large shift accumulations cannot overflow.
// Requires n_max >= 2.
double mass_growth_estimate(const AutoEquivalence& alpha,
                            const StabilityCondition& sigma, double t,
                            int n_max);

struct MetricBoundReport {
    double h_zero;       // log rho(matrix(1)); 0 up to rounding for isometries
    Rational phi_minus;  // -max degree of matrix^order, divided by order
    Rational phi_plus;   // -min degree of matrix^order, divided by order
    Rational lower_bound;  // max(|phi_minus|, |phi_plus|)
    Rational eventual_displacement;
    bool equality;           // lower_bound == eventual_displacement exactly
    double sample_distance;  // dist(sigma, alpha sigma)
    double max_violation;    // worst failure of the bound chain, >= 0
};

// Checks max{h_zero, |phi_minus|, |phi_plus|} <= eventual displacement
// (with equality of the slope part) and that the sampled displacement is
// not below the eventual displacement.
MetricBoundReport verify_metric_bounds(const AutoEquivalence& alpha,
                                       const StabilityCondition& sigma);

struct FreeProperReport {
    bool applicable;        // eventual displacement > 0
    double epsilon;         // quarter of the eventual displacement
    double min_separation;  // min over n = 1..n_max of dist(sigma, alpha^n sigma)
    bool separated;         // min_separation >= 2 * epsilon - 1e-12
};

// Checks that the 2*epsilon separation needed for a free and proper action
// holds along the orbit of sigma.  Requires n_max >= 1.
FreeProperReport verify_free_proper(const AutoEquivalence& alpha,
                                    const StabilityCondition& sigma,
                                    int n_max);

struct QuotientBoundReport {
    std::vector<double> ratios;  // quotient ratios along the orbit
    double estimate;             // their infimum (subadditive limit)
    Rational lower_bound;        // (phi_plus - phi_minus) / 2
    Rational upper_bound;        // eventual displacement upstairs
    double max_violation;        // worst failure of lower <= estimate <= upper
};

// Sandwich test for the displacement in the quotient by the c_action.
// Requires n_max >= 1.
QuotientBoundReport verify_quotient_bounds(const AutoEquivalence& alpha,
                                           const StabilityCondition& sigma,
                                           int n_max);

struct ConjugationReport {
    double max_entropy_gap;   // sup over the grid of the growth-curve gap
    bool displacement_equal;  // exact rational d and l agree
};

// Compares the growth curve and exact invariants of beta with those of
// alpha^{-1} beta alpha over the given grid.
ConjugationReport conjugation_invariance_check(const AutoEquivalence& alpha,
                                               const AutoEquivalence& beta,
                                               const std::vector<double>& grid);

}  // namespace stabdyn
