#pragma once

// Closed-form growth curves and displacement values for the standard
// families of auto-equivalences.  Entries are formulas, not categories: they
// exist to cross-check the generic machinery against known answers.
//
//   shift [n]            h(t) = n t                 d = l = |n|
//   gepner w (real)      h(t) = w t                 d = l = |w|
//   dhkk r, f0 (|r|>1)   h(t) = log|r| - f0 t       d = l = max{log|r|, |f0|}
//   spherical-twist N    h(t) = (1-N)t for t < 0,   d = l = N - 1
//     (N >= 2)                  0      for t >= 0
//   serre-fractional-cy  h(t) = (m/n) t             d = |m|/n (from the n-th
//     m, n (n >= 1)                                 power being [m]); no l
//   serre-dim lo, hi     stores the two asymptotic slopes only; the
//                        displacement value max{-lo, hi} is a lower bound

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace stabdyn {

enum class ClosedFormKind {
    Shift,
    Gepner,
    Dhkk,
    SphericalTwist,
    SerreFractionalCY,
    SerreDimension,
};

// Canonical CLI/JSON name of a kind, e.g. "spherical-twist".
std::string closed_form_name(ClosedFormKind kind);

struct ClosedForm {
    ClosedFormKind kind;
    std::int64_t shift_n = 0;    // shift
    double gepner_w = 0.0;       // gepner
    double dhkk_r = 0.0;         // dhkk: |r| > 1
    double dhkk_f0 = 0.0;        // dhkk
    std::int64_t twist_order = 0;  // spherical-twist: N >= 2
    std::int64_t cy_m = 0;       // serre-fractional-cy
    std::int64_t cy_n = 0;       // serre-fractional-cy: n >= 1
    double sdim_lower = 0.0;     // serre-dim
    double sdim_upper = 0.0;     // serre-dim
};

// Constructors validate the parameter domains and throw
// std::invalid_argument outside them.
ClosedForm make_shift(std::int64_t n);
ClosedForm make_gepner(double w);
ClosedForm make_dhkk(double r, double f0);
ClosedForm make_spherical_twist(std::int64_t n);
ClosedForm make_serre_fractional_cy(std::int64_t m, std::int64_t n);
ClosedForm make_serre_dimension(double lower, double upper);

// Evaluates the growth formula at t.  Throws std::domain_error for the
// serre-dim entry, which stores slopes only.
double closed_form_mass_growth(const ClosedForm& form, double t);

struct ClosedFormSlopes {
    double phi_minus;  // slope as t -> -infinity
    double phi_plus;   // slope as t -> +infinity
};

ClosedFormSlopes closed_form_slopes(const ClosedForm& form);

// Growth at t = 0; 0 for every entry except dhkk (log|r|).  Throws
// std::domain_error for serre-dim.
double closed_form_h_zero(const ClosedForm& form);

struct ClosedFormDisplacement {
    double displacement;                        // d
    std::optional<double> translation_length;   // l where the catalog has one
    bool lower_bound_only = false;              // true for serre-dim
};

ClosedFormDisplacement closed_form_displacement(const ClosedForm& form);

struct ConsistencyReport {
    double region_violation;    // excess outside the piecewise-linear region
    double sandwich_violation;  // excess of quotient lower bound over d
    double max_violation;
};

// Checks that the formula lies in its own piecewise-linear envelope
// (lower_sharp <= h <= upper_basic built from h_zero and the slopes) over
// the grid, and that the quotient-displacement lower bound
// max{h_zero, (phi_plus - phi_minus)/2} does not exceed the displacement.
// For serre-dim only the slope ordering is checked.
ConsistencyReport consistency_with_bounds(const ClosedForm& form,
                                          const std::vector<double>& grid);

}  // namespace stabdyn
