#pragma once

// Spectral radius of nonnegative real matrices and the induced growth curve
// of a Laurent matrix.
//
// For a non-nilpotent Laurent matrix M with nonnegative coefficients the
// growth function is
//
//     h(t) = log rho( M(e^{-t}) ),            t real,
//
// where rho is the Perron-Frobenius spectral radius.  h is convex in t
// (log rho of a matrix whose entries are log-convex functions of t), and
// with d = min degree, D = max degree over the entries of M one has the
// piecewise-linear envelope
//
//     lower(t)  = max(phi_minus * t, phi_plus * t)
//     upper(t)  = h(0) + max(phi_minus * t, phi_plus * t)
//     sharper lower(t) = max(lower(t), h(0) + min(phi_minus*t, phi_plus*t))
//
// with the degree-range slopes phi_minus = -D, phi_plus = -d.  These slopes
// equal the true asymptotic slopes of h exactly when the extremal degrees
// lie on spectral cycles (for instance on the diagonal); the seeded matrix
// generator in random.hpp arranges that by construction.
//
// rho is computed per strongly connected component: each irreducible block
// is balanced by an exact power-of-2 diagonal similarity, shifted by
// eps * I (eps = 1e-3 times the balanced max entry) to break periodicity,
// squared four times with norm tracking, and then power-iterated with the
// Collatz-Wielandt enclosure
//
//     min_i (Bx)_i / x_i  <=  rho(B)  <=  max_i (Bx)_i / x_i   (x > 0)
//
// as a rigorous stopping rule; the shift is subtracted back exactly
// (rho(B + eps I) = rho(B) + eps for nonnegative B).  Nilpotent matrices
// yield rho = 0 exactly: every component is a singleton without self-loop.

#include <stdexcept>
#include <vector>

#include "stabdyn/laurent.hpp"

namespace stabdyn {

using RealMatrix = std::vector<std::vector<double>>;

// Raised when an operation that needs rho > 0 meets a nilpotent matrix.
class NilpotentError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Perron-Frobenius spectral radius of a square matrix with nonnegative
// finite entries.  Throws std::invalid_argument on malformed input.
double spectral_radius(const RealMatrix& a);

// h(t) = log rho(M(e^{-t})).  Throws NilpotentError when M is nilpotent.
double entropy_at(const LaurentMatrix& m, double t);

struct Slopes {
    double phi_minus;  // -max degree: the t -> -infinity slope of the envelope
    double phi_plus;   // -min degree: the t -> +infinity slope of the envelope
};

// Degree-range slopes (-D, -d).  Throws std::domain_error on the zero matrix
// and NilpotentError on nilpotent input.
Slopes asymptotic_slopes(const LaurentMatrix& m);

struct EntropySample {
    double t;
    double value;        // h(t)
    double slope_minus;  // phi_minus, repeated per sample for flat CSV rows
    double slope_plus;   // phi_plus
    double h_zero;       // h(0)
};

// Derived envelope columns.
double lower_basic(const EntropySample& s);  // max(phi_minus*t, phi_plus*t)
double upper_basic(const EntropySample& s);  // h(0) + lower_basic
double lower_sharp(const EntropySample& s);  // sharpened lower bound

struct EntropyCurve {
    std::vector<double> grid;  // strictly increasing
    std::vector<EntropySample> samples;  // one per grid point
};

// n uniformly spaced points from lo to hi inclusive.  Requires n >= 2 and
// lo < hi; throws std::invalid_argument otherwise.
std::vector<double> uniform_grid(double lo, double hi, int n);

// Default sampling grid: 201 uniform points on [-10, 10].
std::vector<double> default_grid();

// Samples h over a strictly increasing grid.  Throws NilpotentError on
// nilpotent input, std::invalid_argument on an empty or unsorted grid.
EntropyCurve sample_entropy_curve(const LaurentMatrix& m,
                                  const std::vector<double>& grid);

struct BoundReport {
    double max_violation;  // max over grid of region excess, >= 0
    double worst_t;        // grid point where the excess is attained
};

// Largest violation of lower_sharp <= h <= upper_basic over the grid.
BoundReport check_pl_bounds(const LaurentMatrix& m,
                            const std::vector<double>& grid);
BoundReport check_pl_bounds(const EntropyCurve& curve);

// Verifies discrete midpoint convexity of h over a strictly increasing grid
// with at least 3 points (throws std::invalid_argument otherwise); returns
// the largest convexity defect max(0, h(mid) - chord) over interior points.
double convexity_defect(const LaurentMatrix& m, const std::vector<double>& grid);

// True iff the convexity defect stays within tol.
bool convexity_check(const LaurentMatrix& m, const std::vector<double>& grid,
                     double tol = 1e-9);

}  // namespace stabdyn
