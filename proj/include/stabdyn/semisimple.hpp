#pragma once

// Stability data on a semisimple triangulated category with finitely many
// simple objects S_1, ..., S_F up to shift.
//
// Every object decomposes as a finite direct sum of shifted simples, so an
// object is encoded by one Laurent polynomial per simple: the coefficient of
// z^d in slot i counts the summands S_i[-d] (the shift [1] multiplies the
// slot polynomial by z^{-1}).
//
// A stability condition is a mass m_i > 0 and a phase phi_i (any real) per
// simple.  The parameterized mass of an object E = (p_1, ..., p_F) is
//
//     mass(sigma, E, t) = sum_i m_i e^{phi_i t} p_i(e^{-t}),
//
// because the summand S_i[n] carries mass m_i and phase phi_i + n, and it
// contributes m_i e^{(phi_i + n) t} = m_i e^{phi_i t} (e^{-t})^{-n}.
//
// The distance between two stability conditions is
//
//     dist(sigma, tau) = max_i max{ |log(m_i/m'_i)|, |phi_i - phi'_i| },
//
// which equals the supremum over nonzero objects of the mass-ratio/phase
// comparison (the supremum is attained on a simple; see
// docs/metric_closed_forms.md).  The complex number w acts by
// m_i -> m_i e^{pi Im w}, phi_i -> phi_i - Re w; this action is isometric
// and the quotient pseudo-metric has the closed form implemented by
// quotient_distance.

#include <complex>
#include <cstdint>
#include <vector>

#include "stabdyn/laurent.hpp"

namespace stabdyn {

class GradedObject {
public:
    // Zero object over a category with simple_count simples.
    explicit GradedObject(int simple_count);

    // S_index shifted by [shift]: slot polynomial z^{-shift}.
    static GradedObject simple(int simple_count, int index,
                               std::int64_t shift = 0);

    int simple_count() const { return static_cast<int>(slots_.size()); }

    bool is_zero() const;

    // Adds count copies of S_index[shift].
    void add_summand(int index, std::int64_t shift, const BigInt& count = 1);

    const LaurentPoly& slot(int index) const;
    LaurentPoly& slot(int index);

    // Shifts the whole object by [n]: every slot is multiplied by z^{-n}.
    GradedObject shifted(std::int64_t n) const;

    GradedObject operator+(const GradedObject& other) const;  // direct sum

    bool operator==(const GradedObject& other) const = default;

private:
    std::vector<LaurentPoly> slots_;
};

struct StabilityCondition {
    std::vector<double> masses;  // strictly positive
    std::vector<double> phases;  // arbitrary reals

    int simple_count() const { return static_cast<int>(masses.size()); }
};

// Throws std::invalid_argument unless masses/phases have equal nonzero size,
// masses are strictly positive and all values are finite.
void validate(const StabilityCondition& sigma);

// mass(sigma, E, t) as above; 0 for the zero object.
// Throws std::invalid_argument on simple-count mismatch.
double mass_with_parameter(const StabilityCondition& sigma,
                           const GradedObject& e, double t);

// Mass at t = 0: sum of the masses of all summands.
double object_mass(const StabilityCondition& sigma, const GradedObject& e);

struct PhaseRange {
    double min;
    double max;
};

// Smallest and largest phase phi_i + n over the summands S_i[n] of E.
// Throws std::domain_error on the zero object.
PhaseRange object_phase_range(const StabilityCondition& sigma,
                              const GradedObject& e);

// Image of E under the endofunctor with matrix M: slot polynomials transform
// linearly, image slot j = sum_i M(j, i) * p_i.
// Throws std::invalid_argument on size mismatch.
GradedObject apply_functor(const LaurentMatrix& m, const GradedObject& e);

// max_i max{ |log(m_i / m'_i)|, |phi_i - phi'_i| }.
// Throws std::invalid_argument on simple-count mismatch.
double bridgeland_distance(const StabilityCondition& sigma,
                           const StabilityCondition& tau);

// w acts by m_i -> m_i e^{pi Im w}, phi_i -> phi_i - Re w.
StabilityCondition c_action(const StabilityCondition& sigma,
                            std::complex<double> w);

// Orbit of a stability condition under the c_action, stored via the
// canonical representative: log-masses and phases are translated so that
// max + min = 0 for each of the two coordinate families.
class QuotientPoint {
public:
    explicit QuotientPoint(const StabilityCondition& sigma);

    const StabilityCondition& representative() const { return rep_; }

private:
    StabilityCondition rep_;
};

// Distance between c_action orbits:
//
//   max{ spread_i log(m_i/m'_i), spread_i (phi_i - phi'_i) } / 2,
//
// where spread = max - min; this is the infimum of bridgeland_distance over
// the orbit (two independent one-dimensional Chebyshev-center problems, see
// docs/metric_closed_forms.md).
double quotient_distance(const QuotientPoint& p, const QuotientPoint& q);

// Same formula applied directly to representatives of the orbits.
double quotient_distance(const StabilityCondition& sigma,
                         const StabilityCondition& tau);

}  // namespace stabdyn
