#include "stabdyn/semisimple.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace stabdyn {

GradedObject::GradedObject(int simple_count) {
    if (simple_count <= 0) {
        throw std::invalid_argument("GradedObject: need at least one simple");
    }
    slots_.resize(simple_count);
}

GradedObject GradedObject::simple(int simple_count, int index,
                                  std::int64_t shift) {
    GradedObject e(simple_count);
    e.add_summand(index, shift);
    return e;
}

bool GradedObject::is_zero() const {
    return std::all_of(slots_.begin(), slots_.end(),
                       [](const LaurentPoly& p) { return p.is_zero(); });
}

void GradedObject::add_summand(int index, std::int64_t shift,
                               const BigInt& count) {
    slot(index).add_term(-shift, count);
}

const LaurentPoly& GradedObject::slot(int index) const {
    if (index < 0 || index >= simple_count()) {
        throw std::out_of_range("GradedObject::slot: index out of range");
    }
    return slots_[index];
}

LaurentPoly& GradedObject::slot(int index) {
    if (index < 0 || index >= simple_count()) {
        throw std::out_of_range("GradedObject::slot: index out of range");
    }
    return slots_[index];
}

GradedObject GradedObject::shifted(std::int64_t n) const {
    GradedObject out(simple_count());
    for (int i = 0; i < simple_count(); ++i) {
        for (const auto& [degree, c] : slots_[i].terms()) {
            out.slots_[i].add_term(degree - n, c);
        }
    }
    return out;
}

GradedObject GradedObject::operator+(const GradedObject& other) const {
    if (simple_count() != other.simple_count()) {
        throw std::invalid_argument("GradedObject: simple-count mismatch");
    }
    GradedObject out = *this;
    for (int i = 0; i < simple_count(); ++i) {
        out.slots_[i] += other.slots_[i];
    }
    return out;
}

void validate(const StabilityCondition& sigma) {
    if (sigma.masses.empty() || sigma.masses.size() != sigma.phases.size()) {
        throw std::invalid_argument(
            "StabilityCondition: masses and phases must have equal nonzero "
            "size");
    }
    for (double m : sigma.masses) {
        if (!(m > 0.0) || !std::isfinite(m)) {
            throw std::invalid_argument(
                "StabilityCondition: masses must be finite and positive");
        }
    }
    for (double p : sigma.phases) {
        if (!std::isfinite(p)) {
            throw std::invalid_argument(
                "StabilityCondition: phases must be finite");
        }
    }
}

double mass_with_parameter(const StabilityCondition& sigma,
                           const GradedObject& e, double t) {
    validate(sigma);
    if (sigma.simple_count() != e.simple_count()) {
        throw std::invalid_argument(
            "mass_with_parameter: simple-count mismatch");
    }
    const double x = std::exp(-t);
    double total = 0.0;
    for (int i = 0; i < e.simple_count(); ++i) {
        if (e.slot(i).is_zero()) {
            continue;
        }
        total += sigma.masses[i] * std::exp(sigma.phases[i] * t) *
                 poly_eval(e.slot(i), x);
    }
    return total;
}

double object_mass(const StabilityCondition& sigma, const GradedObject& e) {
    return mass_with_parameter(sigma, e, 0.0);
}

PhaseRange object_phase_range(const StabilityCondition& sigma,
                              const GradedObject& e) {
    validate(sigma);
    if (sigma.simple_count() != e.simple_count()) {
        throw std::invalid_argument(
            "object_phase_range: simple-count mismatch");
    }
    if (e.is_zero()) {
        throw std::domain_error("object_phase_range: zero object");
    }
    PhaseRange range{std::numeric_limits<double>::infinity(),
                     -std::numeric_limits<double>::infinity()};
    for (int i = 0; i < e.simple_count(); ++i) {
        for (const auto& [degree, c] : e.slot(i).terms()) {
            // z^degree in slot i encodes S_i[-degree] with phase
            // phi_i - degree.
            const double phase = sigma.phases[i] - static_cast<double>(degree);
            range.min = std::min(range.min, phase);
            range.max = std::max(range.max, phase);
        }
    }
    return range;
}

GradedObject apply_functor(const LaurentMatrix& m, const GradedObject& e) {
    if (m.size() != e.simple_count()) {
        throw std::invalid_argument("apply_functor: size mismatch");
    }
    GradedObject out(e.simple_count());
    for (int j = 0; j < m.size(); ++j) {
        for (int i = 0; i < m.size(); ++i) {
            if (m.at(j, i).is_zero() || e.slot(i).is_zero()) {
                continue;
            }
            out.slot(j) += m.at(j, i) * e.slot(i);
        }
    }
    return out;
}

double bridgeland_distance(const StabilityCondition& sigma,
                           const StabilityCondition& tau) {
    validate(sigma);
    validate(tau);
    if (sigma.simple_count() != tau.simple_count()) {
        throw std::invalid_argument(
            "bridgeland_distance: simple-count mismatch");
    }
    double dist = 0.0;
    for (int i = 0; i < sigma.simple_count(); ++i) {
        // log(max/min) rather than |log(a/b)| so the result is bitwise
        // symmetric in the two arguments.
        const double hi = std::max(sigma.masses[i], tau.masses[i]);
        const double lo = std::min(sigma.masses[i], tau.masses[i]);
        dist = std::max(dist, std::log(hi / lo));
        dist = std::max(dist, std::abs(sigma.phases[i] - tau.phases[i]));
    }
    return dist;
}

StabilityCondition c_action(const StabilityCondition& sigma,
                            std::complex<double> w) {
    validate(sigma);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        throw std::invalid_argument("c_action: w must be finite");
    }
    StabilityCondition out = sigma;
    const double mass_factor = std::exp(std::acos(-1.0) * w.imag());
    for (double& m : out.masses) {
        m *= mass_factor;
    }
    for (double& p : out.phases) {
        p -= w.real();
    }
    return out;
}

namespace {

// Translation that centers max + min at zero.
double midpoint(const std::vector<double>& v) {
    const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
    return 0.5 * (*lo + *hi);
}

}  // namespace

QuotientPoint::QuotientPoint(const StabilityCondition& sigma) : rep_(sigma) {
    validate(sigma);
    std::vector<double> log_masses(rep_.masses.size());
    std::transform(rep_.masses.begin(), rep_.masses.end(), log_masses.begin(),
                   [](double m) { return std::log(m); });
    const double mass_shift = midpoint(log_masses);
    const double phase_shift = midpoint(rep_.phases);
    for (double& m : rep_.masses) {
        m = std::exp(std::log(m) - mass_shift);
    }
    for (double& p : rep_.phases) {
        p -= phase_shift;
    }
}

double quotient_distance(const StabilityCondition& sigma,
                         const StabilityCondition& tau) {
    validate(sigma);
    validate(tau);
    if (sigma.simple_count() != tau.simple_count()) {
        throw std::invalid_argument(
            "quotient_distance: simple-count mismatch");
    }
    // dist(sigma, tau . w) = max_i max{|a_i - u|, |b_i + v|} with
    // a_i = log(m_i/m'_i), b_i = phi_i - phi'_i and (u, v) ranging over the
    // action; each family minimizes independently at its Chebyshev center,
    // leaving half the spread.
    double a_min = std::numeric_limits<double>::infinity(), a_max = -a_min;
    double b_min = a_min, b_max = -a_min;
    for (int i = 0; i < sigma.simple_count(); ++i) {
        // Difference of logs rather than log of the ratio: subtraction
        // negates exactly, so swapping the arguments negates every a_i
        // and the spread (hence the distance) is bitwise symmetric.
        const double a = std::log(sigma.masses[i]) - std::log(tau.masses[i]);
        const double b = sigma.phases[i] - tau.phases[i];
        a_min = std::min(a_min, a);
        a_max = std::max(a_max, a);
        b_min = std::min(b_min, b);
        b_max = std::max(b_max, b);
    }
    return 0.5 * std::max(a_max - a_min, b_max - b_min);
}

double quotient_distance(const QuotientPoint& p, const QuotientPoint& q) {
    return quotient_distance(p.representative(), q.representative());
}

}  // namespace stabdyn
