#include "stabdyn/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "stabdyn/perron.hpp"

namespace stabdyn {

AutoEquivalence::AutoEquivalence(std::vector<int> permutation,
                                 std::vector<std::int64_t> shifts)
    : permutation_(std::move(permutation)), shifts_(std::move(shifts)) {
    const int n = static_cast<int>(permutation_.size());
    if (n == 0 || shifts_.size() != permutation_.size()) {
        throw std::invalid_argument(
            "AutoEquivalence: permutation and shifts must have equal nonzero "
            "size");
    }
    std::vector<bool> seen(n, false);
    for (int image : permutation_) {
        if (image < 0 || image >= n || seen[image]) {
            throw std::invalid_argument(
                "AutoEquivalence: permutation must be a bijection on "
                "0..size-1");
        }
        seen[image] = true;
    }
}

AutoEquivalence AutoEquivalence::identity(int simple_count) {
    std::vector<int> perm(simple_count);
    std::iota(perm.begin(), perm.end(), 0);
    return AutoEquivalence(std::move(perm),
                           std::vector<std::int64_t>(simple_count, 0));
}

AutoEquivalence AutoEquivalence::shift_functor(int simple_count,
                                               std::int64_t n) {
    std::vector<int> perm(simple_count);
    std::iota(perm.begin(), perm.end(), 0);
    return AutoEquivalence(std::move(perm),
                           std::vector<std::int64_t>(simple_count, -n));
}

LaurentMatrix AutoEquivalence::matrix() const {
    LaurentMatrix m(simple_count());
    for (int i = 0; i < simple_count(); ++i) {
        m.at(permutation_[i], i) = LaurentPoly::monomial(shifts_[i]);
    }
    return m;
}

AutoEquivalence AutoEquivalence::inverse() const {
    const int n = simple_count();
    std::vector<int> perm(n);
    std::vector<std::int64_t> shifts(n);
    for (int i = 0; i < n; ++i) {
        perm[permutation_[i]] = i;
        shifts[permutation_[i]] = -shifts_[i];
    }
    return AutoEquivalence(std::move(perm), std::move(shifts));
}

AutoEquivalence AutoEquivalence::compose(const AutoEquivalence& other) const {
    if (simple_count() != other.simple_count()) {
        throw std::invalid_argument("AutoEquivalence: size mismatch");
    }
    const int n = simple_count();
    std::vector<int> perm(n);
    std::vector<std::int64_t> shifts(n);
    for (int i = 0; i < n; ++i) {
        perm[i] = permutation_[other.permutation_[i]];
        shifts[i] = other.shifts_[i] + shifts_[other.permutation_[i]];
    }
    return AutoEquivalence(std::move(perm), std::move(shifts));
}

StabilityCondition act(const AutoEquivalence& alpha,
                       const StabilityCondition& sigma) {
    validate(sigma);
    if (alpha.simple_count() != sigma.simple_count()) {
        throw std::invalid_argument("act: simple-count mismatch");
    }
    const int n = alpha.simple_count();
    StabilityCondition out;
    out.masses.resize(n);
    out.phases.resize(n);
    for (int i = 0; i < n; ++i) {
        const int j = alpha.permutation()[i];
        out.masses[j] = sigma.masses[i];
        out.phases[j] = sigma.phases[i] + static_cast<double>(alpha.shifts()[i]);
    }
    return out;
}

double isometry_check(const AutoEquivalence& alpha,
                      const StabilityCondition& sigma,
                      const StabilityCondition& tau) {
    return std::abs(bridgeland_distance(act(alpha, sigma), act(alpha, tau)) -
                    bridgeland_distance(sigma, tau));
}

namespace {

std::vector<OrbitData> orbit_decomposition(const AutoEquivalence& alpha) {
    const int n = alpha.simple_count();
    std::vector<bool> visited(n, false);
    std::vector<OrbitData> orbits;
    for (int start = 0; start < n; ++start) {
        if (visited[start]) {
            continue;
        }
        OrbitData orbit;
        int i = start;
        do {
            visited[i] = true;
            orbit.members.push_back(i);
            orbit.shift_total += alpha.shifts()[i];
            i = alpha.permutation()[i];
        } while (i != start);
        orbit.length = static_cast<std::int64_t>(orbit.members.size());
        orbit.rate = Rational(orbit.shift_total, orbit.length);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

}  // namespace

IsometryReport exact_report(const AutoEquivalence& alpha) {
    IsometryReport report;
    report.orbits = orbit_decomposition(alpha);

    report.order = 1;
    for (const OrbitData& orbit : report.orbits) {
        report.order = std::lcm(report.order, orbit.length);
    }
    for (OrbitData& orbit : report.orbits) {
        orbit.power_exponent = (report.order / orbit.length) * orbit.shift_total;
    }

    Rational d(0), l(0);
    bool all_totals_zero = true;
    for (const OrbitData& orbit : report.orbits) {
        d = std::max(d, Rational(orbit.power_exponent, report.order).abs());
        l = std::max(l, orbit.rate.abs());
        all_totals_zero = all_totals_zero && orbit.shift_total == 0;
    }
    report.eventual_displacement = d;
    report.translation_length = l;

    // Witness: masses 1, phases accumulated around each cycle so that every
    // phase difference under the action is exactly the orbit rate.
    const int n = alpha.simple_count();
    report.witness.masses.assign(n, 1.0);
    report.witness.phases.assign(n, 0.0);
    for (const OrbitData& orbit : report.orbits) {
        const double rate = orbit.rate.to_double();
        double phase = 0.0;
        for (int member : orbit.members) {
            report.witness.phases[member] = phase;
            phase += static_cast<double>(alpha.shifts()[member]) - rate;
        }
    }
    report.witness_displacement =
        bridgeland_distance(report.witness, act(alpha, report.witness));
    report.witness_attains =
        std::abs(report.witness_displacement - l.to_double()) <= 1e-12;

    if (all_totals_zero) {
        report.classification = "elliptic";
    } else if (report.orbits.size() == 1) {
        report.classification = "hyperbolic";
    } else {
        report.classification = "parabolic-paper-convention";
    }
    report.classification_by_definition =
        (l == Rational(0)) ? "elliptic" : "hyperbolic";
    return report;
}

DisplacementEstimate estimate_displacement(const AutoEquivalence& alpha,
                                           const StabilityCondition& sigma,
                                           int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("estimate_displacement: n_max must be >= 1");
    }
    validate(sigma);
    DisplacementEstimate estimate;
    estimate.ratios.reserve(n_max);
    StabilityCondition current = sigma;
    double infimum = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= n_max; ++n) {
        current = act(alpha, current);
        const double ratio = bridgeland_distance(sigma, current) / n;
        estimate.ratios.push_back(ratio);
        infimum = std::min(infimum, ratio);
    }
    estimate.infimum = infimum;
    return estimate;
}

double mass_growth_exact(const AutoEquivalence& alpha, double t) {
    double h = -std::numeric_limits<double>::infinity();
    for (const OrbitData& orbit : orbit_decomposition(alpha)) {
        h = std::max(h, -t * orbit.rate.to_double());
    }
    return h;
}

double mass_growth_estimate(const AutoEquivalence& alpha,
                            const StabilityCondition& sigma, double t,
                            int n_max) {
    if (n_max < 2) {
        throw std::invalid_argument("mass_growth_estimate: n_max must be >= 2");
    }
    validate(sigma);
    if (alpha.simple_count() != sigma.simple_count()) {
        throw std::invalid_argument("mass_growth_estimate: size mismatch");
    }
    // Simple i walks to S_{pi^n(i)}[-s_n(i)] with s_n(i) the accumulated
    // exponent along the orbit, so
    //
    //   log mass(sigma, alpha^n S_i, t)
    //       = log m_{pi^n(i)} + (phi_{pi^n(i)} - s_n(i)) t,
    //
    // computed in log-space so that large accumulations cannot overflow; the
    // estimator is the max of these over the simples, divided by n.
    const int count = alpha.simple_count();
    std::vector<int> position(count);
    std::iota(position.begin(), position.end(), 0);
    std::vector<double> accumulated(count, 0.0);
    for (int step = 0; step < n_max; ++step) {
        for (int i = 0; i < count; ++i) {
            accumulated[i] += static_cast<double>(alpha.shifts()[position[i]]);
            position[i] = alpha.permutation()[position[i]];
        }
    }
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i) {
        best = std::max(best, std::log(sigma.masses[position[i]]) +
                                  (sigma.phases[position[i]] - accumulated[i]) *
                                      t);
    }
    return best / n_max;
}

MetricBoundReport verify_metric_bounds(const AutoEquivalence& alpha,
                                       const StabilityCondition& sigma) {
    const IsometryReport report = exact_report(alpha);
    const LaurentMatrix m = alpha.matrix();
    const LaurentMatrix power = mat_pow(m, report.order);
    const DegreeRange range = degree_range(power);

    MetricBoundReport out;
    out.h_zero = entropy_at(m, 0.0);
    out.phi_minus = Rational(-range.max, report.order);
    out.phi_plus = Rational(-range.min, report.order);
    out.lower_bound = std::max(out.phi_minus.abs(), out.phi_plus.abs());
    out.eventual_displacement = report.eventual_displacement;
    out.equality = out.lower_bound == out.eventual_displacement;
    out.sample_distance = bridgeland_distance(sigma, act(alpha, sigma));

    const double d = out.eventual_displacement.to_double();
    double violation = std::max(0.0, out.h_zero - d);
    if (out.lower_bound > out.eventual_displacement) {
        violation = std::max(violation,
                             (out.lower_bound - out.eventual_displacement)
                                 .to_double());
    }
    violation = std::max(violation, d - out.sample_distance);
    out.max_violation = std::max(violation, 0.0);
    return out;
}

FreeProperReport verify_free_proper(const AutoEquivalence& alpha,
                                    const StabilityCondition& sigma,
                                    int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument("verify_free_proper: n_max must be >= 1");
    }
    const IsometryReport report = exact_report(alpha);
    FreeProperReport out;
    out.applicable = report.eventual_displacement > Rational(0);
    out.epsilon = report.eventual_displacement.to_double() / 4.0;
    out.min_separation = std::numeric_limits<double>::infinity();
    StabilityCondition current = sigma;
    for (int n = 1; n <= n_max; ++n) {
        current = act(alpha, current);
        out.min_separation =
            std::min(out.min_separation, bridgeland_distance(sigma, current));
    }
    out.separated = !out.applicable ||
                    out.min_separation >= 2.0 * out.epsilon - 1e-12;
    return out;
}

QuotientBoundReport verify_quotient_bounds(const AutoEquivalence& alpha,
                                           const StabilityCondition& sigma,
                                           int n_max) {
    if (n_max < 1) {
        throw std::invalid_argument(
            "verify_quotient_bounds: n_max must be >= 1");
    }
    const IsometryReport report = exact_report(alpha);
    Rational max_rate = report.orbits.front().rate;
    Rational min_rate = max_rate;
    for (const OrbitData& orbit : report.orbits) {
        max_rate = std::max(max_rate, orbit.rate);
        min_rate = std::min(min_rate, orbit.rate);
    }

    QuotientBoundReport out;
    out.lower_bound = (max_rate - min_rate) * Rational(1, 2);
    out.upper_bound = report.eventual_displacement;
    out.ratios.reserve(n_max);
    const QuotientPoint base(sigma);
    StabilityCondition current = sigma;
    double infimum = std::numeric_limits<double>::infinity();
    for (int n = 1; n <= n_max; ++n) {
        current = act(alpha, current);
        const double ratio = quotient_distance(base, QuotientPoint(current)) / n;
        out.ratios.push_back(ratio);
        infimum = std::min(infimum, ratio);
    }
    out.estimate = infimum;
    out.max_violation = std::max(
        {0.0, out.lower_bound.to_double() - out.estimate,
         out.estimate - out.upper_bound.to_double()});
    return out;
}

ConjugationReport conjugation_invariance_check(
    const AutoEquivalence& alpha, const AutoEquivalence& beta,
    const std::vector<double>& grid) {
    if (alpha.simple_count() != beta.simple_count()) {
        throw std::invalid_argument(
            "conjugation_invariance_check: size mismatch");
    }
    const AutoEquivalence conjugate =
        alpha.inverse().compose(beta.compose(alpha));

    ConjugationReport out;
    out.max_entropy_gap = 0.0;
    for (double t : grid) {
        out.max_entropy_gap = std::max(
            out.max_entropy_gap, std::abs(mass_growth_exact(conjugate, t) -
                                          mass_growth_exact(beta, t)));
    }
    const IsometryReport a = exact_report(conjugate);
    const IsometryReport b = exact_report(beta);
    out.displacement_equal =
        a.eventual_displacement == b.eventual_displacement &&
        a.translation_length == b.translation_length;
    return out;
}

}  // namespace stabdyn
