#include "stabdyn/catalog.hpp"

#include <algorithm>
#include <cmath>

namespace stabdyn {

std::string closed_form_name(ClosedFormKind kind) {
    switch (kind) {
        case ClosedFormKind::Shift:
            return "shift";
        case ClosedFormKind::Gepner:
            return "gepner";
        case ClosedFormKind::Dhkk:
            return "dhkk";
        case ClosedFormKind::SphericalTwist:
            return "spherical-twist";
        case ClosedFormKind::SerreFractionalCY:
            return "serre-fractional-cy";
        case ClosedFormKind::SerreDimension:
            return "serre-dim";
    }
    throw std::invalid_argument("closed_form_name: unknown kind");
}

ClosedForm make_shift(std::int64_t n) {
    ClosedForm form;
    form.kind = ClosedFormKind::Shift;
    form.shift_n = n;
    return form;
}

ClosedForm make_gepner(double w) {
    if (!std::isfinite(w)) {
        throw std::invalid_argument("make_gepner: w must be a finite real");
    }
    ClosedForm form;
    form.kind = ClosedFormKind::Gepner;
    form.gepner_w = w;
    return form;
}

ClosedForm make_dhkk(double r, double f0) {
    if (!std::isfinite(r) || !(std::abs(r) > 1.0)) {
        throw std::invalid_argument("make_dhkk: need |r| > 1");
    }
    if (!std::isfinite(f0)) {
        throw std::invalid_argument("make_dhkk: f0 must be a finite real");
    }
    ClosedForm form;
    form.kind = ClosedFormKind::Dhkk;
    form.dhkk_r = r;
    form.dhkk_f0 = f0;
    return form;
}

ClosedForm make_spherical_twist(std::int64_t n) {
    if (n < 2) {
        throw std::invalid_argument("make_spherical_twist: need N >= 2");
    }
    ClosedForm form;
    form.kind = ClosedFormKind::SphericalTwist;
    form.twist_order = n;
    return form;
}

ClosedForm make_serre_fractional_cy(std::int64_t m, std::int64_t n) {
    if (n < 1) {
        throw std::invalid_argument("make_serre_fractional_cy: need n >= 1");
    }
    ClosedForm form;
    form.kind = ClosedFormKind::SerreFractionalCY;
    form.cy_m = m;
    form.cy_n = n;
    return form;
}

ClosedForm make_serre_dimension(double lower, double upper) {
    if (!std::isfinite(lower) || !std::isfinite(upper) || !(lower <= upper)) {
        throw std::invalid_argument(
            "make_serre_dimension: need finite lower <= upper");
    }
    ClosedForm form;
    form.kind = ClosedFormKind::SerreDimension;
    form.sdim_lower = lower;
    form.sdim_upper = upper;
    return form;
}

double closed_form_mass_growth(const ClosedForm& form, double t) {
    switch (form.kind) {
        case ClosedFormKind::Shift:
            return static_cast<double>(form.shift_n) * t;
        case ClosedFormKind::Gepner:
            return form.gepner_w * t;
        case ClosedFormKind::Dhkk:
            return std::log(std::abs(form.dhkk_r)) - form.dhkk_f0 * t;
        case ClosedFormKind::SphericalTwist:
            return t < 0.0
                       ? (1.0 - static_cast<double>(form.twist_order)) * t
                       : 0.0;
        case ClosedFormKind::SerreFractionalCY:
            return static_cast<double>(form.cy_m) /
                   static_cast<double>(form.cy_n) * t;
        case ClosedFormKind::SerreDimension:
            throw std::domain_error(
                "closed_form_mass_growth: serre-dim stores slopes only");
    }
    throw std::invalid_argument("closed_form_mass_growth: unknown kind");
}

ClosedFormSlopes closed_form_slopes(const ClosedForm& form) {
    switch (form.kind) {
        case ClosedFormKind::Shift: {
            const double n = static_cast<double>(form.shift_n);
            return {n, n};
        }
        case ClosedFormKind::Gepner:
            return {form.gepner_w, form.gepner_w};
        case ClosedFormKind::Dhkk:
            return {-form.dhkk_f0, -form.dhkk_f0};
        case ClosedFormKind::SphericalTwist:
            return {1.0 - static_cast<double>(form.twist_order), 0.0};
        case ClosedFormKind::SerreFractionalCY: {
            const double slope = static_cast<double>(form.cy_m) /
                                 static_cast<double>(form.cy_n);
            return {slope, slope};
        }
        case ClosedFormKind::SerreDimension:
            return {form.sdim_lower, form.sdim_upper};
    }
    throw std::invalid_argument("closed_form_slopes: unknown kind");
}

double closed_form_h_zero(const ClosedForm& form) {
    if (form.kind == ClosedFormKind::SerreDimension) {
        throw std::domain_error(
            "closed_form_h_zero: serre-dim stores slopes only");
    }
    return closed_form_mass_growth(form, 0.0);
}

ClosedFormDisplacement closed_form_displacement(const ClosedForm& form) {
    switch (form.kind) {
        case ClosedFormKind::Shift: {
            const double d = std::abs(static_cast<double>(form.shift_n));
            return {d, d, false};
        }
        case ClosedFormKind::Gepner: {
            const double d = std::abs(form.gepner_w);
            return {d, d, false};
        }
        case ClosedFormKind::Dhkk: {
            const double d = std::max(std::log(std::abs(form.dhkk_r)),
                                      std::abs(form.dhkk_f0));
            return {d, d, false};
        }
        case ClosedFormKind::SphericalTwist: {
            const double d = static_cast<double>(form.twist_order) - 1.0;
            return {d, d, false};
        }
        case ClosedFormKind::SerreFractionalCY: {
            // The n-th power is the shift [m], so n * d = |m| exactly.
            const double d = std::abs(static_cast<double>(form.cy_m)) /
                             static_cast<double>(form.cy_n);
            return {d, std::nullopt, false};
        }
        case ClosedFormKind::SerreDimension:
            return {std::max(-form.sdim_lower, form.sdim_upper), std::nullopt,
                    true};
    }
    throw std::invalid_argument("closed_form_displacement: unknown kind");
}

ConsistencyReport consistency_with_bounds(const ClosedForm& form,
                                          const std::vector<double>& grid) {
    ConsistencyReport report{0.0, 0.0, 0.0};
    if (form.kind == ClosedFormKind::SerreDimension) {
        // Only the slope ordering is meaningful here; the constructor
        // enforces it, so a constructed entry never violates.
        report.region_violation =
            std::max(0.0, form.sdim_lower - form.sdim_upper);
        report.max_violation = report.region_violation;
        return report;
    }
    const double h_zero = closed_form_h_zero(form);
    const ClosedFormSlopes slopes = closed_form_slopes(form);
    for (double t : grid) {
        const double h = closed_form_mass_growth(form, t);
        const double left = slopes.phi_minus * t;
        const double right = slopes.phi_plus * t;
        const double lower_basic = std::max(left, right);
        const double upper_basic = h_zero + lower_basic;
        const double lower_sharp =
            std::max(lower_basic, h_zero + std::min(left, right));
        report.region_violation =
            std::max({report.region_violation, lower_sharp - h,
                      h - upper_basic});
    }
    const double quotient_lower =
        std::max(h_zero, 0.5 * (slopes.phi_plus - slopes.phi_minus));
    report.sandwich_violation = std::max(
        0.0, quotient_lower - closed_form_displacement(form).displacement);
    report.max_violation =
        std::max(report.region_violation, report.sandwich_violation);
    return report;
}

}  // namespace stabdyn
