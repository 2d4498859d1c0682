#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "stabdyn/catalog.hpp"
#include "stabdyn/dynamics.hpp"
#include "stabdyn/perron.hpp"

using namespace stabdyn;

TEST_CASE("names") {
    CHECK(closed_form_name(ClosedFormKind::Shift) == "shift");
    CHECK(closed_form_name(ClosedFormKind::Gepner) == "gepner");
    CHECK(closed_form_name(ClosedFormKind::Dhkk) == "dhkk");
    CHECK(closed_form_name(ClosedFormKind::SphericalTwist) ==
          "spherical-twist");
    CHECK(closed_form_name(ClosedFormKind::SerreFractionalCY) ==
          "serre-fractional-cy");
    CHECK(closed_form_name(ClosedFormKind::SerreDimension) == "serre-dim");
}

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(make_dhkk(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(make_dhkk(-1.0, 2.0), std::invalid_argument);
    CHECK_NOTHROW(make_dhkk(-2.0, 0.0));
    CHECK_THROWS_AS(make_spherical_twist(1), std::invalid_argument);
    CHECK_NOTHROW(make_spherical_twist(2));
    CHECK_THROWS_AS(make_serre_fractional_cy(1, 0), std::invalid_argument);
    CHECK_NOTHROW(make_serre_fractional_cy(-3, 2));
    CHECK_THROWS_AS(make_serre_dimension(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("shift curve") {
    const ClosedForm zero = make_shift(0);
    const ClosedForm two = make_shift(2);
    for (double t : {-3.0, 0.0, 1.5}) {
        CHECK(closed_form_mass_growth(zero, t) == 0.0);
        CHECK(closed_form_mass_growth(two, t) == doctest::Approx(2.0 * t));
    }
    CHECK(closed_form_h_zero(two) == 0.0);
    const ClosedFormSlopes slopes = closed_form_slopes(two);
    CHECK(slopes.phi_minus == 2.0);
    CHECK(slopes.phi_plus == 2.0);
    const ClosedFormDisplacement d = closed_form_displacement(make_shift(-4));
    CHECK(d.displacement == 4.0);
    REQUIRE(d.translation_length.has_value());
    CHECK(*d.translation_length == 4.0);
    CHECK(!d.lower_bound_only);
}

TEST_CASE("shift matches the matrix dynamics") {
    for (std::int64_t n : {-3, 0, 2}) {
        const ClosedForm form = make_shift(n);
        const AutoEquivalence alpha = AutoEquivalence::shift_functor(3, n);
        const LaurentMatrix m = alpha.matrix();
        for (double t : {-5.0, -0.5, 0.0, 1.0, 5.0}) {
            CHECK(closed_form_mass_growth(form, t) ==
                  doctest::Approx(entropy_at(m, t)).epsilon(1e-12));
        }
        const IsometryReport report = exact_report(alpha);
        CHECK(report.eventual_displacement.to_double() ==
              doctest::Approx(closed_form_displacement(form).displacement));
    }
}

TEST_CASE("gepner curve") {
    const ClosedForm form = make_gepner(-0.75);
    for (double t : {-2.0, 0.0, 4.0}) {
        CHECK(closed_form_mass_growth(form, t) == doctest::Approx(-0.75 * t));
    }
    CHECK(closed_form_displacement(form).displacement ==
          doctest::Approx(0.75));
}

TEST_CASE("dhkk curve") {
    const ClosedForm form = make_dhkk(2.0, 1.0);
    for (double t : {-1.0, 0.0, 2.0}) {
        CHECK(closed_form_mass_growth(form, t) ==
              doctest::Approx(std::log(2.0) - t));
    }
    CHECK(closed_form_h_zero(form) == doctest::Approx(std::log(2.0)));
    const ClosedFormSlopes slopes = closed_form_slopes(form);
    CHECK(slopes.phi_minus == -1.0);
    CHECK(slopes.phi_plus == -1.0);
    // displacement max{log 2, 1} = 1.
    CHECK(closed_form_displacement(form).displacement == doctest::Approx(1.0));

    const ClosedForm wide = make_dhkk(-5.0, 0.25);
    CHECK(closed_form_displacement(wide).displacement ==
          doctest::Approx(std::log(5.0)));
}

TEST_CASE("spherical twist curve") {
    const ClosedForm form = make_spherical_twist(3);
    CHECK(closed_form_mass_growth(form, -2.0) == doctest::Approx(4.0));
    CHECK(closed_form_mass_growth(form, 0.0) == 0.0);
    CHECK(closed_form_mass_growth(form, 1.0) == 0.0);
    const ClosedFormSlopes slopes = closed_form_slopes(form);
    CHECK(slopes.phi_minus == -2.0);
    CHECK(slopes.phi_plus == 0.0);
    CHECK(closed_form_displacement(form).displacement == doctest::Approx(2.0));
}

TEST_CASE("fractional Calabi-Yau curve") {
    const ClosedForm form = make_serre_fractional_cy(3, 2);
    for (double t : {-2.0, 1.0}) {
        CHECK(closed_form_mass_growth(form, t) == doctest::Approx(1.5 * t));
    }
    const ClosedFormDisplacement d = closed_form_displacement(form);
    CHECK(d.displacement == doctest::Approx(1.5));
    CHECK(!d.translation_length.has_value());
    CHECK(!d.lower_bound_only);
}

TEST_CASE("serre dimension entry stores slopes only") {
    const ClosedForm form = make_serre_dimension(-1.5, 2.0);
    CHECK_THROWS_AS(closed_form_mass_growth(form, 0.0), std::domain_error);
    CHECK_THROWS_AS(closed_form_h_zero(form), std::domain_error);
    const ClosedFormSlopes slopes = closed_form_slopes(form);
    CHECK(slopes.phi_minus == -1.5);
    CHECK(slopes.phi_plus == 2.0);
    const ClosedFormDisplacement d = closed_form_displacement(form);
    CHECK(d.displacement == doctest::Approx(2.0));
    CHECK(d.lower_bound_only);
}

TEST_CASE("catalog consistency") {
    const auto grid = default_grid();
    for (std::int64_t n = 2; n <= 6; ++n) {
        CHECK(consistency_with_bounds(make_spherical_twist(n), grid)
                  .max_violation == 0.0);
    }
    for (std::int64_t n : {-3, 0, 1}) {
        CHECK(consistency_with_bounds(make_shift(n), grid).max_violation ==
              0.0);
    }
    CHECK(consistency_with_bounds(make_gepner(1.7), grid).max_violation ==
          0.0);
    CHECK(consistency_with_bounds(make_dhkk(2.0, 1.0), grid).max_violation ==
          0.0);
    CHECK(consistency_with_bounds(make_dhkk(-3.0, 0.2), grid)
              .max_violation == 0.0);
    CHECK(consistency_with_bounds(make_serre_fractional_cy(-3, 2), grid)
              .max_violation == 0.0);
    CHECK(consistency_with_bounds(make_serre_dimension(-1.0, 2.0), grid)
              .max_violation == 0.0);
}
