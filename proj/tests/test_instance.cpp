#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <cmath>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "stabdyn/instance.hpp"
#include "stabdyn/random.hpp"

using namespace stabdyn;
using nlohmann::json;

TEST_CASE("polynomial round trip") {
    const LaurentPoly p = LaurentPoly::from_terms({{-3, 2}, {0, 1}, {5, 7}});
    CHECK(poly_from_json(poly_to_json(p)) == p);
    CHECK(poly_from_json(poly_to_json(LaurentPoly::zero())).is_zero());

    // Coefficients past 2^62 travel as decimal strings.
    const BigInt huge = (BigInt(1) << 200) + 17;
    const LaurentPoly big = LaurentPoly::monomial(-1, huge);
    const json encoded = poly_to_json(big);
    REQUIRE(encoded.is_array());
    CHECK(encoded[0][1].is_string());
    CHECK(poly_from_json(encoded) == big);

    CHECK_THROWS_AS(poly_from_json(json::parse("{}")), ValidationError);
    CHECK_THROWS_AS(poly_from_json(json::parse("[[0]]")), ValidationError);
    CHECK_THROWS_AS(poly_from_json(json::parse("[[0,-2]]")), ValidationError);
    CHECK_THROWS_AS(poly_from_json(json::parse("[[0,\"abc\"]]")),
                    ValidationError);
}

TEST_CASE("matrix round trip") {
    const LaurentMatrix m = random_laurent_matrix(11, 4, -5, 5);
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[]")), ValidationError);
    CHECK_THROWS_AS(matrix_from_json(json::parse("[[[[0,1]]],[[[0,1]]]]")),
                    ValidationError);  // ragged: 2 rows of width 1
}

TEST_CASE("stability round trip") {
    const StabilityCondition sigma =
        random_stability(3, 4, 0.5, 2.0, -1.0, 1.0);
    const StabilityCondition back = stability_from_json(stability_to_json(sigma));
    CHECK(back.masses == sigma.masses);
    CHECK(back.phases == sigma.phases);
    CHECK_THROWS_AS(
        stability_from_json(json::parse("{\"masses\":[1.0]}")),
        ValidationError);
    CHECK_THROWS_AS(
        stability_from_json(
            json::parse("{\"masses\":[0.0],\"phases\":[0.0]}")),
        ValidationError);
    CHECK_THROWS_AS(
        stability_from_json(
            json::parse("{\"masses\":[1.0],\"phases\":[0.0,1.0]}")),
        ValidationError);
}

TEST_CASE("graded object round trip") {
    const GradedObject e = random_graded_object(5, 3, 4, 4, 3);
    CHECK(graded_object_from_json(graded_object_to_json(e)) == e);
    CHECK_THROWS_AS(graded_object_from_json(json::parse("[]")),
                    ValidationError);
}

TEST_CASE("auto-equivalence round trip") {
    const AutoEquivalence alpha = random_auto_equivalence(9, 6, 5);
    CHECK(auto_equivalence_from_json(auto_equivalence_to_json(alpha)) ==
          alpha);
    CHECK_THROWS_AS(auto_equivalence_from_json(
                        json::parse("{\"permutation\":[0,0],\"shifts\":[1,2]}")),
                    ValidationError);
    CHECK_THROWS_AS(auto_equivalence_from_json(json::parse("[1,2]")),
                    ValidationError);
}

TEST_CASE("rational serialization") {
    const json j = rational_to_json(Rational(-3, 6));
    CHECK(j.at("num").get<std::int64_t>() == -1);
    CHECK(j.at("den").get<std::int64_t>() == 2);
}

TEST_CASE("isometry report serialization") {
    const AutoEquivalence alpha({1, 0, 2}, {1, 0, 2});
    const json j = isometry_report_to_json(exact_report(alpha));
    CHECK(j.at("order_k").get<int>() == 2);
    CHECK(j.at("orbit_totals") == json::array({1, 2}));
    CHECK(j.at("eventual_displacement").at("num").get<int>() == 2);
    CHECK(j.at("eventual_displacement").at("den").get<int>() == 1);
    CHECK(j.at("classification").get<std::string>() ==
          "parabolic-paper-convention");
    CHECK(j.at("orbits").size() == 2);
    CHECK(j.at("orbits")[1].at("power_exponent").get<int>() == 4);
    CHECK(j.at("witness").at("masses").size() == 3);
    CHECK(j.at("witness_attains").get<bool>());
}

TEST_CASE("grid specs") {
    const auto g = parse_grid_spec("0:1:3");
    REQUIRE(g.size() == 3);
    CHECK(g[0] == 0.0);
    CHECK(g[1] == doctest::Approx(0.5));
    CHECK(g[2] == 1.0);
    CHECK(parse_grid_spec("-10:10:201").size() == 201);
    CHECK_THROWS_AS(parse_grid_spec("junk"), ValidationError);
    CHECK_THROWS_AS(parse_grid_spec("0:1:3x"), ValidationError);
    CHECK_THROWS_AS(parse_grid_spec("1:0:5"), ValidationError);
    CHECK_THROWS_AS(parse_grid_spec("0:1:1"), ValidationError);
    CHECK_THROWS_AS(parse_grid_spec(""), ValidationError);
}

TEST_CASE("instance parsing") {
    Instance instance;
    instance.functor = random_auto_equivalence(4, 5, 3);
    instance.stability = random_stability(
        5, instance.functor->simple_count(), 0.5, 2.0, -1.0, 1.0);
    instance.grid = uniform_grid(-1.0, 1.0, 5);
    instance.seed = 42;
    const Instance back = parse_instance(instance_to_json(instance));
    CHECK(back.functor == instance.functor);
    CHECK(back.stability->masses == instance.stability->masses);
    CHECK(back.grid == instance.grid);
    CHECK(back.seed == instance.seed);
    CHECK(!back.matrix);

    // Grid may also be a spec string.
    json spec = instance_to_json(instance);
    spec["grid"] = "-1:1:5";
    CHECK(parse_instance(spec).grid == instance.grid);

    CHECK_THROWS_AS(parse_instance(json::parse("[]")), ValidationError);
    CHECK_THROWS_AS(parse_instance(json::parse("{}")), ValidationError);
    CHECK_THROWS_AS(parse_instance(json::parse("{\"version\":2}")),
                    ValidationError);
    CHECK_THROWS_AS(parse_instance(json::parse("{\"version\":1}")),
                    ValidationError);  // no targets
    CHECK_THROWS_AS(
        parse_instance(json::parse(
            "{\"version\":1,\"grid\":\"0:1:5\"}")),
        ValidationError);

    // Cross-field sizes must agree.
    json mismatched = instance_to_json(instance);
    mismatched["stability"] = json{{"masses", {1.0}}, {"phases", {0.0}}};
    if (instance.functor->simple_count() != 1) {
        CHECK_THROWS_AS(parse_instance(mismatched), ValidationError);
    }

    CHECK_THROWS_AS(load_instance("/nonexistent/path.json"), ValidationError);
}

TEST_CASE("double formatting") {
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-0.0) == "0");
    CHECK(format_double(-2.5) == "-2.5");
}

TEST_CASE("curve serialization") {
    LaurentMatrix m(1);
    m.at(0, 0) = LaurentPoly::from_terms({{-1, 1}, {1, 1}});
    const EntropyCurve curve =
        sample_entropy_curve(m, uniform_grid(-1.0, 1.0, 3));
    const std::string csv = curve_to_csv(curve);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "t,h,lower_basic,upper_basic,lower_sharp");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows
    CHECK(csv.find('\r') == std::string::npos);
    CHECK(csv.back() == '\n');
    // Row t = 0: h = lower_sharp = log 2, lower_basic = 0.
    const std::string middle = "0," + format_double(std::log(2.0)) + ",0," +
                               format_double(std::log(2.0)) + "," +
                               format_double(std::log(2.0));
    CHECK(csv.find(middle) != std::string::npos);
}

TEST_CASE("closed-form curve serialization") {
    const std::string csv = closed_form_curve_to_csv(
        make_spherical_twist(2), uniform_grid(-1.0, 1.0, 3));
    CHECK(csv.substr(0, csv.find('\n')) ==
          "t,h,lower_basic,upper_basic,lower_sharp");
    CHECK(csv.find("-1,1,1,1,1") != std::string::npos);
    CHECK_THROWS_AS(
        closed_form_curve_to_csv(make_serre_dimension(0.0, 1.0),
                                 uniform_grid(-1.0, 1.0, 3)),
        std::domain_error);
}
