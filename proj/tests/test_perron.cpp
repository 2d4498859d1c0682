#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "stabdyn/laurent.hpp"
#include "stabdyn/perron.hpp"
#include "stabdyn/random.hpp"

using namespace stabdyn;

namespace {

LaurentMatrix cosh_matrix() {
    LaurentMatrix m(1);
    m.at(0, 0) = LaurentPoly::from_terms({{-1, 1}, {1, 1}});
    return m;
}

}  // namespace

TEST_CASE("spectral radius on pinned matrices") {
    CHECK(spectral_radius({{2.0}}) == doctest::Approx(2.0).epsilon(1e-12));
    // Periodic permutation matrix: the diagonal shift must still converge.
    CHECK(spectral_radius({{0.0, 1.0}, {1.0, 0.0}}) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK(spectral_radius({{1.0, 1.0}, {1.0, 0.0}}) ==
          doctest::Approx((1.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-12));
    // Reducible: the radius lives in one diagonal block.
    CHECK(spectral_radius({{1.0, 5.0}, {0.0, 2.0}}) ==
          doctest::Approx(2.0).epsilon(1e-12));
    CHECK(spectral_radius({{2.0, 0.0}, {0.0, 3.0}}) ==
          doctest::Approx(3.0).epsilon(1e-12));
    CHECK(spectral_radius({{0.0}}) == 0.0);
    CHECK(spectral_radius({{0.0, 1.0}, {0.0, 0.0}}) == 0.0);
}

TEST_CASE("spectral radius input validation") {
    CHECK_THROWS_AS(spectral_radius({}), std::invalid_argument);
    CHECK_THROWS_AS(spectral_radius({{1.0, 2.0}}), std::invalid_argument);
    CHECK_THROWS_AS(spectral_radius({{-1.0}}), std::invalid_argument);
    CHECK_THROWS_AS(spectral_radius({{std::nan("")}}), std::invalid_argument);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(spectral_radius({{inf}}), std::invalid_argument);
}

TEST_CASE("spectral radius survives extreme scales") {
    CHECK(spectral_radius({{1e-300}}) == doctest::Approx(1e-300));
    CHECK(spectral_radius({{1e300, 0.0}, {0.0, 1e300}}) ==
          doctest::Approx(1e300));
    // Wildly unbalanced two-cycle: the product of the off-diagonal weights
    // is 1, so the radius is exactly 1; a naive uniform shift by
    // 1e-3 * maxentry would absorb the answer completely.
    const double big = std::exp(50.0);
    CHECK(spectral_radius({{0.0, big}, {1.0 / big, 0.0}}) ==
          doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("spectral radius against independent oracles") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const int n = static_cast<int>(rng.uniform_int(1, 4));
        RealMatrix a(n, std::vector<double>(n, 0.0));
        for (auto& row : a) {
            for (double& v : row) {
                // Sparse nonnegative entries keep reducible cases frequent.
                v = rng.uniform() < 0.4 ? 0.0 : rng.uniform(0.0, 10.0);
            }
        }
        const double rho = spectral_radius(a);
        const double by_charpoly = oracles::charpoly_radius(a);
        const double by_blocks = oracles::blockwise_radius(a);
        CHECK(rho == doctest::Approx(by_charpoly).epsilon(1e-7));
        CHECK(rho == doctest::Approx(by_blocks).epsilon(1e-7));
        if (rho > 1e-6) {
            const double by_gelfand = oracles::gelfand_radius(a);
            CHECK(std::abs(std::log(by_gelfand) - std::log(rho)) <= 0.1);
        }
    }
}

TEST_CASE("entropy values") {
    LaurentMatrix mono(1);
    mono.at(0, 0) = LaurentPoly::monomial(3);
    for (double t : {-2.5, 0.0, 1.0, 7.0}) {
        CHECK(entropy_at(mono, t) == doctest::Approx(-3.0 * t).epsilon(1e-12));
    }
    for (double t : {-3.0, -0.5, 0.0, 2.0}) {
        CHECK(entropy_at(cosh_matrix(), t) ==
              doctest::Approx(std::log(std::exp(-t) + std::exp(t)))
                  .epsilon(1e-12));
        CHECK(entropy_at(LaurentMatrix::identity(3), t) ==
              doctest::Approx(0.0).epsilon(1e-12));
    }
    LaurentMatrix nil(2);
    nil.at(0, 1) = LaurentPoly::monomial(4);
    CHECK_THROWS_AS(entropy_at(nil, 0.0), NilpotentError);
}

TEST_CASE("entropy at extreme arguments stays finite") {
    // Degrees (5, -5) at t = -10 evaluate to e^{+-50}; the answer is the
    // geometric mean of the cycle, far below the largest entry.
    LaurentMatrix m(2);
    m.at(0, 1) = LaurentPoly::monomial(5);
    m.at(1, 0) = LaurentPoly::monomial(-5);
    CHECK(entropy_at(m, -10.0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(entropy_at(m, 10.0) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(entropy_at(m, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("asymptotic slopes") {
    const Slopes s = asymptotic_slopes(cosh_matrix());
    CHECK(s.phi_minus == -1.0);
    CHECK(s.phi_plus == 1.0);

    const Slopes id = asymptotic_slopes(LaurentMatrix::identity(2));
    CHECK(id.phi_minus == 0.0);
    CHECK(id.phi_plus == 0.0);

    LaurentMatrix mono(1);
    mono.at(0, 0) = LaurentPoly::monomial(3);
    const Slopes ms = asymptotic_slopes(mono);
    CHECK(ms.phi_minus == -3.0);
    CHECK(ms.phi_plus == -3.0);
    // Slopes are the curve's own asymptotics.
    CHECK(entropy_at(mono, 40.0) / 40.0 ==
          doctest::Approx(ms.phi_plus).epsilon(1e-6));
    CHECK(entropy_at(mono, -40.0) / -40.0 ==
          doctest::Approx(ms.phi_minus).epsilon(1e-6));

    LaurentMatrix nil(2);
    nil.at(0, 1) = LaurentPoly::monomial(4);
    CHECK_THROWS_AS(asymptotic_slopes(nil), NilpotentError);
}

TEST_CASE("grids") {
    const auto g = uniform_grid(0.0, 1.0, 3);
    REQUIRE(g.size() == 3);
    CHECK(g[0] == 0.0);
    CHECK(g[1] == doctest::Approx(0.5));
    CHECK(g[2] == 1.0);
    CHECK_THROWS_AS(uniform_grid(0.0, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(uniform_grid(1.0, 0.0, 5), std::invalid_argument);

    const auto d = default_grid();
    REQUIRE(d.size() == 201);
    CHECK(d.front() == -10.0);
    CHECK(d.back() == 10.0);
    CHECK(d[100] == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("curve sampling and envelope columns") {
    const auto grid = uniform_grid(-2.0, 2.0, 5);
    const EntropyCurve curve = sample_entropy_curve(cosh_matrix(), grid);
    REQUIRE(curve.samples.size() == 5);
    const EntropySample& s = curve.samples[0];  // t = -2
    CHECK(s.t == -2.0);
    CHECK(s.value == doctest::Approx(std::log(std::exp(2.0) + std::exp(-2.0))));
    CHECK(s.h_zero == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(s.slope_minus == -1.0);
    CHECK(s.slope_plus == 1.0);
    CHECK(lower_basic(s) == doctest::Approx(2.0));
    CHECK(upper_basic(s) == doctest::Approx(std::log(2.0) + 2.0));
    CHECK(lower_sharp(s) == doctest::Approx(2.0));
    // At t = 0 the sharp lower bound lifts to h(0).
    CHECK(lower_sharp(curve.samples[2]) ==
          doctest::Approx(std::log(2.0)).epsilon(1e-12));

    CHECK_THROWS_AS(sample_entropy_curve(cosh_matrix(), {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_entropy_curve(cosh_matrix(), {1.0, 1.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(sample_entropy_curve(cosh_matrix(), {2.0, 1.0}),
                    std::invalid_argument);
}

TEST_CASE("piecewise-linear bounds on pinned matrices") {
    const auto grid = uniform_grid(-2.0, 2.0, 5);
    CHECK(check_pl_bounds(cosh_matrix(), grid).max_violation <= 1e-9);

    // Monomial: the curve equals both bounds, h(0) = 0.
    LaurentMatrix mono(1);
    mono.at(0, 0) = LaurentPoly::monomial(2);
    const EntropyCurve curve = sample_entropy_curve(mono, grid);
    for (const EntropySample& s : curve.samples) {
        CHECK(s.value == doctest::Approx(lower_basic(s)).epsilon(1e-12));
        CHECK(s.value == doctest::Approx(upper_basic(s)).epsilon(1e-12));
    }
    CHECK(check_pl_bounds(curve).max_violation <= 1e-9);

    // Positive h(0): all-ones with one z on the diagonal.  The extreme
    // degrees then live on a fixed point, so the degree-range slopes are
    // the true asymptotic slopes and the bounds hold.
    LaurentMatrix mixed(2);
    mixed.at(0, 0) = LaurentPoly::monomial(1);
    mixed.at(0, 1) = LaurentPoly::constant(1);
    mixed.at(1, 0) = LaurentPoly::constant(1);
    mixed.at(1, 1) = LaurentPoly::constant(1);
    CHECK(entropy_at(mixed, 0.0) > 0.5);
    CHECK(check_pl_bounds(mixed, default_grid()).max_violation <= 1e-9);

    // Moving the z off the diagonal breaks the lower bound: the only way
    // to collect that z is a 2-cycle, so h decays like -t/2 as t -> -inf
    // while the degree-range slope predicts -t.  The checker must report
    // the gap rather than paper over it.
    LaurentMatrix offdiag(2);
    offdiag.at(0, 0) = LaurentPoly::constant(1);
    offdiag.at(0, 1) = LaurentPoly::monomial(1);
    offdiag.at(1, 0) = LaurentPoly::constant(1);
    offdiag.at(1, 1) = LaurentPoly::constant(1);
    CHECK(check_pl_bounds(offdiag, default_grid()).max_violation > 1.0);
}

TEST_CASE("piecewise-linear bounds on seeded matrices") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const LaurentMatrix m = random_laurent_matrix(seed, 4, -5, 5);
        const BoundReport report = check_pl_bounds(m, default_grid());
        CAPTURE(seed);
        CHECK(report.max_violation <= 1e-9);
    }
}

TEST_CASE("convexity") {
    const auto grid = uniform_grid(-5.0, 5.0, 41);
    CHECK(convexity_check(cosh_matrix(), grid));

    LaurentMatrix mono(1);
    mono.at(0, 0) = LaurentPoly::monomial(2);
    CHECK(convexity_check(mono, grid));

    LaurentMatrix mixed(2);
    mixed.at(0, 0) = LaurentPoly::constant(1);
    mixed.at(0, 1) = LaurentPoly::monomial(1);
    mixed.at(1, 0) = LaurentPoly::monomial(-1);
    mixed.at(1, 1) = LaurentPoly::constant(1);
    CHECK(convexity_check(mixed, grid));
    CHECK(convexity_defect(mixed, grid) <= 1e-9);

    CHECK_THROWS_AS(convexity_defect(mono, {0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("entropy power identity") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const LaurentMatrix m = random_laurent_matrix(seed, 3, -4, 4);
        const LaurentMatrix m2 = mat_pow(m, 2);
        const LaurentMatrix m3 = mat_pow(m, 3);
        for (double t : {-2.0, 0.0, 1.5}) {
            const double h = entropy_at(m, t);
            CAPTURE(seed);
            CAPTURE(t);
            CHECK(entropy_at(m2, t) == doctest::Approx(2.0 * h).epsilon(1e-8));
            CHECK(entropy_at(m3, t) == doctest::Approx(3.0 * h).epsilon(1e-8));
        }
    }
}

TEST_CASE("entropy shift identity") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const LaurentMatrix m = random_laurent_matrix(seed, 3, -4, 4);
        for (std::int64_t n : {-3, 1}) {
            // Composing with [n] multiplies the matrix by z^{-n}.
            const LaurentMatrix shifted =
                mat_mul(LaurentMatrix::diagonal_monomial(m.size(), -n), m);
            for (double t : {-2.0, 0.5}) {
                CAPTURE(seed);
                CHECK(entropy_at(shifted, t) ==
                      doctest::Approx(entropy_at(m, t) + n * t).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("entropy monotone in the coefficients") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const LaurentMatrix m = random_laurent_matrix(seed, 3, -4, 4);
        Rng rng(seed * 977 + 13);
        LaurentMatrix bumped = m;
        const int i = static_cast<int>(rng.uniform_int(0, m.size() - 1));
        const int j = static_cast<int>(rng.uniform_int(0, m.size() - 1));
        bumped.at(i, j).add_term(rng.uniform_int(-4, 4), 1);
        for (double t : {-1.5, 0.0, 2.0}) {
            CAPTURE(seed);
            CHECK(entropy_at(bumped, t) >= entropy_at(m, t) - 1e-10);
        }
    }
}

TEST_CASE("commuting subadditivity") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const LaurentMatrix m = random_laurent_matrix(seed, 3, -3, 3);
        const LaurentMatrix a = mat_pow(m, 2);
        const LaurentMatrix b = mat_pow(m, 3);
        REQUIRE(mat_mul(a, b) == mat_mul(b, a));
        for (double t : {-2.0, 0.0, 1.0}) {
            CAPTURE(seed);
            CHECK(entropy_at(mat_mul(a, b), t) <=
                  entropy_at(a, t) + entropy_at(b, t) + 1e-9);
        }
    }
}
