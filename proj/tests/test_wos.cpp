#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstring>

#include "polyrad/conformal_radius.hpp"
#include "polyrad/error.hpp"
#include "polyrad/wos.hpp"
#include "support.hpp"

using namespace polyrad;
using testing::kPi;

namespace {

WosParams params(std::size_t walks, double eps = 1e-4, std::uint64_t seed = kDefaultSeed) {
    WosParams p;
    p.walks = walks;
    p.epsilon_shell = eps;
    p.seed = seed;
    return p;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("unit disk at the centre is exact") {
    for (const double eps : {1e-2, 1e-3, 1e-4}) {
        const WosEstimate e = wos_inner_radius(PlanarDomain::disk(0.0, 1.0), Complex(0.0, 0.0), params(2000, eps));
        CHECK(std::abs(e.radius - 1.0) <= 5 * eps);
        CHECK(e.truncated_walks == 0);
    }
}

TEST_CASE("estimates cover the closed forms") {
    // 99.9% intervals at 2e4 walks; the acceptance run uses 1e5 walks at 99%
    for (const auto& f : testing::radius_fixtures()) {
        CAPTURE(f.name);
        const WosEstimate e = wos_inner_radius(f.domain, f.point, params(20000));
        CHECK(e.covers(f.reference, 3.29));
        CHECK(e.radius_ci_low <= e.radius);
        CHECK(e.radius <= e.radius_ci_high);
    }
}

TEST_CASE("bounded annular sector sits between its inscribed disk and the unbounded sector") {
    const PlanarDomain bounded = PlanarDomain::annular_sector(0.0, 0.0, 1.2, 0.5, 2.0);
    const Complex a(1.0, 0.1);
    const WosEstimate e = wos_inner_radius(bounded, a, params(20000));
    const double upper = inner_radius_analytic(PlanarDomain::annular_sector(0.0, 0.0, 1.2, 0.5), a).value;
    const double lower = bounded.dist_to_boundary(a);
    CHECK(e.radius_ci_high > lower);
    CHECK(e.radius_ci_low < upper);
    CHECK(e.radius > lower);
    CHECK(e.radius < upper);
}

TEST_CASE("direct walks in a truncated half-plane") {
    WosParams p = params(100000);
    p.mode = WalkMode::direct;
    p.truncation_radius = 1000.0;
    const WosEstimate e = wos_inner_radius(PlanarDomain::half_plane(0.0, 0.0), Complex(1.0, 0.0), p);
    // truncation at R lowers the radius by a relative O(1/R^2)
    CHECK(e.covers(2.0, 3.0));

    p.truncation_radius = kInf;
    CHECK_THROWS_AS(wos_inner_radius(PlanarDomain::half_plane(0.0, 0.0), Complex(1.0, 0.0), p), InvalidArgument);
}

TEST_CASE("direct walks in a bounded domain match transport") {
    WosParams p = params(20000);
    p.mode = WalkMode::direct;
    const PlanarDomain d = PlanarDomain::disk(Complex(0.2, 0.1), 1.3);
    const WosEstimate e = wos_inner_radius(d, Complex(0.6, -0.3), p);
    CHECK(e.covers(inner_radius_analytic(d, Complex(0.6, -0.3)).value, 3.29));
}

TEST_CASE("determinism") {
    const PlanarDomain d = PlanarDomain::annular_sector(0.0, 0.3, 1.4, 0.5);
    const Complex a = std::polar(1.2, 0.4);
    const WosEstimate base = wos_inner_radius(d, a, params(5000));
    const WosEstimate again = wos_inner_radius(d, a, params(5000));
    CHECK(same_bits(base.mean_log, again.mean_log));
    CHECK(same_bits(base.stderr_log, again.stderr_log));

    for (const unsigned threads : {2U, 3U, 8U}) {
        for (const std::size_t batch : {std::size_t{0}, std::size_t{1}, std::size_t{7}, std::size_t{1000}}) {
            WosParams p = params(5000);
            p.threads = threads;
            p.batch_size = batch;
            const WosEstimate e = wos_inner_radius(d, a, p);
            CHECK(same_bits(base.mean_log, e.mean_log));
            CHECK(same_bits(base.stderr_log, e.stderr_log));
            CHECK(same_bits(base.mean_steps, e.mean_steps));
        }
    }
    const WosEstimate other = wos_inner_radius(d, a, params(5000, 1e-4, kDefaultSeed + 1));
    CHECK_FALSE(same_bits(base.mean_log, other.mean_log));
}

TEST_CASE("seed derivation") {
    CHECK(derive_seed(1, 2) == derive_seed(1, 2));
    CHECK(derive_seed(1, 2) != derive_seed(2, 1));
    CHECK(derive_seed(1, 2) != derive_seed(1, 3));
}

TEST_CASE("bias shrinks with the shell width") {
    const PlanarDomain d = PlanarDomain::disk(0.0, 1.0);
    const Complex a(0.5, 0.0);
    const double exact = std::log(0.75);
    for (const double eps : {1e-2, 1e-3, 1e-4}) {
        const WosEstimate e = wos_inner_radius(d, a, params(50000, eps));
        CAPTURE(eps);
        CHECK(std::abs(e.mean_log - exact) <= 4 * e.stderr_log + 5 * eps);
    }
}

TEST_CASE("failures") {
    const PlanarDomain d = PlanarDomain::disk(0.0, 1.0);
    CHECK_THROWS_AS(wos_inner_radius(d, Complex(2.0, 0.0), params(10)), NotInteriorError);
    CHECK_THROWS_AS(wos_inner_radius(d, Complex(0.5, 0.0), params(0)), InvalidArgument);
    CHECK_THROWS_AS(wos_inner_radius(d, Complex(0.5, 0.0), params(10, 0.0)), InvalidArgument);
    CHECK_THROWS_AS(wos_inner_radius(PlanarDomain::half_plane(0.0, 0.0), ComplexPoint::infinity(), params(10)),
                    NotInteriorError);
    WosParams p = params(1000);
    p.max_steps = 2;
    CHECK_THROWS_AS(wos_inner_radius(d, Complex(0.5, 0.0), p), WosError);

    SUBCASE("a few truncated walks are tolerated") {
        WosParams q = params(1000);
        q.max_steps = 60;
        const WosEstimate e = wos_inner_radius(d, Complex(0.5, 0.0), q);
        CHECK(e.truncated_walks <= 10);
    }
}

TEST_CASE("to_radius_value") {
    const WosEstimate e = wos_inner_radius(PlanarDomain::disk(0.0, 2.0), Complex(1.0, 0.0), params(2000));
    const RadiusValue r = to_radius_value(e);
    CHECK(r.method == RadiusMethod::monte_carlo);
    CHECK(r.value == e.radius);
    CHECK(r.log_std_error == e.stderr_log);
    CHECK(r.std_error == doctest::Approx(e.radius * e.stderr_log));
}
