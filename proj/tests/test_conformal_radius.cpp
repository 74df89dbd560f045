#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "polyrad/conformal_radius.hpp"
#include "polyrad/error.hpp"
#include "support.hpp"

using namespace polyrad;
using testing::Gen;
using testing::kPi;
using testing::rel_err;

namespace {

double radius(const PlanarDomain& d, const ComplexPoint& a) { return inner_radius_analytic(d, a).value; }

/// Random catalog domain together with an interior point.
std::pair<PlanarDomain, Complex> random_domain(Gen& gen) {
    for (;;) {
        const int kind = gen.integer(0, 5);
        const Complex c = gen.complex_in_box(2);
        PlanarDomain d = PlanarDomain::disk(c, gen.uniform(0.2, 2.0));
        switch (kind) {
            case 1: d = PlanarDomain::exterior_disk(c, gen.uniform(0.2, 2.0)); break;
            case 2: d = PlanarDomain::half_plane(c, gen.uniform(0, 2 * kPi)); break;
            case 3: d = PlanarDomain::sector(c, gen.uniform(0, 2 * kPi), gen.uniform(0.2, 2 * kPi - 0.1)); break;
            case 4:
                d = PlanarDomain::annular_sector(c, gen.uniform(0, 2 * kPi), gen.uniform(0.2, 2 * kPi - 0.1),
                                                 gen.uniform(0.1, 1.0));
                break;
            case 5:
                d = PlanarDomain::mobius_image(
                    PlanarDomain::sector(0.0, gen.uniform(0, 2 * kPi), gen.uniform(0.3, 3.0)),
                    MobiusMap(gen.complex_in_box(2), gen.complex_in_box(2), gen.complex_in_box(2),
                              gen.complex_in_box(2)));
                break;
            default: break;
        }
        const Complex a = c + gen.complex_in_box(3);
        if (d.contains(a) && d.dist_to_boundary(a) > 1e-3) return {d, a};
    }
}

}  // namespace

TEST_CASE("closed forms") {
    CHECK(radius(PlanarDomain::disk(0.0, 1.0), Complex(0.0, 0.0)) == 1.0);
    CHECK(radius(PlanarDomain::disk(0.0, 2.0), Complex(1.0, 0.0)) == doctest::Approx(1.5));
    CHECK(radius(PlanarDomain::sector(0.0, 0.0, kPi / 2), Complex(1.0, 0.0)) == doctest::Approx(1.0));
    CHECK(radius(PlanarDomain::half_plane(0.0, 0.0), Complex(3.0, 5.0)) == doctest::Approx(6.0));
    CHECK(radius(PlanarDomain::exterior_disk(1.0, 2.0), ComplexPoint::infinity()) == 2.0);
    CHECK(radius(PlanarDomain::exterior_disk(0.0, 1.0), Complex(2.0, 0.0)) == doctest::Approx(3.0));
    // a sector of opening pi is a half-plane
    CHECK(radius(PlanarDomain::sector(0.0, 0.0, kPi), Complex(0.7, 0.4)) == doctest::Approx(1.4));
    CHECK(inner_radius_analytic(PlanarDomain::disk(0.0, 1.0), Complex(0.0, 0.0)).method == RadiusMethod::analytic);
}

TEST_CASE("Mobius images") {
    const PlanarDomain unit = PlanarDomain::disk(0.0, 1.0);
    CHECK(radius(PlanarDomain::mobius_image(unit, MobiusMap::affine(2.0, 0.0)), Complex(0.0, 0.0)) ==
          doctest::Approx(2.0));
    CHECK(radius(PlanarDomain::mobius_image(unit, MobiusMap::affine(1.0, 5.0)), Complex(5.0, 0.0)) ==
          doctest::Approx(1.0));
    const MobiusMap inv = MobiusMap::inversion_about(2.0);
    const PlanarDomain img = PlanarDomain::mobius_image(unit, inv);
    CHECK(radius(img, inv.apply(Complex(0.0, 0.0))) == doctest::Approx(0.25));
    // the image is Disk(-2/3, 1/3)
    CHECK(radius(img, Complex(-0.5, 0.0)) == doctest::Approx(radius(PlanarDomain::disk(-2.0 / 3.0, 1.0 / 3.0), Complex(-0.5, 0.0))));

    SUBCASE("finite point sent to infinity and back") {
        // 1/z takes Disk(0, 1) at 0 to the exterior of the unit disk at infinity
        const PlanarDomain outside = PlanarDomain::mobius_image(unit, MobiusMap(0.0, 1.0, 1.0, 0.0));
        CHECK(radius(outside, ComplexPoint::infinity()) == doctest::Approx(1.0));
        CHECK(radius(outside, Complex(2.0, 0.0)) == doctest::Approx(radius(PlanarDomain::exterior_disk(0.0, 1.0), Complex(2.0, 0.0))));
        // and the exterior disk at infinity back to a disk at 0
        const PlanarDomain inside =
            PlanarDomain::mobius_image(PlanarDomain::exterior_disk(0.0, 2.0), MobiusMap(0.0, 1.0, 1.0, 0.0));
        CHECK(radius(inside, Complex(0.0, 0.0)) == doctest::Approx(0.5));
    }
    SUBCASE("infinity to infinity") {
        const PlanarDomain scaled =
            PlanarDomain::mobius_image(PlanarDomain::exterior_disk(0.0, 1.0), MobiusMap::affine(3.0, 1.0));
        CHECK(radius(scaled, ComplexPoint::infinity()) == doctest::Approx(3.0));
    }
    SUBCASE("transport_radius") {
        const RadiusValue base = inner_radius_analytic(unit, Complex(0.0, 0.0));
        const RadiusValue moved = transport_radius(base, inv, Complex(0.0, 0.0));
        CHECK(moved.value == doctest::Approx(0.25));
        CHECK(moved.method == RadiusMethod::transported);
        CHECK_THROWS_AS(transport_radius(base, inv, Complex(2.0, 0.0)), PoleError);
    }
}

TEST_CASE("reference fixtures") {
    for (const auto& f : testing::radius_fixtures()) {
        CAPTURE(f.name);
        CHECK(rel_err(radius(f.domain, f.point), f.reference) <= 1e-12);
    }
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(radius(PlanarDomain::disk(0.0, 1.0), Complex(1.0, 0.0)), NotInteriorError);
    CHECK_THROWS_AS(radius(PlanarDomain::disk(0.0, 1.0), ComplexPoint::infinity()), NotInteriorError);
    CHECK_THROWS_AS(radius(PlanarDomain::annular_sector(0.0, 0.0, 1.0, 0.5, 2.0), Complex(1.0, 0.0)),
                    NoAnalyticFormula);
}

TEST_CASE("sector formulas agree across the bisector") {
    const PlanarDomain s = PlanarDomain::sector(Complex(0.3, -0.2), 1.2, 2.0);
    const PlanarDomain a = PlanarDomain::annular_sector(Complex(0.3, -0.2), 1.2, 2.0, 0.4);
    for (const double d : {0.5, 1.0, 3.0}) {
        const Complex on = Complex(0.3, -0.2) + std::polar(d, 1.2);
        const Complex off = Complex(0.3, -0.2) + std::polar(d, 1.2 + 1e-9);
        CHECK(radius(s, on) == doctest::Approx(radius(s, off)).epsilon(1e-8));
        CHECK(radius(a, on) == doctest::Approx(radius(a, off)).epsilon(1e-8));
    }
}

TEST_CASE("annular sector tends to the sector as the inner radius shrinks") {
    const Complex a = std::polar(1.0, 0.2);
    const double full = radius(PlanarDomain::sector(0.0, 0.0, 1.0), a);
    CHECK(radius(PlanarDomain::annular_sector(0.0, 0.0, 1.0, 1e-6), a) == doctest::Approx(full).epsilon(1e-9));
    CHECK(radius(PlanarDomain::annular_sector(0.0, 0.0, 1.0, 0.0), a) == doctest::Approx(full).epsilon(1e-14));
}

TEST_CASE("property: similarity covariance") {
    Gen gen(101);
    for (int i = 0; i < 300; ++i) {
        auto [d, a] = random_domain(gen);
        if (d.kind() == "mobius_image") continue;
        const Complex factor = std::polar(gen.uniform(0.1, 5.0), gen.uniform(0, 2 * kPi));
        const Complex shift = gen.complex_in_box(5);
        const double lhs = radius(d.similarity_image(factor, shift), factor * a + shift);
        CHECK(rel_err(lhs, std::abs(factor) * radius(d, a)) <= 1e-9);
    }
}

TEST_CASE("property: Koebe bounds dist <= r <= 4 dist") {
    Gen gen(202);
    for (int i = 0; i < 1000; ++i) {
        auto [d, a] = random_domain(gen);
        CAPTURE(d.kind());
        const double dist = d.dist_to_boundary(a);
        const double r = radius(d, a);
        CHECK(r >= dist * (1 - 1e-9));
        // the quarter theorem needs a finite domain map, i.e. infinity outside B
        if (!d.contains(ComplexPoint::infinity())) CHECK(r <= 4 * dist * (1 + 1e-9));
    }
}

TEST_CASE("property: monotone under inclusion") {
    Gen gen(303);
    for (int i = 0; i < 300; ++i) {
        auto [d, a] = random_domain(gen);
        const double dist = d.dist_to_boundary(a);
        const double r_small = gen.uniform(0.1, 0.99) * dist;
        const PlanarDomain inner = PlanarDomain::disk(a, r_small);
        CHECK(radius(inner, a) <= radius(d, a) * (1 + 1e-12));
    }
    // nested sectors and annular sectors
    const Complex a = std::polar(1.5, 0.1);
    CHECK(radius(PlanarDomain::sector(0.0, 0.0, 0.8), a) < radius(PlanarDomain::sector(0.0, 0.0, 1.2), a));
    CHECK(radius(PlanarDomain::annular_sector(0.0, 0.0, 1.0, 0.9), a) <
          radius(PlanarDomain::annular_sector(0.0, 0.0, 1.0, 0.5), a));
    CHECK(radius(PlanarDomain::annular_sector(0.0, 0.0, 1.0, 0.5), a) < radius(PlanarDomain::sector(0.0, 0.0, 1.0), a));
}

TEST_CASE("property: transport through a Mobius map") {
    Gen gen(404);
    for (int i = 0; i < 300; ++i) {
        auto [d, b] = random_domain(gen);
        if (d.kind() == "mobius_image") continue;
        const MobiusMap t(gen.complex_in_box(2), gen.complex_in_box(2), gen.complex_in_box(2), gen.complex_in_box(2));
        if (std::abs(t.c() * b + t.d()) < 1e-2) continue;
        const ComplexPoint tb = t.apply(b);
        const double via_image = radius(PlanarDomain::mobius_image(d, t), tb);
        const double via_transport = transport_radius(inner_radius_analytic(d, b), t, b).value;
        CHECK(rel_err(via_image, via_transport) <= 1e-9);
    }
}
