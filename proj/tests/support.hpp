#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "polyrad/complex_geometry.hpp"
#include "polyrad/polycylinder.hpp"
#include "polyrad/ray_systems.hpp"
#include "reference_values.hpp"

namespace testing {

using polyrad::Complex;
using polyrad::ComplexPoint;
using polyrad::PlanarDomain;

inline constexpr double kPi = std::numbers::pi;

inline double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

struct RadiusFixture {
    std::string name;
    PlanarDomain domain;
    ComplexPoint point;
    double reference;
};

/// Domains and points matching reference::kRadii, plus the closed-form cases.
inline std::vector<RadiusFixture> radius_fixtures() {
    using polyrad::MobiusMap;
    std::vector<RadiusFixture> out{
        {"disk_off_center", PlanarDomain::disk({1.0, 1.0}, 0.7), Complex(1.2, 0.9), 0.0},
        {"exterior_disk_finite", PlanarDomain::exterior_disk(0.5, 0.8), Complex(2.0, -1.0), 0.0},
        {"half_plane_tilted", PlanarDomain::half_plane({1.0, 1.0}, 2.0), Complex(0.5, 2.0), 0.0},
        {"sector_off_bisector", PlanarDomain::sector(0.3, 1.0, 2.2), 0.3 + std::polar(1.2, 1.6), 0.0},
        {"sector_reflex", PlanarDomain::sector(0.0, kPi, 1.5 * kPi), Complex(-1.0, 0.3), 0.0},
        {"annular_sector_bisector", PlanarDomain::annular_sector(0.0, 0.0, 2.0 * kPi / 5.0, 0.5), Complex(1.0, 0.0),
         0.0},
        {"annular_sector_off_bisector", PlanarDomain::annular_sector(0.0, 0.7, 1.3, 0.4), std::polar(1.1, 1.05),
         0.0},
        {"annular_sector_wide", PlanarDomain::annular_sector(0.25, 0.2, 2.5, 0.6), Complex(1.5, 0.5), 0.0},
        {"mobius_sector",
         PlanarDomain::mobius_image(PlanarDomain::sector(0.0, 0.0, kPi / 2.0), MobiusMap(1.0, 1.0, 1.0, 3.0)),
         MobiusMap(1.0, 1.0, 1.0, 3.0).apply(Complex(1.0, 0.2)), 0.0},
        {"mobius_half_plane",
         PlanarDomain::mobius_image(PlanarDomain::half_plane(0.0, 0.0),
                                    MobiusMap(0.0, Complex(0.0, 1.0), 1.0, -2.0)),
         MobiusMap(0.0, Complex(0.0, 1.0), 1.0, -2.0).apply(Complex(0.5, 0.5)), 0.0},
    };
    for (std::size_t i = 0; i < out.size(); ++i) out[i].reference = reference::kRadii.at(i).value;
    out.push_back({"disk_unit_center", PlanarDomain::disk(0.0, 1.0), Complex(0.0, 0.0), 1.0});
    out.push_back({"disk_radius_two", PlanarDomain::disk(0.0, 2.0), Complex(1.0, 0.0), 1.5});
    out.push_back({"half_plane_right", PlanarDomain::half_plane(0.0, 0.0), Complex(1.0, 0.0), 2.0});
    out.push_back({"sector_quadrant", PlanarDomain::sector(0.0, 0.0, kPi / 2.0), Complex(1.0, 0.0), 1.0});
    out.push_back({"exterior_disk_infinity", PlanarDomain::exterior_disk({0.5, -0.5}, 0.8),
                   ComplexPoint::infinity(), 0.8});
    return out;
}

/// Ray points at the m-th roots of unity, B_k = Disk(a_k, rk), B_0 = Disk(0, r0),
/// replicated in n coordinates.
inline polyrad::PolyConfiguration disk_configuration(std::size_t m, std::size_t n, double r0, double rk,
                                                     double gamma) {
    polyrad::PolyConfiguration c;
    c.gamma = gamma;
    const polyrad::RaySystem roots = polyrad::RaySystem::roots_of_unity(m);
    c.points.resize(m + 1);
    c.domains.resize(m + 1);
    for (std::size_t p = 0; p < n; ++p) {
        c.points[0].coords.emplace_back(0.0, 0.0);
        c.domains[0].coords.push_back(PlanarDomain::disk(0.0, r0));
        for (std::size_t k = 1; k <= m; ++k) {
            c.points[k].coords.emplace_back(roots[k - 1]);
            c.domains[k].coords.push_back(PlanarDomain::disk(roots[k - 1], rk));
        }
    }
    return c;
}

/// Small seeded generator for property tests.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    Complex complex_in_box(double half) { return {uniform(-half, half), uniform(-half, half)}; }

    /// m points with a_1 > 0 real and strictly increasing arguments below 2 pi,
    /// consecutive arguments (cyclically) at least `min_gap` apart.
    polyrad::RaySystem ray_system(std::size_t m, double min_modulus = 0.2, double max_modulus = 5.0,
                                  double min_gap = 0.05) {
        std::vector<double> args{0.0};
        while (args.size() < m) {
            const double t = uniform(min_gap, 2.0 * kPi - min_gap);
            if (std::none_of(args.begin(), args.end(), [&](double s) { return std::abs(s - t) < min_gap; }))
                args.push_back(t);
        }
        std::sort(args.begin(), args.end());
        std::vector<Complex> pts;
        for (std::size_t k = 0; k < m; ++k) {
            const double rho = uniform(min_modulus, max_modulus);
            pts.push_back(k == 0 ? Complex(rho, 0.0) : std::polar(rho, args[k]));
        }
        return polyrad::RaySystem(std::move(pts));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing
