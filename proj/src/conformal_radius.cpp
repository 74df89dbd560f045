#include "polyrad/conformal_radius.hpp"

#include <cmath>
#include <numbers>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

RadiusValue analytic(double value) {
    if (!(value > 0.0) || !std::isfinite(value)) throw OverflowError("inner radius is not a finite positive number");
    return {value, RadiusMethod::analytic, 0.0, 0.0};
}

// Sector of opening t at a point on its bisector, distance d from the vertex.
double sector_on_bisector(double opening, double d) { return 2.0 * (opening / std::numbers::pi) * d; }

// General point: u = w^(pi/t) maps the sector onto Re u > 0, where r = 2 Re u.
double sector_by_power_map(const Complex& rel, double bisector, double opening) {
    const double beta = std::numbers::pi / opening;
    const Complex u = std::pow(rel * std::polar(1.0, -bisector), beta);
    const double derivative = beta * std::abs(u) / std::abs(rel);
    return 2.0 * u.real() / derivative;
}

double sector_radius(const Complex& rel, double bisector, double opening) {
    if (std::arg(rel * std::polar(1.0, -bisector)) == 0.0) return sector_on_bisector(opening, std::abs(rel));
    return sector_by_power_map(rel, bisector, opening);
}

// zeta = (w / rin)^(pi/t) takes the unbounded annular sector onto
// {Re zeta > 0, |zeta| > 1}, and u = (zeta - 1/zeta) / 2 takes that onto Re u > 0.
double unbounded_annular_sector_radius(const AnnularSector& s, const Complex& rel) {
    const double beta = std::numbers::pi / s.opening;
    const Complex zeta = std::pow(rel * std::polar(1.0, -s.bisector) / s.inner_radius, beta);
    const Complex u = 0.5 * (zeta - 1.0 / zeta);
    const double dzeta = beta * std::abs(zeta) / std::abs(rel);
    const double du = 0.5 * std::abs(1.0 + 1.0 / (zeta * zeta));
    return 2.0 * u.real() / (du * dzeta);
}

double radius_value(const PlanarDomain& domain, const ComplexPoint& a);

double mobius_image_radius(const MobiusImage& img, const ComplexPoint& a) {
    const MobiusMap& t = img.map;
    const ComplexPoint b = t.inverse().apply(a);
    const double base = radius_value(*img.base, b);
    const double det = std::abs(t.determinant());
    const double c2 = std::norm(t.c());
    if (a.is_finite() && b.is_finite()) return base * t.derivative_abs(b.value());
    if (a.is_infinite() && b.is_infinite()) return std::abs(t.a() / t.d()) * base;
    // T(z) = a/c - det / (c^2 (z - pole)) swaps a finite point with infinity.
    return det / (c2 * base);
}

double radius_value(const PlanarDomain& domain, const ComplexPoint& a) {
    if (!domain.contains(a)) throw NotInteriorError("point is not interior to the domain");
    return std::visit(
        [&a](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, MobiusImage>) {
                return mobius_image_radius(s, a);
            } else if constexpr (std::is_same_v<T, ExteriorDisk>) {
                if (a.is_infinite()) return s.radius;
                const double rho = std::abs(a.value() - s.center);
                return (rho - s.radius) * (rho + s.radius) / s.radius;
            } else if constexpr (std::is_same_v<T, Disk>) {
                const double rho = std::abs(a.value() - s.center);
                return (s.radius - rho) * (s.radius + rho) / s.radius;
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                return 2.0 * ((a.value() - s.point) * std::polar(1.0, -s.normal_angle)).real();
            } else if constexpr (std::is_same_v<T, Sector>) {
                return sector_radius(a.value() - s.vertex, s.bisector, s.opening);
            } else {
                if (std::isfinite(s.outer_radius))
                    throw NoAnalyticFormula("bounded annular sector has no closed-form inner radius");
                const Complex rel = a.value() - s.vertex;
                if (s.inner_radius == 0.0) return sector_radius(rel, s.bisector, s.opening);
                return unbounded_annular_sector_radius(s, rel);
            }
        },
        domain.shape());
}

}  // namespace

std::string_view to_string(RadiusMethod method) noexcept {
    switch (method) {
        case RadiusMethod::analytic:
            return "analytic";
        case RadiusMethod::transported:
            return "transported";
        case RadiusMethod::monte_carlo:
            return "monte_carlo";
    }
    return "unknown";
}

RadiusValue inner_radius_analytic(const PlanarDomain& domain, const ComplexPoint& a) {
    return analytic(radius_value(domain, a));
}

RadiusValue transport_radius(const RadiusValue& base, const MobiusMap& map, const ComplexPoint& a) {
    if (a.is_infinite()) throw InvalidArgument("transport_radius needs a finite evaluation point");
    const double scale = map.derivative_abs(a.value());
    return {base.value * scale, RadiusMethod::transported, base.std_error * scale, base.log_std_error};
}

}  // namespace polyrad
