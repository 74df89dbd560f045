#pragma once

// Inner (conformal) radius r(B, a): |f'(0)| for the conformal map f of the
// unit disk onto B with f(0) = a; equivalently exp of the regular part of the
// Green's function of B at a. At a = infinity, r(B, inf) = lim |z| exp(-g(z, inf)).

#include <string_view>

#include "polyrad/complex_geometry.hpp"

namespace polyrad {

enum class RadiusMethod { analytic, transported, monte_carlo };

std::string_view to_string(RadiusMethod method) noexcept;

struct RadiusValue {
    double value = 0.0;
    RadiusMethod method = RadiusMethod::analytic;
    double std_error = 0.0;      ///< standard error of `value`; 0 unless Monte Carlo
    double log_std_error = 0.0;  ///< standard error of log(value)
};

/// Closed-form inner radius for the catalog:
///   Disk(c, R)                 (R^2 - |a - c|^2) / R
///   ExteriorDisk(c, R)         (|a - c|^2 - R^2) / R, and R at infinity
///   HalfPlane                  2 dist(a, boundary)
///   Sector, opening t          2 (t / pi) d on the bisector at distance d;
///                              power map + half-plane off the bisector
///   AnnularSector(rin, inf)    power map, z -> (z - 1/z) / 2, half-plane
///   MobiusImage                transported through |T'|
/// Throws NotInteriorError when a is not interior and NoAnalyticFormula for
/// bounded annular sectors.
RadiusValue inner_radius_analytic(const PlanarDomain& domain, const ComplexPoint& a);

/// r(T(B), T(a)) = |T'(a)| r(B, a) for finite a; throws PoleError at the pole.
RadiusValue transport_radius(const RadiusValue& base, const MobiusMap& map, const ComplexPoint& a);

}  // namespace polyrad
