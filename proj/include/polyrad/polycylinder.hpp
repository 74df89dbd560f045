#pragma once

// Polycylindrical domains B_1 x ... x B_n, their generalized inner radii, and
// the functional J_m(gamma) = R^gamma(B_0, A_0) prod_k R(B_k, A_k).

#include <cstddef>
#include <string>
#include <vector>

#include "polyrad/complex_geometry.hpp"
#include "polyrad/conformal_radius.hpp"
#include "polyrad/ray_systems.hpp"
#include "polyrad/wos.hpp"

namespace polyrad {

struct PolyDomain {
    std::vector<PlanarDomain> coords;

    std::size_t n() const noexcept { return coords.size(); }
};

struct PolyPoint {
    std::vector<ComplexPoint> coords;

    std::size_t n() const noexcept { return coords.size(); }
};

enum class RadiiMethod { analytic, monte_carlo };

struct RadiusOptions {
    RadiiMethod method = RadiiMethod::analytic;
    WosParams wos{};
};

/// Inner radius by the requested method.
RadiusValue evaluate_radius(const PlanarDomain& domain, const ComplexPoint& a, const RadiusOptions& options);

/// [prod_{k=1}^{p} r(B_k, a_k)]^(1/p) over the first p coordinates. The log
/// standard errors of Monte Carlo radii add in quadrature with weight 1/p.
RadiusValue generalized_inner_radius(const PolyDomain& d, const PolyPoint& a, std::size_t p,
                                     const RadiusOptions& options = {});

/// Same, over an arbitrary nonempty subset of zero-based coordinate indices.
RadiusValue generalized_inner_radius_subset(const PolyDomain& d, const PolyPoint& a,
                                            const std::vector<std::size_t>& coordinates,
                                            const RadiusOptions& options = {});

/// Points A_0..A_m and domains B_0..B_m in C^n. A_0 is the origin.
struct PolyConfiguration {
    double gamma = 1.0;
    std::vector<PolyPoint> points;
    std::vector<PolyDomain> domains;
    RadiiMethod radii_method = RadiiMethod::analytic;
    WosParams wos{};

    std::size_t m() const noexcept { return points.empty() ? 0 : points.size() - 1; }
    std::size_t n() const noexcept { return points.empty() ? 0 : points.front().n(); }

    /// The ray points A_1..A_m as a poly ray system; throws if they are not one.
    PolyRaySystem ray_system() const;
};

/// Structural validity: grid shape, A_0 = 0, A_k in B_k, per-coordinate
/// pairwise disjointness (exact or sampled), and A_1..A_m forming a ray system (a_1 = 1, increasing arguments).
struct ConfigurationCheck {
    bool ok = true;
    std::vector<std::string> failures;
};

ConfigurationCheck check_configuration(const PolyConfiguration& c);

/// Throws ConfigurationError naming the first failed constraint.
void require_valid(const PolyConfiguration& c);

/// radii[k][p] = r(B_p^(k), a_p^(k)), k = 0..m. Monte Carlo radii use the
/// seed derived from (wos.seed, k, p).
using RadiiGrid = std::vector<std::vector<RadiusValue>>;
RadiiGrid evaluate_radii(const PolyConfiguration& c);

struct JValue {
    double value = 0.0;
    double log_value = 0.0;
    double log_std_error = 0.0;
};

JValue j_functional(const PolyConfiguration& c);
JValue j_functional(const PolyConfiguration& c, const RadiiGrid& radii);

/// J_p = r^gamma(B_p^(0), 0) prod_k r(B_p^(k), a_p^(k)), p = 1..n, with
/// [prod_p J_p]^(1/n) = J.
std::vector<JValue> decompose_j(const PolyConfiguration& c);
std::vector<JValue> decompose_j(const PolyConfiguration& c, const RadiiGrid& radii);

/// Coordinate p of every point and domain as a planar (n = 1) configuration.
PolyConfiguration coordinate_slice(const PolyConfiguration& c, std::size_t p);

}  // namespace polyrad
