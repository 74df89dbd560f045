#pragma once

// JSON encodings shared by the library and the CLI.
//
//   point           [re, im] or "inf"
//   disk            {"shape": "disk", "center": [re, im], "radius": r}
//   exterior_disk   {"shape": "exterior_disk", "center": [re, im], "radius": r}
//   half_plane      {"shape": "half_plane", "point": [re, im], "normal_angle": t}
//   sector          {"shape": "sector", "vertex": [re, im], "bisector": t, "opening": t}
//   annular_sector  {"shape": "annular_sector", "vertex": [re, im], "bisector": t, "opening": t,
//                    "inner_radius": r, "outer_radius": r or "inf"}
//   mobius_image    {"shape": "mobius_image", "base": <domain>,
//                    "map": {"a": [re, im], "b": [re, im], "c": [re, im], "d": [re, im]}}
//   ray system      {"points": [[re, im], ...]}
//   poly ray system {"columns": [[[re, im], ...], ...]}   (one column per coordinate)
//   configuration   {"gamma": g, "radii_method": "analytic" | "monte_carlo",
//                    "points": [[pt, ...n], ...m+1], "domains": [[dom, ...n], ...m+1],
//                    "wos": {"walks": N, "epsilon_shell": e, "max_steps": S, "seed": s}}

#include <string>
#include <vector>

#include "json.hpp"
#include "polyrad/complex_geometry.hpp"
#include "polyrad/polycylinder.hpp"
#include "polyrad/ray_systems.hpp"
#include "polyrad/theorem.hpp"
#include "polyrad/wos.hpp"

namespace polyrad {

using Json = nlohmann::ordered_json;

Json point_to_json(const ComplexPoint& z);
ComplexPoint point_from_json(const Json& j);

Json map_to_json(const MobiusMap& map);
MobiusMap map_from_json(const Json& j);

Json domain_to_json(const PlanarDomain& domain);
PlanarDomain domain_from_json(const Json& j);

Json ray_system_to_json(const RaySystem& s);
RaySystem ray_system_from_json(const Json& j);

Json poly_ray_system_to_json(const PolyRaySystem& ps);
PolyRaySystem poly_ray_system_from_json(const Json& j);

Json wos_params_to_json(const WosParams& p);
/// Missing keys keep the values of `defaults`.
WosParams wos_params_from_json(const Json& j, const WosParams& defaults = {});

Json configuration_to_json(const PolyConfiguration& c);
PolyConfiguration configuration_from_json(const Json& j);

Json radius_to_json(const RadiusValue& r);
Json wos_estimate_to_json(const WosEstimate& e);
Json bound_to_json(const BoundValue& b);
Json report_to_json(const VerificationReport& r);

/// Parses text, turning syntax errors into ParseError with the byte position.
Json parse_json(const std::string& text);

/// Column order of sweep CSV output.
inline constexpr const char* kSweepCsvHeader = "trial,m,n,gamma,j,stderr,bound,slack,holds";

std::string sweep_csv(const SweepResult& result);
/// One JSON object per trial, newline separated.
std::string sweep_json_lines(const SweepResult& result);

/// Shortest decimal that round-trips the double.
std::string format_double(double x);

}  // namespace polyrad
