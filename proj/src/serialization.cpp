#include "polyrad/serialization.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <sstream>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) throw ParseError("expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) throw ParseError(std::string("missing key \"") + key + "\"");
    return *it;
}

double number(const Json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
    return j.get<double>();
}

double number_or_inf(const Json& j, const char* what) {
    if (j.is_null() || (j.is_string() && j.get<std::string>() == "inf")) return kInf;
    return number(j, what);
}

Json number_or_inf_to_json(double x) { return std::isinf(x) ? Json("inf") : Json(x); }

Complex complex_from_json(const Json& j) {
    const ComplexPoint p = point_from_json(j);
    if (p.is_infinite()) throw ParseError("expected a finite point");
    return p.value();
}

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

template <typename Fn>
auto translating(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    return std::string(buf.data(), res.ptr);
}

Json point_to_json(const ComplexPoint& z) {
    if (z.is_infinite()) return "inf";
    return complex_to_json(z.value());
}

ComplexPoint point_from_json(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ComplexPoint::infinity();
    if (!j.is_array() || j.size() != 2) throw ParseError("a point is [re, im] or \"inf\"");
    return {number(j[0], "real part"), number(j[1], "imaginary part")};
}

Json map_to_json(const MobiusMap& map) {
    return {{"a", complex_to_json(map.a())},
            {"b", complex_to_json(map.b())},
            {"c", complex_to_json(map.c())},
            {"d", complex_to_json(map.d())}};
}

MobiusMap map_from_json(const Json& j) {
    return {complex_from_json(field(j, "a")), complex_from_json(field(j, "b")), complex_from_json(field(j, "c")),
            complex_from_json(field(j, "d"))};
}

Json domain_to_json(const PlanarDomain& domain) {
    return std::visit(
        [&domain](const auto& s) -> Json {
            using T = std::decay_t<decltype(s)>;
            Json j;
            j["shape"] = std::string(domain.kind());
            if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, ExteriorDisk>) {
                j["center"] = complex_to_json(s.center);
                j["radius"] = s.radius;
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                j["point"] = complex_to_json(s.point);
                j["normal_angle"] = s.normal_angle;
            } else if constexpr (std::is_same_v<T, Sector>) {
                j["vertex"] = complex_to_json(s.vertex);
                j["bisector"] = s.bisector;
                j["opening"] = s.opening;
            } else if constexpr (std::is_same_v<T, AnnularSector>) {
                j["vertex"] = complex_to_json(s.vertex);
                j["bisector"] = s.bisector;
                j["opening"] = s.opening;
                j["inner_radius"] = s.inner_radius;
                j["outer_radius"] = number_or_inf_to_json(s.outer_radius);
            } else {
                j["base"] = domain_to_json(*s.base);
                j["map"] = map_to_json(s.map);
            }
            return j;
        },
        domain.shape());
}

PlanarDomain domain_from_json(const Json& j) {
    const Json& shape_field = field(j, "shape");
    if (!shape_field.is_string()) throw ParseError("\"shape\" must be a string");
    const std::string shape = shape_field.get<std::string>();
    if (shape == "disk")
        return PlanarDomain::disk(complex_from_json(field(j, "center")), number(field(j, "radius"), "radius"));
    if (shape == "exterior_disk")
        return PlanarDomain::exterior_disk(complex_from_json(field(j, "center")),
                                           number(field(j, "radius"), "radius"));
    if (shape == "half_plane")
        return PlanarDomain::half_plane(complex_from_json(field(j, "point")),
                                        number(field(j, "normal_angle"), "normal_angle"));
    if (shape == "sector")
        return PlanarDomain::sector(complex_from_json(field(j, "vertex")), number(field(j, "bisector"), "bisector"),
                                    number(field(j, "opening"), "opening"));
    if (shape == "annular_sector") {
        const double outer = j.contains("outer_radius") ? number_or_inf(j["outer_radius"], "outer_radius") : kInf;
        return PlanarDomain::annular_sector(complex_from_json(field(j, "vertex")),
                                            number(field(j, "bisector"), "bisector"),
                                            number(field(j, "opening"), "opening"),
                                            number(field(j, "inner_radius"), "inner_radius"), outer);
    }
    if (shape == "mobius_image")
        return PlanarDomain::mobius_image(domain_from_json(field(j, "base")), map_from_json(field(j, "map")));
    throw ParseError("unknown shape \"" + shape + "\"");
}

Json ray_system_to_json(const RaySystem& s) {
    Json pts = Json::array();
    for (const Complex& z : s.points()) pts.push_back(complex_to_json(z));
    return {{"points", pts}};
}

RaySystem ray_system_from_json(const Json& j) {
    const Json& pts = field(j, "points");
    if (!pts.is_array()) throw ParseError("\"points\" must be an array");
    std::vector<Complex> points;
    for (const Json& p : pts) points.push_back(complex_from_json(p));
    return RaySystem(std::move(points));
}

Json poly_ray_system_to_json(const PolyRaySystem& ps) {
    Json cols = Json::array();
    for (const RaySystem& column : ps.columns()) cols.push_back(ray_system_to_json(column)["points"]);
    return {{"columns", cols}};
}

PolyRaySystem poly_ray_system_from_json(const Json& j) {
    const Json& cols = field(j, "columns");
    if (!cols.is_array()) throw ParseError("\"columns\" must be an array");
    std::vector<RaySystem> columns;
    for (const Json& col : cols) columns.push_back(ray_system_from_json(Json{{"points", col}}));
    return PolyRaySystem(std::move(columns));
}

Json wos_params_to_json(const WosParams& p) {
    return {{"walks", p.walks},
            {"epsilon_shell", p.epsilon_shell},
            {"max_steps", p.max_steps},
            {"seed", p.seed},
            {"threads", p.threads}};
}

WosParams wos_params_from_json(const Json& j, const WosParams& defaults) {
    return translating([&] {
        WosParams p = defaults;
        if (!j.is_object()) throw ParseError("\"wos\" must be an object");
        if (j.contains("walks")) p.walks = j["walks"].get<std::size_t>();
        if (j.contains("epsilon_shell")) p.epsilon_shell = number(j["epsilon_shell"], "epsilon_shell");
        if (j.contains("max_steps")) p.max_steps = j["max_steps"].get<std::size_t>();
        if (j.contains("seed")) p.seed = j["seed"].get<std::uint64_t>();
        if (j.contains("threads")) p.threads = j["threads"].get<unsigned>();
        p.validate();
        return p;
    });
}

Json configuration_to_json(const PolyConfiguration& c) {
    Json points = Json::array();
    for (const PolyPoint& pt : c.points) {
        Json row = Json::array();
        for (const ComplexPoint& z : pt.coords) row.push_back(point_to_json(z));
        points.push_back(row);
    }
    Json domains = Json::array();
    for (const PolyDomain& d : c.domains) {
        Json row = Json::array();
        for (const PlanarDomain& b : d.coords) row.push_back(domain_to_json(b));
        domains.push_back(row);
    }
    return {{"gamma", c.gamma},
            {"radii_method", c.radii_method == RadiiMethod::analytic ? "analytic" : "monte_carlo"},
            {"points", points},
            {"domains", domains},
            {"wos", wos_params_to_json(c.wos)}};
}

PolyConfiguration configuration_from_json(const Json& j) {
    PolyConfiguration c;
    c.gamma = number(field(j, "gamma"), "gamma");
    if (j.contains("radii_method")) {
        const Json& method = j["radii_method"];
        if (method == "analytic") c.radii_method = RadiiMethod::analytic;
        else if (method == "monte_carlo") c.radii_method = RadiiMethod::monte_carlo;
        else throw ParseError("radii_method must be \"analytic\" or \"monte_carlo\"");
    }
    const Json& points = field(j, "points");
    const Json& domains = field(j, "domains");
    if (!points.is_array() || !domains.is_array()) throw ParseError("\"points\" and \"domains\" must be arrays");
    for (const Json& row : points) {
        if (!row.is_array()) throw ParseError("each point row must be an array of coordinates");
        PolyPoint pt;
        for (const Json& z : row) pt.coords.push_back(point_from_json(z));
        c.points.push_back(std::move(pt));
    }
    for (const Json& row : domains) {
        if (!row.is_array()) throw ParseError("each domain row must be an array of coordinates");
        PolyDomain d;
        for (const Json& b : row) d.coords.push_back(domain_from_json(b));
        c.domains.push_back(std::move(d));
    }
    if (j.contains("wos")) c.wos = wos_params_from_json(j["wos"]);
    return c;
}

Json radius_to_json(const RadiusValue& r) {
    return {{"radius", r.value},
            {"method", std::string(to_string(r.method))},
            {"stderr", r.std_error},
            {"log_stderr", r.log_std_error}};
}

Json wos_estimate_to_json(const WosEstimate& e) {
    return {{"radius", e.radius},
            {"mean_log", e.mean_log},
            {"stderr_log", e.stderr_log},
            {"radius_ci_low", e.radius_ci_low},
            {"radius_ci_high", e.radius_ci_high},
            {"walks", e.walks},
            {"truncated_walks", e.truncated_walks},
            {"mean_steps", e.mean_steps}};
}

Json bound_to_json(const BoundValue& b) {
    return {{"bound", b.value}, {"log_bound", b.log_value}, {"decimal", b.decimal}, {"in_hypothesis", b.in_hypothesis}};
}

Json report_to_json(const VerificationReport& r) {
    Json j{{"m", r.m},
           {"n", r.n},
           {"gamma", r.gamma},
           {"j", r.j_value},
           {"j_stderr", r.j_stderr},
           {"j_log_stderr", r.j_log_stderr},
           {"bound", r.bound},
           {"log_bound", r.log_bound},
           {"slack", r.slack},
           {"monte_carlo", r.monte_carlo},
           {"hypotheses_ok", r.hypotheses_ok},
           {"hypotheses",
            {{"m_at_least_5", r.hypotheses.m_at_least_5},
             {"gamma_positive", r.hypotheses.gamma_positive},
             {"gamma_at_most_cbrt_m", r.hypotheses.gamma_at_most_cbrt_m},
             {"normalization", r.hypotheses.normalization},
             {"normalization_waived", r.hypotheses.normalization_waived}}},
           {"holds", r.holds}};
    if (!r.coordinates.empty()) {
        Json coords = Json::array();
        for (const VerificationReport& c : r.coordinates) coords.push_back(report_to_json(c));
        j["coordinates"] = coords;
    }
    return j;
}

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream out;
    out << kSweepCsvHeader << '\n';
    for (const TrialReport& t : result.trials) {
        const VerificationReport& r = t.report;
        out << t.trial << ',' << r.m << ',' << r.n << ',' << format_double(r.gamma) << ',' << format_double(r.j_value)
            << ',' << format_double(r.j_stderr) << ',' << format_double(r.bound) << ',' << format_double(r.slack)
            << ',' << (r.holds ? "true" : "false") << '\n';
    }
    return out.str();
}

std::string sweep_json_lines(const SweepResult& result) {
    std::string out;
    for (const TrialReport& t : result.trials) {
        Json j = report_to_json(t.report);
        j.erase("coordinates");
        Json line{{"trial", t.trial}};
        line.update(j);
        out += line.dump() + '\n';
    }
    return out;
}

}  // namespace polyrad
