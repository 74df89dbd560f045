#include "polyrad/polycylinder.hpp"

#include <cmath>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

RadiusValue geometric_mean(const std::vector<RadiusValue>& radii) {
    double log_sum = 0.0;
    double var = 0.0;
    bool monte_carlo = false;
    for (const RadiusValue& r : radii) {
        log_sum += std::log(r.value);
        var += r.log_std_error * r.log_std_error;
        monte_carlo = monte_carlo || r.method == RadiusMethod::monte_carlo;
    }
    const double count = static_cast<double>(radii.size());
    const double value = std::exp(log_sum / count);
    const double log_se = std::sqrt(var) / count;
    return {value, monte_carlo ? RadiusMethod::monte_carlo : RadiusMethod::analytic, value * log_se, log_se};
}

void require_pairing(const PolyDomain& d, const PolyPoint& a) {
    if (d.n() == 0) throw InvalidArgument("a polycylinder needs at least one coordinate");
    if (d.n() != a.n()) throw InvalidArgument("point and polycylinder dimensions differ");
}

RadiusValue coordinate_radius(const PolyDomain& d, const PolyPoint& a, std::size_t k, const RadiusOptions& options) {
    if (!d.coords[k].contains(a.coords[k]))
        throw NotInteriorError("point not interior at coordinate " + std::to_string(k + 1));
    return evaluate_radius(d.coords[k], a.coords[k], options);
}

}  // namespace

RadiusValue evaluate_radius(const PlanarDomain& domain, const ComplexPoint& a, const RadiusOptions& options) {
    if (options.method == RadiiMethod::analytic) return inner_radius_analytic(domain, a);
    return to_radius_value(wos_inner_radius(domain, a, options.wos));
}

RadiusValue generalized_inner_radius(const PolyDomain& d, const PolyPoint& a, std::size_t p,
                                     const RadiusOptions& options) {
    require_pairing(d, a);
    if (p < 1 || p > d.n()) throw InvalidArgument("p must satisfy 1 <= p <= n");
    std::vector<RadiusValue> radii;
    radii.reserve(p);
    for (std::size_t k = 0; k < p; ++k) radii.push_back(coordinate_radius(d, a, k, options));
    return geometric_mean(radii);
}

RadiusValue generalized_inner_radius_subset(const PolyDomain& d, const PolyPoint& a,
                                            const std::vector<std::size_t>& coordinates,
                                            const RadiusOptions& options) {
    require_pairing(d, a);
    if (coordinates.empty()) throw InvalidArgument("coordinate subset must be nonempty");
    std::vector<RadiusValue> radii;
    radii.reserve(coordinates.size());
    for (const std::size_t k : coordinates) {
        if (k >= d.n()) throw InvalidArgument("coordinate index out of range");
        radii.push_back(coordinate_radius(d, a, k, options));
    }
    return geometric_mean(radii);
}

PolyRaySystem PolyConfiguration::ray_system() const {
    std::vector<RaySystem> columns;
    for (std::size_t p = 0; p < n(); ++p) {
        std::vector<Complex> column;
        for (std::size_t k = 1; k < points.size(); ++k) column.push_back(points[k].coords[p].value());
        columns.emplace_back(std::move(column));
    }
    return PolyRaySystem(std::move(columns));
}

ConfigurationCheck check_configuration(const PolyConfiguration& c) {
    ConfigurationCheck check;
    auto fail = [&check](std::string why) {
        check.ok = false;
        check.failures.push_back(std::move(why));
    };
    if (!std::isfinite(c.gamma) || c.gamma < 0.0) fail("gamma must be a finite nonnegative number");
    if (c.points.size() < 3) fail("need points A_0..A_m with m >= 2");
    if (c.points.size() != c.domains.size()) fail("number of points and domains differ");
    if (!check.ok) return check;

    const std::size_t n = c.n();
    if (n == 0) {
        fail("coordinate dimension n must be at least 1");
        return check;
    }
    for (std::size_t k = 0; k < c.points.size(); ++k) {
        if (c.points[k].n() != n || c.domains[k].n() != n)
            fail("point or domain " + std::to_string(k) + " has dimension different from n");
    }
    if (!check.ok) return check;

    for (std::size_t p = 0; p < n; ++p) {
        if (!(c.points[0].coords[p] == ComplexPoint(0.0, 0.0)))
            fail("A_0 must be the origin (coordinate " + std::to_string(p + 1) + ")");
    }
    for (std::size_t k = 0; k < c.points.size(); ++k) {
        for (std::size_t p = 0; p < n; ++p) {
            if (!c.domains[k].coords[p].contains(c.points[k].coords[p]))
                fail("A_" + std::to_string(k) + " not in B_" + std::to_string(k) + " at coordinate " +
                     std::to_string(p + 1));
        }
    }
    for (std::size_t p = 0; p < n; ++p) {
        for (std::size_t i = 0; i < c.domains.size(); ++i) {
            for (std::size_t j = i + 1; j < c.domains.size(); ++j) {
                const DisjointResult r = domains_disjoint(c.domains[i].coords[p], c.domains[j].coords[p]);
                if (r.status == DisjointStatus::overlapping)
                    fail("B_" + std::to_string(i) + " and B_" + std::to_string(j) + " overlap at coordinate " +
                         std::to_string(p + 1));
                else if (r.status == DisjointStatus::inconclusive)
                    fail("disjointness of B_" + std::to_string(i) + " and B_" + std::to_string(j) +
                         " is inconclusive at coordinate " + std::to_string(p + 1));
            }
        }
    }
    try {
        (void)c.ray_system();
    } catch (const Error& e) {
        fail(std::string("A_1..A_m is not a valid ray system: ") + e.what());
    }
    return check;
}

void require_valid(const PolyConfiguration& c) {
    const ConfigurationCheck check = check_configuration(c);
    if (!check.ok) throw ConfigurationError(check.failures.front());
}

RadiiGrid evaluate_radii(const PolyConfiguration& c) {
    require_valid(c);
    RadiiGrid grid(c.points.size());
    for (std::size_t k = 0; k < c.points.size(); ++k) {
        for (std::size_t p = 0; p < c.n(); ++p) {
            RadiusOptions options{c.radii_method, c.wos};
            options.wos.seed = derive_seed(c.wos.seed, static_cast<std::uint64_t>(k * c.n() + p));
            grid[k].push_back(evaluate_radius(c.domains[k].coords[p], c.points[k].coords[p], options));
        }
    }
    return grid;
}

JValue j_functional(const PolyConfiguration& c) { return j_functional(c, evaluate_radii(c)); }

JValue j_functional(const PolyConfiguration& c, const RadiiGrid& radii) {
    double log_j = 0.0;
    double var = 0.0;
    for (std::size_t k = 0; k < radii.size(); ++k) {
        const RadiusValue big_r = geometric_mean(radii[k]);
        const double weight = k == 0 ? c.gamma : 1.0;
        log_j += weight * std::log(big_r.value);
        var += weight * weight * big_r.log_std_error * big_r.log_std_error;
    }
    return {std::exp(log_j), log_j, std::sqrt(var)};
}

std::vector<JValue> decompose_j(const PolyConfiguration& c) { return decompose_j(c, evaluate_radii(c)); }

std::vector<JValue> decompose_j(const PolyConfiguration& c, const RadiiGrid& radii) {
    std::vector<JValue> out;
    out.reserve(c.n());
    for (std::size_t p = 0; p < c.n(); ++p) {
        double log_jp = 0.0;
        double var = 0.0;
        for (std::size_t k = 0; k < radii.size(); ++k) {
            const double weight = k == 0 ? c.gamma : 1.0;
            log_jp += weight * std::log(radii[k][p].value);
            var += weight * weight * radii[k][p].log_std_error * radii[k][p].log_std_error;
        }
        out.push_back({std::exp(log_jp), log_jp, std::sqrt(var)});
    }
    return out;
}

PolyConfiguration coordinate_slice(const PolyConfiguration& c, std::size_t p) {
    if (p >= c.n()) throw InvalidArgument("coordinate index out of range");
    PolyConfiguration slice;
    slice.gamma = c.gamma;
    slice.radii_method = c.radii_method;
    slice.wos = c.wos;
    for (std::size_t k = 0; k < c.points.size(); ++k) {
        slice.points.push_back(PolyPoint{{c.points[k].coords[p]}});
        slice.domains.push_back(PolyDomain{{c.domains[k].coords[p]}});
    }
    return slice;
}

}  // namespace polyrad
