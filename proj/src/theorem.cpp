#include "polyrad/theorem.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_dec_float.hpp>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

using Decimal = boost::multiprecision::cpp_dec_float_50;

double cbrt_limit(int m) { return std::cbrt(static_cast<double>(m)); }

BoundValue evaluate_bound(int m_int, double gamma_double) {
    const Decimal m = m_int;
    const Decimal gamma = gamma_double;
    Decimal value = pow(Decimal(4) / m, m);
    if (gamma_double > 0.0) {
        const Decimal root = sqrt(gamma);
        const Decimal q = gamma / (m * m);
        value *= pow(4 * q, gamma / m);
        value /= pow(1 - q, m + gamma / m);
        value *= pow((1 - root / m) / (1 + root / m), 2 * root);
    }
    BoundValue out;
    out.value = value.convert_to<double>();
    out.log_value = Decimal(log(value)).convert_to<double>();
    out.decimal = value.str(50, std::ios_base::scientific);
    return out;
}

VerificationReport finish_report(std::size_t m, std::size_t n, double gamma, const JValue& j, bool monte_carlo,
                                 const BoundValue& bound, const HypothesisFlags& flags) {
    VerificationReport r;
    r.m = m;
    r.n = n;
    r.gamma = gamma;
    r.j_value = j.value;
    r.j_log_stderr = j.log_std_error;
    r.j_stderr = j.value * j.log_std_error;
    r.bound = bound.value;
    r.log_bound = bound.log_value;
    r.slack = bound.log_value - j.log_value;
    r.monte_carlo = monte_carlo;
    r.hypotheses = flags;
    r.hypotheses_ok = flags.all();
    const double threshold = monte_carlo ? -kSigmaThreshold * j.log_std_error : -kExactSlackTolerance;
    r.holds = r.slack >= threshold;
    return r;
}

HypothesisFlags range_flags(std::size_t m, double gamma) {
    HypothesisFlags f;
    const BoundParams p{static_cast<int>(m), gamma};
    f.m_at_least_5 = p.m >= 5;
    f.gamma_positive = gamma > 0.0;
    f.gamma_at_most_cbrt_m = gamma <= cbrt_limit(p.m) * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
    return f;
}

void enforce_strict(const HypothesisFlags& f, std::size_t m, double gamma, const std::vector<std::size_t>& offending) {
    if (!f.m_at_least_5) throw HypothesisError("m >= 5", "m = " + std::to_string(m));
    if (!f.gamma_positive) throw HypothesisError("gamma > 0", "gamma = " + std::to_string(gamma));
    if (!f.gamma_at_most_cbrt_m) throw HypothesisError("gamma <= m^(1/3)", "gamma = " + std::to_string(gamma));
    if (!f.normalization) {
        std::string coords;
        for (const std::size_t p : offending) coords += (coords.empty() ? "" : ",") + std::to_string(p + 1);
        throw HypothesisError("L^(gamma) = 1 and L^(0) = 1", "coordinate " + coords);
    }
}

BoundValue bound_for(std::size_t m, double gamma, HypothesisMode mode) {
    return theorem_bound(BoundParams{static_cast<int>(m), gamma}, mode);
}

}  // namespace

bool bound_hypotheses_hold(const BoundParams& p) noexcept {
    return p.m >= 5 && p.gamma > 0.0 &&
           p.gamma <= cbrt_limit(p.m) * (1.0 + 4.0 * std::numeric_limits<double>::epsilon());
}

void require_bound_hypotheses(const BoundParams& p) {
    if (p.m < 5) throw HypothesisError("m >= 5", "m = " + std::to_string(p.m));
    if (!(p.gamma > 0.0)) throw HypothesisError("gamma > 0", "gamma = " + std::to_string(p.gamma));
    if (!bound_hypotheses_hold(p)) throw HypothesisError("gamma <= m^(1/3)", "gamma = " + std::to_string(p.gamma));
}

BoundValue theorem_bound(const BoundParams& p, HypothesisMode mode) {
    if (!std::isfinite(p.gamma)) throw InvalidArgument("gamma must be finite");
    if (mode == HypothesisMode::strict) {
        require_bound_hypotheses(p);
    } else {
        if (p.m < 1) throw InvalidArgument("the bound needs m >= 1");
        const double m2 = static_cast<double>(p.m) * p.m;
        if (p.gamma < 0.0 || p.gamma >= m2) throw InvalidArgument("the bound formula needs 0 <= gamma < m^2");
    }
    BoundValue out = evaluate_bound(p.m, p.gamma);
    out.in_hypothesis = bound_hypotheses_hold(p);
    return out;
}

VerificationReport planar_inequality_check(const RaySystem& points, const std::vector<PlanarDomain>& domains,
                                           double gamma, const VerifyOptions& options) {
    const std::size_t m = points.size();
    if (domains.size() != m + 1) throw ConfigurationError("need m + 1 domains B_0..B_m");
    if (!domains[0].contains(ComplexPoint(0.0, 0.0))) throw ConfigurationError("0 is not in B_0");
    for (std::size_t k = 1; k <= m; ++k) {
        if (!domains[k].contains(points[k - 1]))
            throw ConfigurationError("a_" + std::to_string(k) + " is not in B_" + std::to_string(k));
    }
    for (std::size_t i = 0; i <= m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
            if (!domains_disjoint(domains[i], domains[j]).is_disjoint())
                throw ConfigurationError("B_" + std::to_string(i) + " and B_" + std::to_string(j) +
                                         " are not verifiably disjoint");
        }
    }

    HypothesisFlags flags = range_flags(m, gamma);
    const bool lg = std::abs(l_gamma(points, gamma) - 1.0) <= kNormalizationTolerance;
    const bool l0 = std::abs(l_gamma(points, 0.0) - 1.0) <= kNormalizationTolerance;
    flags.normalization = lg && l0;
    if (options.mode == HypothesisMode::strict) enforce_strict(flags, m, gamma, {0});
    else flags.normalization_waived = !flags.normalization;

    double log_j = 0.0;
    double var = 0.0;
    bool monte_carlo = options.radii.method == RadiiMethod::monte_carlo;
    for (std::size_t k = 0; k <= m; ++k) {
        RadiusOptions ro = options.radii;
        ro.wos.seed = derive_seed(options.radii.wos.seed, k);
        const ComplexPoint a = k == 0 ? ComplexPoint(0.0, 0.0) : ComplexPoint(points[k - 1]);
        const RadiusValue r = evaluate_radius(domains[k], a, ro);
        const double w = k == 0 ? gamma : 1.0;
        log_j += w * std::log(r.value);
        var += w * w * r.log_std_error * r.log_std_error;
    }
    const JValue j{std::exp(log_j), log_j, std::sqrt(var)};
    return finish_report(m, 1, gamma, j, monte_carlo, bound_for(m, gamma, options.mode), flags);
}

VerificationReport verify_theorem(const PolyConfiguration& c, HypothesisMode mode) {
    require_valid(c);
    const std::size_t m = c.m();
    HypothesisFlags flags = range_flags(m, c.gamma);
    const NormalizationCheck norm = check_theorem_normalization(c.ray_system(), c.gamma);
    flags.normalization = norm.ok;
    if (mode == HypothesisMode::strict) enforce_strict(flags, m, c.gamma, norm.offending);
    else flags.normalization_waived = !norm.ok;

    const BoundValue bound = bound_for(m, c.gamma, mode);
    const RadiiGrid radii = evaluate_radii(c);
    const bool monte_carlo = c.radii_method == RadiiMethod::monte_carlo;
    VerificationReport report = finish_report(m, c.n(), c.gamma, j_functional(c, radii), monte_carlo, bound, flags);

    const std::vector<JValue> parts = decompose_j(c, radii);
    for (std::size_t p = 0; p < parts.size(); ++p) {
        HypothesisFlags pf = range_flags(m, c.gamma);
        pf.normalization = std::find(norm.offending.begin(), norm.offending.end(), p) == norm.offending.end();
        pf.normalization_waived = flags.normalization_waived && !pf.normalization;
        report.coordinates.push_back(finish_report(m, 1, c.gamma, parts[p], monte_carlo, bound, pf));
    }
    return report;
}

PolyConfiguration generate_sector_config(std::size_t m, std::size_t n, double rho, double radial_scale,
                                         double gamma) {
    if (m < 2) throw InvalidArgument("generate_sector_config needs m >= 2");
    if (n < 1) throw InvalidArgument("generate_sector_config needs n >= 1");
    if (!(rho > 0.0 && rho < 1.0)) throw InvalidArgument("rho must lie in (0, 1) so that a_k is interior");
    if (!(radial_scale >= 1.0) || !std::isfinite(radial_scale)) throw InvalidArgument("radial_scale must be >= 1");

    const RaySystem roots = RaySystem::roots_of_unity(m);
    const std::vector<double> args = roots.arguments();
    const double opening = kTwoPi / static_cast<double>(m);

    PolyConfiguration c;
    c.gamma = gamma;
    c.points.assign(m + 1, PolyPoint{});
    c.domains.assign(m + 1, PolyDomain{});
    for (std::size_t p = 0; p < n; ++p) {
        const double inner = rho * std::pow(radial_scale, static_cast<double>(p) / static_cast<double>(n));
        if (!(inner < 1.0)) throw InvalidArgument("radial_scale pushes the sector inner radius past a_k");
        c.points[0].coords.emplace_back(0.0, 0.0);
        c.domains[0].coords.push_back(PlanarDomain::disk(0.0, rho));
        for (std::size_t k = 1; k <= m; ++k) {
            c.points[k].coords.emplace_back(roots[k - 1]);
            c.domains[k].coords.push_back(PlanarDomain::annular_sector(0.0, args[k - 1], opening, inner));
        }
    }
    return c;
}

PolyConfiguration random_admissible_config(std::size_t m, std::size_t n, double gamma, std::uint64_t seed,
                                           std::size_t trial) {
    std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(trial)));
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    const RaySystem roots = RaySystem::roots_of_unity(m);
    const std::vector<double> args = roots.arguments();
    const double opening = kTwoPi / static_cast<double>(m);

    PolyConfiguration c;
    c.gamma = gamma;
    c.points.assign(m + 1, PolyPoint{});
    c.domains.assign(m + 1, PolyDomain{});
    for (std::size_t p = 0; p < n; ++p) {
        const double rho = 0.05 + 0.85 * unit(rng);
        const double inner = std::min(rho * (1.0 + 0.3 * unit(rng)), 0.95);
        c.points[0].coords.emplace_back(0.0, 0.0);
        c.domains[0].coords.push_back(PlanarDomain::disk(0.0, rho));
        for (std::size_t k = 1; k <= m; ++k) {
            const Complex a = roots[k - 1];
            PlanarDomain sector = PlanarDomain::annular_sector(0.0, args[k - 1], opening, inner);
            c.points[k].coords.emplace_back(a);
            if (unit(rng) < 0.5) {
                c.domains[k].coords.push_back(std::move(sector));
                continue;
            }
            // A disk inside the sector that still contains a_k.
            const double room = sector.dist_to_boundary(a);
            const Complex center = a + std::polar(0.3 * room * std::sqrt(unit(rng)), kTwoPi * unit(rng));
            const double radius = (0.7 + 0.3 * unit(rng)) * sector.dist_to_boundary(center);
            c.domains[k].coords.push_back(PlanarDomain::disk(center, radius));
        }
    }
    return c;
}

SweepResult randomized_verification_sweep(std::size_t m, std::size_t n, double gamma, std::size_t trials,
                                          std::uint64_t seed, const SweepOptions& options) {
    if (trials < 1) throw InvalidArgument("a sweep needs at least one trial");
    if (options.mode == HypothesisMode::strict) require_bound_hypotheses(BoundParams{static_cast<int>(m), gamma});

    SweepResult result;
    for (std::size_t t = 0; t < trials; ++t) {
        bool done = false;
        for (std::size_t attempt = 0; attempt <= options.max_retries && !done; ++attempt) {
            PolyConfiguration c = random_admissible_config(m, n, gamma, seed, t * (options.max_retries + 1) + attempt);
            if (!check_configuration(c).ok) continue;
            c.radii_method = options.method;
            c.wos = options.wos;
            c.wos.seed = derive_seed(options.wos.seed, static_cast<std::uint64_t>(t));
            VerificationReport report = verify_theorem(c, options.mode);
            result.min_slack = std::min(result.min_slack, report.slack);
            result.best_ratio = std::max(result.best_ratio, report.j_value / report.bound);
            result.all_hold = result.all_hold && report.holds;
            result.trials.push_back({t, std::move(report)});
            done = true;
        }
        if (!done) ++result.skipped;
    }
    return result;
}

RhoScan scan_sector_family(std::size_t m, std::size_t n, double gamma, std::size_t samples,
                           const SweepOptions& options) {
    if (samples < 1) throw InvalidArgument("a rho scan needs at least one sample");
    RhoScan scan;
    for (std::size_t i = 1; i <= samples; ++i) {
        const double rho = static_cast<double>(i) / static_cast<double>(samples + 1);
        PolyConfiguration c = generate_sector_config(m, n, rho, 1.0, gamma);
        c.radii_method = options.method;
        c.wos = options.wos;
        c.wos.seed = derive_seed(options.wos.seed, i);
        VerificationReport report = verify_theorem(c, options.mode);
        if (report.j_value > scan.best_j) {
            scan.best_j = report.j_value;
            scan.best_rho = rho;
        }
        scan.points.push_back({rho, std::move(report)});
    }
    return scan;
}

}  // namespace polyrad
