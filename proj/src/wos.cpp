#include "polyrad/wos.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

using BackMap = std::function<ComplexPoint(Complex)>;

/// A bounded domain to walk in, the start point there, and the map taking
/// walk-space exit points back to the original domain.
struct WalkPlan {
    PlanarDomain walk_domain;
    Complex start;
    BackMap back;
    Complex reference;  // estimand is log |back(exit) - reference|
    double truncation = kInf;
    /// Set when the domain contains infinity and the start is finite: a point p
    /// off the closure of the domain. log |z - a| is not harmonic at infinity, so
    /// the walk estimates log |X - a| - log |X - p| + log |a - p| instead, the
    /// same functional seen through z -> 1 / (z - p).
    std::optional<Complex> outside = std::nullopt;
};

ComplexPoint finite_or_inf(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return ComplexPoint::infinity();
    return ComplexPoint(z);
}

/// Walk in the unit disk: u0 = to_rhp(a) lies in Re u > 0 and
/// w = (u - s) / (u + s), s = 2|u0|, takes the half-plane onto the disk.
WalkPlan via_right_half_plane(Complex a, Complex u0, std::function<Complex(Complex)> from_rhp) {
    const double s = 2.0 * std::abs(u0);
    BackMap back = [s, from_rhp = std::move(from_rhp)](Complex w) -> ComplexPoint {
        if (w == Complex(1.0, 0.0)) return ComplexPoint::infinity();
        return finite_or_inf(from_rhp(s * (1.0 + w) / (1.0 - w)));
    };
    return {PlanarDomain::disk(0.0, 1.0), (u0 - s) / (u0 + s), std::move(back), a};
}

/// A finite point at positive distance from the closure of the domain, used
/// only for domains containing infinity (for which one always exists).
std::optional<Complex> outside_point(const PlanarDomain& domain) {
    return std::visit(
        [](const auto& s) -> std::optional<Complex> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return s.center + 2.0 * s.radius;
            } else if constexpr (std::is_same_v<T, ExteriorDisk>) {
                return s.center;
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                return s.point - std::polar(1.0, s.normal_angle);
            } else if constexpr (std::is_same_v<T, Sector>) {
                if (s.opening >= kTwoPi) return std::nullopt;
                return s.vertex - std::polar(1.0, s.bisector);
            } else if constexpr (std::is_same_v<T, AnnularSector>) {
                if (s.inner_radius > 0.0) return s.vertex;
                if (s.opening >= kTwoPi) return std::nullopt;
                return s.vertex - std::polar(1.0, s.bisector);
            } else {
                const std::optional<Complex> q = outside_point(*s.base);
                if (!q) return std::nullopt;
                // the base outside point may be the pole; nudge along the base boundary normal
                for (const double shrink : {1.0, 0.5, 0.25}) {
                    const Complex base_q = *q;
                    const Complex candidate = s.base->nearest_boundary_point(base_q);
                    const Complex trial = candidate + shrink * (base_q - candidate);
                    const ComplexPoint image = s.map.apply(trial);
                    if (image.is_finite()) return image.value();
                }
                return std::nullopt;
            }
        },
        domain.shape());
}

WalkPlan identity_plan(const PlanarDomain& domain, Complex a) {
    return {domain, a, [](Complex w) { return ComplexPoint(w); }, a};
}

WalkPlan base_transport_plan(const PlanarDomain& domain, const ComplexPoint& a);

WalkPlan transport_plan(const PlanarDomain& domain, const ComplexPoint& a) {
    WalkPlan plan = base_transport_plan(domain, a);
    if (a.is_finite() && domain.contains(ComplexPoint::infinity())) {
        plan.outside = outside_point(domain);
        if (!plan.outside) throw InvalidArgument("walk-on-spheres found no exterior point for this domain");
    }
    return plan;
}

WalkPlan base_transport_plan(const PlanarDomain& domain, const ComplexPoint& a) {
    if (a.is_infinite() && !std::holds_alternative<ExteriorDisk>(domain.shape()))
        throw InvalidArgument("walk-on-spheres at infinity is supported for exterior disks only");
    return std::visit(
        [&](const auto& s) -> WalkPlan {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return identity_plan(domain, a.value());
            } else if constexpr (std::is_same_v<T, ExteriorDisk>) {
                const Complex c = s.center;
                const Complex start = a.is_infinite() ? Complex(0.0, 0.0) : 1.0 / (a.value() - c);
                BackMap back = [c](Complex w) -> ComplexPoint {
                    if (w == Complex(0.0, 0.0)) return ComplexPoint::infinity();
                    return finite_or_inf(c + 1.0 / w);
                };
                return {PlanarDomain::disk(0.0, 1.0 / s.radius), start, std::move(back),
                        a.is_infinite() ? c : a.value()};
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                const Complex rot = std::polar(1.0, s.normal_angle);
                const Complex p = s.point;
                return via_right_half_plane(a.value(), (a.value() - p) / rot,
                                            [p, rot](Complex u) { return p + u * rot; });
            } else if constexpr (std::is_same_v<T, Sector>) {
                const double beta = std::numbers::pi / s.opening;
                const Complex rot = std::polar(1.0, s.bisector);
                const Complex v = s.vertex;
                const Complex u0 = std::pow((a.value() - v) / rot, beta);
                return via_right_half_plane(a.value(), u0,
                                            [v, rot, beta](Complex u) { return v + rot * std::pow(u, 1.0 / beta); });
            } else if constexpr (std::is_same_v<T, AnnularSector>) {
                if (std::isfinite(s.outer_radius)) return identity_plan(domain, a.value());
                const double beta = std::numbers::pi / s.opening;
                const Complex rot = std::polar(1.0, s.bisector);
                const Complex v = s.vertex;
                if (s.inner_radius == 0.0) {
                    const Complex u0 = std::pow((a.value() - v) / rot, beta);
                    return via_right_half_plane(
                        a.value(), u0, [v, rot, beta](Complex u) { return v + rot * std::pow(u, 1.0 / beta); });
                }
                const double rin = s.inner_radius;
                const Complex zeta0 = std::pow((a.value() - v) / (rot * rin), beta);
                const Complex u0 = 0.5 * (zeta0 - 1.0 / zeta0);
                auto from_rhp = [v, rot, rin, beta](Complex u) {
                    // zeta^2 - 2 u zeta - 1 = 0; the root of modulus >= 1 (Re >= 0 on the unit circle).
                    const Complex root = std::sqrt(u * u + 1.0);
                    const Complex r1 = u + root, r2 = u - root;
                    Complex zeta;
                    if (std::abs(std::abs(r1) - std::abs(r2)) <= 1e-12 * std::max(1.0, std::abs(r1)))
                        zeta = r1.real() >= r2.real() ? r1 : r2;
                    else
                        zeta = std::abs(r1) > std::abs(r2) ? r1 : r2;
                    return v + rot * rin * std::pow(zeta, 1.0 / beta);
                };
                return via_right_half_plane(a.value(), u0, from_rhp);
            } else {
                const ComplexPoint b = s.map.inverse().apply(a);
                WalkPlan inner = base_transport_plan(*s.base, b);
                BackMap back = [map = s.map, inner_back = inner.back](Complex w) {
                    return map.apply(inner_back(w));
                };
                return {inner.walk_domain, inner.start, std::move(back), a.value()};
            }
        },
        domain.shape());
}

WalkPlan direct_plan(const PlanarDomain& domain, const ComplexPoint& a, double truncation) {
    if (a.is_infinite()) throw InvalidArgument("direct walks need a finite start point");
    if (!domain.is_bounded() && !std::isfinite(truncation))
        throw InvalidArgument("direct walks in an unbounded domain need a truncation radius");
    WalkPlan plan = identity_plan(domain, a.value());
    plan.truncation = truncation;
    if (domain.contains(ComplexPoint::infinity())) plan.outside = outside_point(domain);
    return plan;
}

/// Distance and projection onto the boundary of the walk domain, with the
/// arcs resolved once per run.
class WalkGeometry {
public:
    WalkGeometry(const WalkPlan& plan) : plan_(plan) {  // NOLINT
        if (const auto* d = std::get_if<Disk>(&plan.walk_domain.shape())) disk_ = *d;
        else arcs_ = plan.walk_domain.boundary();
    }

    double distance(Complex x) const {
        double d = disk_ ? disk_->radius - std::abs(x - disk_->center) : std::abs(x - nearest_on_boundary(x));
        if (std::isfinite(plan_.truncation)) d = std::min(d, plan_.truncation - std::abs(x - plan_.start));
        return std::max(d, 0.0);
    }

    Complex project(Complex x) const {
        const Complex on_boundary = disk_ ? radial(disk_->center, disk_->radius, x) : nearest_on_boundary(x);
        if (std::isfinite(plan_.truncation)) {
            const double to_cut = plan_.truncation - std::abs(x - plan_.start);
            if (to_cut < std::abs(x - on_boundary)) return radial(plan_.start, plan_.truncation, x);
        }
        return on_boundary;
    }

private:
    static Complex radial(Complex c, double r, Complex x) {
        const Complex w = x - c;
        if (w == Complex(0.0, 0.0)) return c + r;
        return c + r * w / std::abs(w);
    }

    Complex nearest_on_boundary(Complex x) const {
        Complex best = x;
        double best_dist = kInf;
        for (const BoundaryArc& arc : arcs_) {
            const Complex p = nearest_point_on_arc(arc, x);
            const double d = std::abs(x - p);
            if (d < best_dist) {
                best_dist = d;
                best = p;
            }
        }
        return best;
    }

    const WalkPlan& plan_;
    std::optional<Disk> disk_;
    std::vector<BoundaryArc> arcs_;
};

struct WalkOutcome {
    double log_distance;  // NaN when truncated
    std::size_t steps;
};

WalkOutcome run_walk(const WalkPlan& plan, const WalkGeometry& geometry, const WosParams& params,
                     std::size_t index) {
    std::mt19937_64 rng(derive_seed(params.seed, static_cast<std::uint64_t>(index)));
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    Complex x = plan.start;
    for (std::size_t step = 0; step < params.max_steps; ++step) {
        const double d = geometry.distance(x);
        if (d <= params.epsilon_shell) {
            const ComplexPoint exit = plan.back(geometry.project(x));
            if (exit.is_infinite()) break;
            double value = std::log(std::abs(exit.value() - plan.reference));
            if (plan.outside) {
                const Complex p = *plan.outside;
                value += std::log(std::abs(plan.reference - p)) - std::log(std::abs(exit.value() - p));
            }
            return {value, step};
        }
        x += std::polar(d, angle(rng));
    }
    return {std::numeric_limits<double>::quiet_NaN(), params.max_steps};
}

}  // namespace

void WosParams::validate() const {
    if (!(epsilon_shell > 0.0) || !std::isfinite(epsilon_shell))
        throw InvalidArgument("epsilon_shell must be positive");
    if (walks < 1) throw InvalidArgument("walks must be at least 1");
    if (max_steps < 1) throw InvalidArgument("max_steps must be at least 1");
    if (!(truncation_radius > 0.0)) throw InvalidArgument("truncation_radius must be positive");
}

bool WosEstimate::covers(double value, double z) const {
    // floor for zero-variance runs (disk centres) whose only error is rounding
    const double half_width = z * stderr_log + 1e-12 * (1.0 + std::abs(mean_log));
    return std::abs(std::log(value) - mean_log) <= half_width;
}

WosEstimate wos_inner_radius(const PlanarDomain& domain, const ComplexPoint& a, const WosParams& params) {
    params.validate();
    if (!domain.contains(a)) throw NotInteriorError("walk-on-spheres start point is not interior");

    const WalkPlan plan = params.mode == WalkMode::transport ? transport_plan(domain, a)
                                                             : direct_plan(domain, a, params.truncation_radius);
    const WalkGeometry geometry(plan);

    std::vector<WalkOutcome> outcomes(params.walks);
    const unsigned threads = std::max(1U, params.threads);
    const std::size_t batch = params.batch_size > 0
                                  ? params.batch_size
                                  : std::max<std::size_t>(1, (params.walks + threads - 1) / threads);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t first = next.fetch_add(batch);
            if (first >= params.walks) return;
            const std::size_t last = std::min(params.walks, first + batch);
            for (std::size_t i = first; i < last; ++i) outcomes[i] = run_walk(plan, geometry, params, i);
        }
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    WosEstimate est;
    est.walks = params.walks;
    double sum = 0.0;
    double steps = 0.0;
    std::size_t used = 0;
    for (const WalkOutcome& o : outcomes) {
        if (std::isnan(o.log_distance)) {
            ++est.truncated_walks;
            continue;
        }
        sum += o.log_distance;
        steps += static_cast<double>(o.steps);
        ++used;
    }
    if (static_cast<double>(est.truncated_walks) > kMaxTruncatedFraction * static_cast<double>(params.walks) ||
        used == 0)
        throw WosError("walk-on-spheres: " + std::to_string(est.truncated_walks) + " of " +
                       std::to_string(params.walks) + " walks exceeded max_steps");

    est.mean_log = sum / static_cast<double>(used);
    est.mean_steps = steps / static_cast<double>(used);
    double ss = 0.0;
    for (const WalkOutcome& o : outcomes) {
        if (std::isnan(o.log_distance)) continue;
        const double dev = o.log_distance - est.mean_log;
        ss += dev * dev;
    }
    est.stderr_log = used > 1 ? std::sqrt(ss / static_cast<double>(used - 1) / static_cast<double>(used)) : 0.0;
    est.radius = std::exp(est.mean_log);
    est.radius_ci_low = std::exp(est.mean_log - 1.96 * est.stderr_log);
    est.radius_ci_high = std::exp(est.mean_log + 1.96 * est.stderr_log);
    return est;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(seed ^ splitmix64(stream));
}

RadiusValue to_radius_value(const WosEstimate& e) {
    return {e.radius, RadiusMethod::monte_carlo, e.radius * e.stderr_log, e.stderr_log};
}

}  // namespace polyrad
