#include "polyrad/ray_systems.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

// log cosh(x), stable for large |x|.
double log_cosh(double x) {
    const double ax = std::abs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

}  // namespace

RaySystem::RaySystem(std::vector<Complex> points) : points_(std::move(points)) {
    if (points_.size() < 2) throw InvalidArgument("a ray system needs at least two points");
    for (const Complex& z : points_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw InvalidArgument("ray system points must be finite");
        if (z == Complex(0.0, 0.0)) throw InvalidArgument("ray system points must be nonzero");
    }
    if (points_.front().imag() != 0.0 || !(points_.front().real() > 0.0))
        throw InvalidArgument("the first ray system point must lie on the positive real axis (arg a_1 = 0)");
    const std::vector<double> args = arguments();
    for (std::size_t k = 1; k < args.size(); ++k) {
        if (!(args[k] > args[k - 1]))
            throw InvalidArgument("ray system arguments must be strictly increasing (point " + std::to_string(k + 1) +
                                  ")");
    }
}

RaySystem RaySystem::roots_of_unity(std::size_t m) {
    std::vector<Complex> pts;
    pts.reserve(m);
    for (std::size_t k = 0; k < m; ++k)
        pts.push_back(k == 0 ? Complex(1.0, 0.0) : std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(m)));
    return RaySystem(std::move(pts));
}

std::vector<double> RaySystem::arguments() const {
    std::vector<double> args;
    args.reserve(points_.size());
    for (const Complex& z : points_) args.push_back(ComplexPoint(z).arg());
    return args;
}

RaySystem RaySystem::scaled(double t) const {
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("ray system scale must be positive");
    std::vector<Complex> pts = points_;
    for (Complex& z : pts) z *= t;
    return RaySystem(std::move(pts));
}

double chi(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw InvalidArgument("chi(t) needs t > 0");
    return 0.5 * (t + 1.0 / t);
}

double AlphaVector::sum() const { return std::accumulate(values.begin(), values.end(), 0.0); }

AlphaVector alpha_vector(const RaySystem& s) {
    const std::vector<double> args = s.arguments();
    AlphaVector out;
    out.values.reserve(args.size());
    for (std::size_t k = 0; k + 1 < args.size(); ++k) out.values.push_back((args[k + 1] - args[k]) / std::numbers::pi);
    out.values.push_back((kTwoPi - args.back() + args.front()) / std::numbers::pi);
    return out;
}

double log_l_gamma(const RaySystem& s, double gamma) {
    if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw InvalidArgument("gamma must be a finite nonnegative number");
    const std::size_t m = s.size();
    const AlphaVector alpha = alpha_vector(s);
    long double log_l = 0.0L;
    for (std::size_t k = 0; k < m; ++k) {
        const double ak = alpha.values[k];
        const double prev = alpha.values[(k + m - 1) % m];
        const double log_ratio = std::log(std::abs(s[k]) / std::abs(s[(k + 1) % m]));
        log_l += static_cast<long double>((1.0 - 0.5 * gamma * ak * ak) * log_cosh(log_ratio / (2.0 * ak)));
        log_l += static_cast<long double>((1.0 + 0.25 * gamma * (ak + prev)) * std::log(std::abs(s[k])));
    }
    return static_cast<double>(log_l);
}

double l_gamma(const RaySystem& s, double gamma) {
    const double value = std::exp(log_l_gamma(s, gamma));
    if (!std::isfinite(value) || value == 0.0) throw OverflowError("L^(gamma) leaves the double range");
    return value;
}

PolyRaySystem::PolyRaySystem(std::vector<RaySystem> columns) : columns_(std::move(columns)) {
    if (columns_.empty()) throw InvalidArgument("a poly ray system needs at least one coordinate");
    const std::size_t m = columns_.front().size();
    for (std::size_t p = 0; p < columns_.size(); ++p) {
        if (columns_[p].size() != m) throw InvalidArgument("all coordinate columns must have the same length m");
        if (columns_[p][0] != Complex(1.0, 0.0))
            throw InvalidArgument("a ray-system column must start at a_p^(1) = 1 (coordinate " + std::to_string(p + 1) + ")");
    }
}

PolyRaySystem PolyRaySystem::roots_of_unity(std::size_t m, std::size_t n) {
    return PolyRaySystem(std::vector<RaySystem>(n, RaySystem::roots_of_unity(m)));
}

std::vector<double> l_gamma_vector(const PolyRaySystem& ps, double gamma) {
    std::vector<double> out;
    out.reserve(ps.n());
    for (const RaySystem& column : ps.columns()) out.push_back(l_gamma(column, gamma));
    return out;
}

RaySystem normalize_l0(const RaySystem& s) {
    const double m = static_cast<double>(s.size());
    RaySystem out = s.scaled(std::exp(-log_l_gamma(s, 0.0) / m));
    // L^(0)(t s) = t^m L^(0)(s) holds only up to rounding; a couple of
    // corrections bring the evaluated residual to the last bits.
    for (int pass = 0; pass < 3; ++pass) {
        const double residual = log_l_gamma(out, 0.0);
        if (std::abs(residual) <= 1e-15) break;
        out = out.scaled(std::exp(-residual / m));
    }
    return out;
}

NormalizationCheck check_theorem_normalization(const PolyRaySystem& ps, double gamma) {
    NormalizationCheck check;
    check.ok = true;
    for (std::size_t p = 0; p < ps.n(); ++p) {
        const double rg = std::abs(l_gamma(ps.column(p), gamma) - 1.0);
        const double r0 = std::abs(l_gamma(ps.column(p), 0.0) - 1.0);
        check.residual_gamma.push_back(rg);
        check.residual_zero.push_back(r0);
        if (!(rg <= kNormalizationTolerance && r0 <= kNormalizationTolerance)) {
            check.ok = false;
            check.offending.push_back(p);
        }
    }
    return check;
}

}  // namespace polyrad
