#pragma once

#include <cstddef>
#include <vector>

#include "polyrad/complex_geometry.hpp"

namespace polyrad {

/// m >= 2 nonzero points with 0 = arg a_1 < arg a_2 < ... < arg a_m < 2 pi.
class RaySystem {
public:
    explicit RaySystem(std::vector<Complex> points);

    /// The m-th roots of unity, a_1 = 1 exactly.
    static RaySystem roots_of_unity(std::size_t m);

    std::size_t size() const noexcept { return points_.size(); }
    const std::vector<Complex>& points() const noexcept { return points_; }
    const Complex& operator[](std::size_t k) const { return points_[k]; }

    /// Arguments in [0, 2 pi).
    std::vector<double> arguments() const;

    /// t * a_k for every k; t > 0.
    RaySystem scaled(double t) const;

private:
    std::vector<Complex> points_;
};

/// chi(t) = (t + 1/t) / 2, t > 0.
double chi(double t);

struct AlphaVector {
    /// alpha_k = arg(a_{k+1} / a_k) / pi with a_{m+1} = a_1 and the argument in (0, 2 pi).
    std::vector<double> values;

    /// alpha_0, taken cyclically as alpha_m.
    double alpha_zero() const { return values.back(); }
    double sum() const;
};

AlphaVector alpha_vector(const RaySystem& s);

/// L^(gamma) = prod_k chi(|a_k / a_{k+1}|^(1/(2 alpha_k)))^(1 - gamma alpha_k^2 / 2)
///           * prod_k |a_k|^(1 + gamma (alpha_k + alpha_{k-1}) / 4),
/// k = 1..m with cyclic indices. Evaluated in log space; throws OverflowError
/// when the result leaves the double range.
double l_gamma(const RaySystem& s, double gamma);
double log_l_gamma(const RaySystem& s, double gamma);

/// Points a_p^(k), k = 1..m, p = 1..n. Column p is an m-ray system and
/// a_p^(1) = 1 for every p.
class PolyRaySystem {
public:
    explicit PolyRaySystem(std::vector<RaySystem> columns);

    /// Every column equal to the m-th roots of unity.
    static PolyRaySystem roots_of_unity(std::size_t m, std::size_t n);

    std::size_t m() const noexcept { return columns_.front().size(); }
    std::size_t n() const noexcept { return columns_.size(); }
    const RaySystem& column(std::size_t p) const { return columns_.at(p); }
    const std::vector<RaySystem>& columns() const noexcept { return columns_; }
    /// a_p^(k) with zero-based k and p.
    Complex point(std::size_t k, std::size_t p) const { return columns_.at(p)[k]; }

private:
    std::vector<RaySystem> columns_;
};

std::vector<double> l_gamma_vector(const PolyRaySystem& ps, double gamma);

/// t s with t = L^(0)(s)^(-1/m), so that L^(0) of the result is 1.
RaySystem normalize_l0(const RaySystem& s);

inline constexpr double kNormalizationTolerance = 1e-9;

struct NormalizationCheck {
    bool ok = false;
    std::vector<double> residual_gamma;  ///< |L^(gamma)_p - 1|
    std::vector<double> residual_zero;   ///< |L^(0)_p - 1|
    std::vector<std::size_t> offending;  ///< zero-based coordinates failing either check
};

/// Both L^(gamma)(A) = 1 and L^(0)(A) = 1, coordinatewise, within 1e-9.
NormalizationCheck check_theorem_normalization(const PolyRaySystem& ps, double gamma);

}  // namespace polyrad
