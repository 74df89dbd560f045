#pragma once

// The extremal bound for J_m(gamma), its hypotheses, and a harness that checks
// the inequality on admissible configurations.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "polyrad/polycylinder.hpp"
#include "polyrad/ray_systems.hpp"

namespace polyrad {

enum class HypothesisMode {
    /// m >= 5, gamma in (0, m^(1/3)], normalization L^(gamma) = L^(0) = 1 enforced.
    strict,
    /// Out-of-range values evaluated and tagged; the bound formula only needs
    /// m >= 1 and 0 <= gamma < m^2.
    lax,
};

struct BoundParams {
    int m = 5;
    double gamma = 1.0;
};

/// Throws HypothesisError naming "m >= 5", "gamma > 0" or "gamma <= m^(1/3)".
void require_bound_hypotheses(const BoundParams& p);
bool bound_hypotheses_hold(const BoundParams& p) noexcept;

struct BoundValue {
    double value = 0.0;
    double log_value = 0.0;
    std::string decimal;  ///< 50 significant digits
    bool in_hypothesis = true;
};

/// (4/m)^m (4 gamma / m^2)^(gamma/m) / (1 - gamma/m^2)^(m + gamma/m)
///   * ((1 - sqrt(gamma)/m) / (1 + sqrt(gamma)/m))^(2 sqrt(gamma)),
/// evaluated with 50 decimal digits. In lax mode gamma = 0 gives the limit (4/m)^m.
BoundValue theorem_bound(const BoundParams& p, HypothesisMode mode = HypothesisMode::strict);

struct HypothesisFlags {
    bool m_at_least_5 = true;
    bool gamma_positive = true;
    bool gamma_at_most_cbrt_m = true;
    bool normalization = true;  ///< L^(gamma) = 1 and L^(0) = 1 coordinatewise
    bool normalization_waived = false;

    bool all() const noexcept {
        return m_at_least_5 && gamma_positive && gamma_at_most_cbrt_m && (normalization || normalization_waived);
    }
};

/// Log-space slack below which an exact (analytic) instance counts as a violation.
inline constexpr double kExactSlackTolerance = 1e-9;
/// Monte Carlo instances hold when slack >= -kSigmaThreshold * stderr(log J).
inline constexpr double kSigmaThreshold = 3.0;

struct VerificationReport {
    std::size_t m = 0;
    std::size_t n = 0;
    double gamma = 0.0;
    double j_value = 0.0;
    double j_stderr = 0.0;      ///< j_value * j_log_stderr
    double j_log_stderr = 0.0;  ///< 0 for analytic radii
    double bound = 0.0;
    double log_bound = 0.0;
    double slack = 0.0;  ///< log(bound) - log(J)
    bool monte_carlo = false;
    HypothesisFlags hypotheses;
    bool hypotheses_ok = true;
    bool holds = false;
    /// Per-coordinate planar reports (verify_theorem only).
    std::vector<VerificationReport> coordinates;
};

struct VerifyOptions {
    HypothesisMode mode = HypothesisMode::strict;
    RadiusOptions radii{};
};

/// The planar inequality r^gamma(B_0, 0) prod_k r(B_k, a_k) <= bound for one
/// coordinate plane. `domains` holds B_0..B_m.
VerificationReport planar_inequality_check(const RaySystem& points, const std::vector<PlanarDomain>& domains,
                                           double gamma, const VerifyOptions& options = {});

/// J_m(gamma) of the configuration against the bound, with the planar
/// reports of every coordinate attached. Radii use the configuration's own
/// method and WoS parameters. Strict mode throws HypothesisError; the
/// exploratory (lax) mode waives normalization and the (m, gamma) range and
/// tags the report instead.
VerificationReport verify_theorem(const PolyConfiguration& c, HypothesisMode mode = HypothesisMode::strict);

/// Ray points at the m-th roots of unity in every coordinate, B_0 = Disk(0, rho)
/// in every coordinate, and B_k = AnnularSector(0, arg a_k, 2 pi / m, rin_p, inf)
/// with rin_p = rho * radial_scale^((p - 1) / n) in coordinate p = 1..n.
/// Requires 0 < rho < 1, radial_scale >= 1 and every rin_p < 1.
PolyConfiguration generate_sector_config(std::size_t m, std::size_t n, double rho, double radial_scale = 1.0,
                                         double gamma = 1.0);

struct SweepOptions {
    RadiiMethod method = RadiiMethod::analytic;
    WosParams wos{};
    HypothesisMode mode = HypothesisMode::strict;
    std::size_t max_retries = 5;
};

struct TrialReport {
    std::size_t trial = 0;
    VerificationReport report;
};

struct SweepResult {
    std::vector<TrialReport> trials;
    std::size_t skipped = 0;
    double min_slack = kInf;
    double best_ratio = 0.0;  ///< max J / bound over the sweep
    bool all_hold = true;
};

/// Trial t draws everything from a generator seeded by (seed, t): per
/// coordinate a B_0 radius and sector inner radius, and per ray point either
/// the annular sector or a disk shrunk inside it around a_k.
PolyConfiguration random_admissible_config(std::size_t m, std::size_t n, double gamma, std::uint64_t seed,
                                           std::size_t trial);

SweepResult randomized_verification_sweep(std::size_t m, std::size_t n, double gamma, std::size_t trials,
                                          std::uint64_t seed, const SweepOptions& options = {});

struct RhoScanPoint {
    double rho;
    VerificationReport report;
};

struct RhoScan {
    std::vector<RhoScanPoint> points;
    double best_rho = 0.0;
    double best_j = 0.0;
};

/// verify_theorem on generate_sector_config(m, n, rho) for `samples` rho values
/// evenly spaced in (0, 1); reports the maximizing rho.
RhoScan scan_sector_family(std::size_t m, std::size_t n, double gamma, std::size_t samples,
                           const SweepOptions& options = {});

}  // namespace polyrad
