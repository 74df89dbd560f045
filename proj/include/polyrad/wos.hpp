#pragma once

// Walk-on-spheres estimator of the inner radius through
//   log r(B, a) = E[ log |X_exit - a| ],
// X_exit the exit point of Brownian motion started at a.

#include <cstddef>
#include <cstdint>

#include "polyrad/complex_geometry.hpp"
#include "polyrad/conformal_radius.hpp"

namespace polyrad {

inline constexpr std::uint64_t kDefaultSeed = 20120415;

enum class WalkMode {
    /// Walk in a bounded conformal image of the domain (a disk for unbounded
    /// catalog shapes) and map exit points back. Default.
    transport,
    /// Walk in the domain itself; unbounded domains need a truncation radius.
    direct,
};

struct WosParams {
    double epsilon_shell = 1e-4;
    std::size_t max_steps = 100000;
    std::size_t walks = 100000;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 1;
    std::size_t batch_size = 0;  ///< walks per batch; 0 splits evenly across threads
    WalkMode mode = WalkMode::transport;
    /// Direct mode only: absorb walks on the circle |z - a| = truncation_radius.
    double truncation_radius = kInf;

    void validate() const;
};

struct WosEstimate {
    double mean_log = 0.0;
    double stderr_log = 0.0;
    double radius = 0.0;
    double radius_ci_low = 0.0;   ///< exp(mean_log - 1.96 stderr_log)
    double radius_ci_high = 0.0;  ///< exp(mean_log + 1.96 stderr_log)
    std::size_t walks = 0;
    std::size_t truncated_walks = 0;
    double mean_steps = 0.0;

    /// exp(mean_log -/+ z stderr_log) for an arbitrary normal quantile z.
    bool covers(double value, double z) const;
};

/// Fraction of truncated walks above which the estimate is rejected.
inline constexpr double kMaxTruncatedFraction = 0.01;

/// Runs `params.walks` independent walks. Walk i draws from a generator seeded
/// by (seed, i) alone, and the log-distances are reduced in walk order, so the
/// result is bit-identical for any thread count and batch partition.
///
/// At a = infinity (exterior disks only) the estimate uses
/// log r(B, inf) = E_inf[ log |X_exit - c| ] with c the disk center.
WosEstimate wos_inner_radius(const PlanarDomain& domain, const ComplexPoint& a, const WosParams& params);

RadiusValue to_radius_value(const WosEstimate& estimate);

/// Independent 64-bit seed for sub-stream `stream` of `seed` (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace polyrad
