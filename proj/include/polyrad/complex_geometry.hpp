#pragma once

// Points of the extended complex plane, Moebius maps, and the catalog of
// planar domains used as coordinate domains of polycylinders.

#include <complex>
#include <cstddef>
#include <limits>
#include <memory>
#include <numbers>
#include <string_view>
#include <variant>
#include <vector>

namespace polyrad {

using Complex = std::complex<double>;

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Maps any finite angle into [0, 2*pi).
double normalize_angle(double angle);

/// A point of the one-point compactification C u {inf}.
class ComplexPoint {
public:
    ComplexPoint() = default;
    ComplexPoint(double re, double im);
    ComplexPoint(Complex z);  // NOLINT(google-explicit-constructor): finite points convert freely

    static ComplexPoint infinity() noexcept;

    bool is_infinite() const noexcept { return infinite_; }
    bool is_finite() const noexcept { return !infinite_; }

    /// Coordinates of a finite point; throws InvalidArgument at infinity.
    Complex value() const;
    double re() const { return value().real(); }
    double im() const { return value().imag(); }

    /// Modulus; +inf for the point at infinity.
    double abs() const noexcept;

    /// Argument in [0, 2*pi), branch cut along the positive real axis.
    /// Throws for 0 and infinity.
    double arg() const;

    friend bool operator==(const ComplexPoint& lhs, const ComplexPoint& rhs) noexcept {
        if (lhs.infinite_ || rhs.infinite_) return lhs.infinite_ == rhs.infinite_;
        return lhs.z_ == rhs.z_;
    }

private:
    Complex z_{0.0, 0.0};
    bool infinite_ = false;
};

/// z -> (a z + b) / (c z + d) with ad - bc != 0.
class MobiusMap {
public:
    MobiusMap(Complex a, Complex b, Complex c, Complex d);

    static MobiusMap identity() { return {1.0, 0.0, 0.0, 1.0}; }
    /// z -> factor * z + shift
    static MobiusMap affine(Complex factor, Complex shift) { return {factor, shift, 0.0, 1.0}; }
    /// z -> 1 / (z - center)
    static MobiusMap inversion_about(Complex center) { return {0.0, 1.0, 1.0, -center}; }

    Complex a() const noexcept { return a_; }
    Complex b() const noexcept { return b_; }
    Complex c() const noexcept { return c_; }
    Complex d() const noexcept { return d_; }
    Complex determinant() const noexcept { return a_ * d_ - b_ * c_; }

    ComplexPoint apply(const ComplexPoint& z) const noexcept;
    MobiusMap inverse() const noexcept { return {d_, -b_, -c_, a_}; }
    /// (*this o inner)(z) = this(inner(z))
    MobiusMap compose(const MobiusMap& inner) const;

    /// The preimage of infinity: -d/c, or infinity for affine maps.
    ComplexPoint pole() const noexcept;

    /// |T'(z)| = |ad - bc| / |cz + d|^2. Throws PoleError at the pole.
    double derivative_abs(Complex z) const;

private:
    Complex a_, b_, c_, d_;
};

ComplexPoint mobius_apply(const MobiusMap& map, const ComplexPoint& z) noexcept;

/// A piece of a generalized circle (circle or line through infinity), given
/// by its two endpoints and one interior point. Any of the three may be
/// infinity; the piece is the arc from `start` to `end` passing through `mid`.
struct BoundaryArc {
    ComplexPoint start;
    ComplexPoint mid;
    ComplexPoint end;
};

/// Closest point of the arc to the finite point z.
Complex nearest_point_on_arc(const BoundaryArc& arc, Complex z);

struct BoundingBox {
    double xmin = -kInf, xmax = kInf, ymin = -kInf, ymax = kInf;

    bool is_finite() const noexcept;
    BoundingBox intersect(const BoundingBox& other) const noexcept;
};

class PlanarDomain;

struct Disk {
    Complex center;
    double radius;
};

struct ExteriorDisk {
    Complex center;
    double radius;
};

/// {z : Re((z - point) e^{-i normal_angle}) > 0}
struct HalfPlane {
    Complex point;
    double normal_angle;
};

/// Angular domain |arg((z - vertex) e^{-i bisector})| < opening / 2.
struct Sector {
    Complex vertex;
    double bisector;
    double opening;
};

/// Sector intersected with inner_radius < |z - vertex| < outer_radius.
/// outer_radius may be +inf.
struct AnnularSector {
    Complex vertex;
    double bisector;
    double opening;
    double inner_radius;
    double outer_radius;
};

struct MobiusImage {
    std::shared_ptr<const PlanarDomain> base;
    MobiusMap map;
};

/// A simply connected domain of the extended plane from a fixed catalog.
/// Immutable; factories validate every invariant.
class PlanarDomain {
public:
    using Shape = std::variant<Disk, ExteriorDisk, HalfPlane, Sector, AnnularSector, MobiusImage>;

    static PlanarDomain disk(Complex center, double radius);
    static PlanarDomain exterior_disk(Complex center, double radius);
    static PlanarDomain half_plane(Complex point, double normal_angle);
    static PlanarDomain sector(Complex vertex, double bisector, double opening);
    static PlanarDomain annular_sector(Complex vertex, double bisector, double opening,
                                       double inner_radius, double outer_radius = kInf);
    static PlanarDomain mobius_image(PlanarDomain base, const MobiusMap& map);

    const Shape& shape() const noexcept { return shape_; }
    std::string_view kind() const noexcept;

    bool contains(const ComplexPoint& z) const;

    /// Euclidean distance from a finite point to the boundary. Zero exactly on
    /// the boundary; positive elsewhere (inside or outside).
    double dist_to_boundary(Complex z) const;
    Complex nearest_boundary_point(Complex z) const;

    bool is_bounded() const;
    /// Bounding box of the domain; infinite extents for unbounded domains.
    BoundingBox bounding_box() const;

    /// The boundary as a list of generalized arcs.
    std::vector<BoundaryArc> boundary() const;

    /// Image under z -> factor * z + shift, keeping the shape kind.
    PlanarDomain similarity_image(Complex factor, Complex shift) const;

private:
    explicit PlanarDomain(Shape shape) : shape_(std::move(shape)) {}

    Shape shape_;
};

bool domain_contains(const PlanarDomain& domain, const ComplexPoint& z);

enum class DisjointStatus { disjoint, overlapping, inconclusive };

struct DisjointResult {
    DisjointStatus status;
    bool exact;           ///< decided by a closed-form predicate
    std::size_t samples;  ///< sample points drawn (0 when exact)

    bool is_disjoint() const noexcept { return status == DisjointStatus::disjoint; }
};

/// Half-width of the sampling window used for unbounded shape pairs.
inline constexpr double kDisjointSampleWindow = 100.0;

/// Pairwise disjointness. Exact for disk/disk, disk/sector and sector/sector
/// pairs with a common vertex (sectors include annular sectors); otherwise a
/// stratified sample of `samples` points over the common bounding box
/// (clipped to the sampling window) looks for a witness of overlap, and the
/// answer is `inconclusive` when none is found.
DisjointResult domains_disjoint(const PlanarDomain& d1, const PlanarDomain& d2,
                                std::size_t samples = 20000);

}  // namespace polyrad
