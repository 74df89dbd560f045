#include "polyrad/complex_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "polyrad/error.hpp"

namespace polyrad {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Complex z, const char* what) {
    if (!finite(z)) throw InvalidArgument(std::string(what) + " must be finite");
}

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw InvalidArgument(std::string(what) + " must be finite");
}

double cross(Complex u, Complex v) { return u.real() * v.imag() - u.imag() * v.real(); }
double dot(Complex u, Complex v) { return u.real() * v.real() + u.imag() * v.imag(); }

Complex nearest_on_segment(Complex p, Complex q, Complex z) {
    const Complex d = q - p;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return p;
    const double t = std::clamp(dot(z - p, d) / len2, 0.0, 1.0);
    return p + t * d;
}

Complex nearest_on_ray(Complex origin, Complex dir, Complex z) {
    dir /= std::abs(dir);
    const double t = std::max(0.0, dot(z - origin, dir));
    return origin + t * dir;
}

Complex closer(Complex z, Complex p, Complex q) { return std::abs(z - p) <= std::abs(z - q) ? p : q; }

/// Signed angle of w measured from the direction `bisector`, in (-pi, pi].
double angle_from(Complex w, double bisector) { return std::arg(w * std::polar(1.0, -bisector)); }

struct CircleArc {
    Complex center;
    double radius;
    double start_angle;  // counter-clockwise parametrization
    double sweep;
};

enum class ArcKind { segment, ray, outer_rays, circle };

struct ResolvedArc {
    ArcKind kind;
    Complex p, q;  // segment endpoints, ray origin/through point, or the excluded segment
    CircleArc circle{};
};

ResolvedArc resolve(const BoundaryArc& arc) {
    ComplexPoint s = arc.start, m = arc.mid, e = arc.end;
    if (s.is_infinite()) std::swap(s, e);
    if (s.is_infinite() || (m.is_infinite() && e.is_infinite()))
        throw InvalidArgument("boundary arc has two points at infinity");
    if (e.is_infinite()) return {ArcKind::ray, s.value(), m.value()};
    if (m.is_infinite()) return {ArcKind::outer_rays, s.value(), e.value()};

    const Complex sv = s.value(), mv = m.value(), ev = e.value();
    const Complex u = mv - sv, v = ev - sv;
    const double c = cross(u, v);
    if (std::abs(c) <= 1e-12 * std::abs(u) * std::abs(v)) {
        if (dot(mv - sv, ev - mv) >= 0.0) return {ArcKind::segment, sv, ev};
        return {ArcKind::outer_rays, sv, ev};
    }
    const Complex center = sv - Complex(0.0, 1.0) * (std::norm(u) * v - std::norm(v) * u) / (2.0 * c);
    const double as = std::arg(sv - center);
    const double am = std::arg(mv - center);
    const double ae = std::arg(ev - center);
    const double ccw = normalize_angle(ae - as);
    ResolvedArc out{ArcKind::circle, sv, ev};
    out.circle.center = center;
    out.circle.radius = std::abs(sv - center);
    if (normalize_angle(am - as) < ccw) {
        out.circle.start_angle = as;
        out.circle.sweep = ccw;
    } else {
        out.circle.start_angle = ae;
        out.circle.sweep = kTwoPi - ccw;
    }
    return out;
}

BoundingBox arc_box(const BoundaryArc& arc) {
    const ResolvedArc r = resolve(arc);
    BoundingBox box;
    auto include = [&box](Complex z) {
        box.xmin = std::min(box.xmin, z.real());
        box.xmax = std::max(box.xmax, z.real());
        box.ymin = std::min(box.ymin, z.imag());
        box.ymax = std::max(box.ymax, z.imag());
    };
    if (r.kind == ArcKind::ray || r.kind == ArcKind::outer_rays) return BoundingBox{};
    box = {kInf, -kInf, kInf, -kInf};
    include(r.p);
    include(r.q);
    if (r.kind == ArcKind::circle) {
        for (int quarter = 0; quarter < 4; ++quarter) {
            const double angle = quarter * std::numbers::pi / 2.0;
            if (normalize_angle(angle - r.circle.start_angle) <= r.circle.sweep)
                include(r.circle.center + std::polar(r.circle.radius, angle));
        }
    }
    return box;
}

std::optional<AnnularSector> as_sector_like(const PlanarDomain& d) {
    if (const auto* s = std::get_if<Sector>(&d.shape()))
        return AnnularSector{s->vertex, s->bisector, s->opening, 0.0, kInf};
    if (const auto* s = std::get_if<AnnularSector>(&d.shape())) return *s;
    return std::nullopt;
}

/// Distance from z to the closure of an annular sector.
double dist_to_closed_sector(const AnnularSector& s, Complex z) {
    const Complex w = z - s.vertex;
    const double rho = std::abs(w);
    const bool angular_inside = rho == 0.0 || std::abs(angle_from(w, s.bisector)) <= s.opening / 2.0;
    if (angular_inside) {
        if (rho < s.inner_radius) return s.inner_radius - rho;
        if (rho > s.outer_radius) return rho - s.outer_radius;
        return 0.0;
    }
    double best = kInf;
    for (const double side : {-1.0, 1.0}) {
        const Complex dir = std::polar(1.0, s.bisector + side * s.opening / 2.0);
        const Complex p = s.vertex + s.inner_radius * dir;
        const Complex nearest = std::isinf(s.outer_radius)
                                    ? nearest_on_ray(p, dir, z)
                                    : nearest_on_segment(p, s.vertex + s.outer_radius * dir, z);
        best = std::min(best, std::abs(z - nearest));
    }
    return best;
}

double circular_distance(double a, double b) {
    const double d = normalize_angle(a - b);
    return std::min(d, kTwoPi - d);
}

std::optional<DisjointResult> exact_disjoint(const PlanarDomain& d1, const PlanarDomain& d2) {
    auto verdict = [](bool disjoint) {
        return DisjointResult{disjoint ? DisjointStatus::disjoint : DisjointStatus::overlapping, true, 0};
    };
    const auto* disk1 = std::get_if<Disk>(&d1.shape());
    const auto* disk2 = std::get_if<Disk>(&d2.shape());
    const auto sec1 = as_sector_like(d1);
    const auto sec2 = as_sector_like(d2);

    if (disk1 && disk2) {
        const double sum = disk1->radius + disk2->radius;
        return verdict(std::abs(disk1->center - disk2->center) >= sum - 1e-12 * std::max(1.0, sum));
    }
    if ((disk1 && sec2) || (disk2 && sec1)) {
        const Disk& disk = disk1 ? *disk1 : *disk2;
        const AnnularSector& sec = disk1 ? *sec2 : *sec1;
        return verdict(dist_to_closed_sector(sec, disk.center) >=
                       disk.radius - 1e-12 * std::max(1.0, disk.radius));
    }
    if (sec1 && sec2) {
        const double scale = std::max({1.0, std::abs(sec1->vertex), std::abs(sec2->vertex)});
        if (std::abs(sec1->vertex - sec2->vertex) > 1e-14 * scale) return std::nullopt;
        const double tol = 1e-12;
        const bool radial = sec1->outer_radius <= sec2->inner_radius + tol * std::max(1.0, sec2->inner_radius) ||
                            sec2->outer_radius <= sec1->inner_radius + tol * std::max(1.0, sec1->inner_radius);
        const bool angular = circular_distance(sec1->bisector, sec2->bisector) >=
                             (sec1->opening + sec2->opening) / 2.0 - tol;
        return verdict(radial || angular);
    }
    return std::nullopt;
}

}  // namespace

double normalize_angle(double angle) {
    double r = std::fmod(angle, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = std::nextafter(kTwoPi, 0.0);
    return r;
}

// ---------------------------------------------------------------------------
// ComplexPoint

ComplexPoint::ComplexPoint(double re, double im) : ComplexPoint(Complex(re, im)) {}

ComplexPoint::ComplexPoint(Complex z) : z_(z) { require_finite(z, "finite point coordinates"); }

ComplexPoint ComplexPoint::infinity() noexcept {
    ComplexPoint p;
    p.infinite_ = true;
    return p;
}

Complex ComplexPoint::value() const {
    if (infinite_) throw InvalidArgument("the point at infinity has no coordinates");
    return z_;
}

double ComplexPoint::abs() const noexcept { return infinite_ ? kInf : std::abs(z_); }

double ComplexPoint::arg() const {
    if (infinite_) throw InvalidArgument("argument of the point at infinity");
    if (z_ == Complex(0.0, 0.0)) throw InvalidArgument("argument of zero");
    return normalize_angle(std::arg(z_));
}

// ---------------------------------------------------------------------------
// MobiusMap

MobiusMap::MobiusMap(Complex a, Complex b, Complex c, Complex d) : a_(a), b_(b), c_(c), d_(d) {
    for (Complex coef : {a, b, c, d}) require_finite(coef, "Moebius coefficient");
    const double det = std::abs(determinant());
    if (!(det > 1e-14 * (std::abs(a) * std::abs(d) + std::abs(b) * std::abs(c))))
        throw InvalidArgument("degenerate Moebius map (ad - bc = 0)");
}

ComplexPoint MobiusMap::apply(const ComplexPoint& z) const noexcept {
    if (z.is_infinite()) {
        if (c_ == Complex(0.0, 0.0)) return ComplexPoint::infinity();
        return ComplexPoint(a_ / c_);
    }
    const Complex w = z.value();
    const Complex den = c_ * w + d_;
    if (den == Complex(0.0, 0.0)) return ComplexPoint::infinity();
    const Complex r = (a_ * w + b_) / den;
    if (!finite(r)) return ComplexPoint::infinity();
    return ComplexPoint(r);
}

MobiusMap MobiusMap::compose(const MobiusMap& in) const {
    return {a_ * in.a_ + b_ * in.c_, a_ * in.b_ + b_ * in.d_, c_ * in.a_ + d_ * in.c_,
            c_ * in.b_ + d_ * in.d_};
}

ComplexPoint MobiusMap::pole() const noexcept {
    if (c_ == Complex(0.0, 0.0)) return ComplexPoint::infinity();
    return ComplexPoint(-d_ / c_);
}

double MobiusMap::derivative_abs(Complex z) const {
    const Complex den = c_ * z + d_;
    if (den == Complex(0.0, 0.0)) throw PoleError("derivative evaluated at the pole of the map");
    return std::abs(determinant()) / std::norm(den);
}

ComplexPoint mobius_apply(const MobiusMap& map, const ComplexPoint& z) noexcept { return map.apply(z); }

// ---------------------------------------------------------------------------
// Boundary arcs

Complex nearest_point_on_arc(const BoundaryArc& arc, Complex z) {
    const ResolvedArc r = resolve(arc);
    switch (r.kind) {
        case ArcKind::segment:
            return nearest_on_segment(r.p, r.q, z);
        case ArcKind::ray:
            return nearest_on_ray(r.p, r.q - r.p, z);
        case ArcKind::outer_rays:
            return closer(z, nearest_on_ray(r.p, r.p - r.q, z), nearest_on_ray(r.q, r.q - r.p, z));
        case ArcKind::circle: {
            const CircleArc& c = r.circle;
            const Complex w = z - c.center;
            if (w == Complex(0.0, 0.0)) return r.p;
            const double angle = std::arg(w);
            if (normalize_angle(angle - c.start_angle) <= c.sweep) return c.center + std::polar(c.radius, angle);
            return closer(z, r.p, r.q);
        }
    }
    return r.p;
}

bool BoundingBox::is_finite() const noexcept {
    return std::isfinite(xmin) && std::isfinite(xmax) && std::isfinite(ymin) && std::isfinite(ymax);
}

BoundingBox BoundingBox::intersect(const BoundingBox& o) const noexcept {
    return {std::max(xmin, o.xmin), std::min(xmax, o.xmax), std::max(ymin, o.ymin), std::min(ymax, o.ymax)};
}

// ---------------------------------------------------------------------------
// PlanarDomain

PlanarDomain PlanarDomain::disk(Complex center, double radius) {
    require_finite(center, "disk center");
    require_finite(radius, "disk radius");
    if (!(radius > 0.0)) throw InvalidArgument("disk radius must be positive");
    return PlanarDomain(Disk{center, radius});
}

PlanarDomain PlanarDomain::exterior_disk(Complex center, double radius) {
    require_finite(center, "exterior disk center");
    require_finite(radius, "exterior disk radius");
    if (!(radius > 0.0)) throw InvalidArgument("exterior disk radius must be positive");
    return PlanarDomain(ExteriorDisk{center, radius});
}

PlanarDomain PlanarDomain::half_plane(Complex point, double normal_angle) {
    require_finite(point, "half-plane boundary point");
    require_finite(normal_angle, "half-plane normal angle");
    return PlanarDomain(HalfPlane{point, normal_angle});
}

PlanarDomain PlanarDomain::sector(Complex vertex, double bisector, double opening) {
    require_finite(vertex, "sector vertex");
    require_finite(bisector, "sector bisector");
    require_finite(opening, "sector opening");
    if (!(opening > 0.0 && opening <= kTwoPi)) throw InvalidArgument("sector opening must lie in (0, 2pi]");
    return PlanarDomain(Sector{vertex, bisector, opening});
}

PlanarDomain PlanarDomain::annular_sector(Complex vertex, double bisector, double opening, double inner_radius,
                                          double outer_radius) {
    require_finite(vertex, "annular sector vertex");
    require_finite(bisector, "annular sector bisector");
    require_finite(opening, "annular sector opening");
    require_finite(inner_radius, "annular sector inner radius");
    if (!(opening > 0.0 && opening <= kTwoPi))
        throw InvalidArgument("annular sector opening must lie in (0, 2pi]");
    if (!(inner_radius >= 0.0)) throw InvalidArgument("annular sector inner radius must be nonnegative");
    if (std::isnan(outer_radius) || !(outer_radius > inner_radius))
        throw InvalidArgument("annular sector outer radius must exceed the inner radius");
    return PlanarDomain(AnnularSector{vertex, bisector, opening, inner_radius, outer_radius});
}

PlanarDomain PlanarDomain::mobius_image(PlanarDomain base, const MobiusMap& map) {
    return PlanarDomain(MobiusImage{std::make_shared<const PlanarDomain>(std::move(base)), map});
}

std::string_view PlanarDomain::kind() const noexcept {
    static constexpr std::string_view names[] = {"disk",   "exterior_disk",  "half_plane",
                                                 "sector", "annular_sector", "mobius_image"};
    return names[shape_.index()];
}

bool PlanarDomain::contains(const ComplexPoint& z) const {
    if (const auto* m = std::get_if<MobiusImage>(&shape_)) return m->base->contains(m->map.inverse().apply(z));
    if (z.is_infinite()) return std::holds_alternative<ExteriorDisk>(shape_);
    const Complex w = z.value();
    return std::visit(
        [w](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return std::abs(w - s.center) < s.radius;
            } else if constexpr (std::is_same_v<T, ExteriorDisk>) {
                return std::abs(w - s.center) > s.radius;
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                return ((w - s.point) * std::polar(1.0, -s.normal_angle)).real() > 0.0;
            } else if constexpr (std::is_same_v<T, Sector>) {
                const Complex rel = w - s.vertex;
                return rel != Complex(0.0, 0.0) && std::abs(angle_from(rel, s.bisector)) < s.opening / 2.0;
            } else if constexpr (std::is_same_v<T, AnnularSector>) {
                const Complex rel = w - s.vertex;
                const double rho = std::abs(rel);
                return rho > s.inner_radius && rho < s.outer_radius && rho > 0.0 &&
                       std::abs(angle_from(rel, s.bisector)) < s.opening / 2.0;
            } else {
                return false;
            }
        },
        shape_);
}

std::vector<BoundaryArc> PlanarDomain::boundary() const {
    const ComplexPoint inf = ComplexPoint::infinity();
    auto circle = [](Complex c, double r) {
        return std::vector<BoundaryArc>{{c + r, c + Complex(0, r), c - r}, {c - r, c - Complex(0, r), c + r}};
    };
    return std::visit(
        [&](const auto& s) -> std::vector<BoundaryArc> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disk> || std::is_same_v<T, ExteriorDisk>) {
                return circle(s.center, s.radius);
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                const Complex t = Complex(0, 1) * std::polar(1.0, s.normal_angle);
                return {{s.point, s.point + t, inf}, {s.point, s.point - t, inf}};
            } else if constexpr (std::is_same_v<T, Sector>) {
                const Complex up = std::polar(1.0, s.bisector + s.opening / 2);
                const Complex down = std::polar(1.0, s.bisector - s.opening / 2);
                return {{s.vertex, s.vertex + up, inf}, {s.vertex, s.vertex + down, inf}};
            } else if constexpr (std::is_same_v<T, AnnularSector>) {
                std::vector<BoundaryArc> arcs;
                const bool unbounded = std::isinf(s.outer_radius);
                for (const double side : {-1.0, 1.0}) {
                    const Complex dir = std::polar(1.0, s.bisector + side * s.opening / 2);
                    const Complex from = s.vertex + s.inner_radius * dir;
                    if (unbounded) {
                        arcs.push_back({from, from + dir, inf});
                    } else {
                        const double mid = 0.5 * (s.inner_radius + s.outer_radius);
                        arcs.push_back({from, s.vertex + mid * dir, s.vertex + s.outer_radius * dir});
                    }
                }
                for (const double r : {s.inner_radius, s.outer_radius}) {
                    if (r == 0.0 || std::isinf(r)) continue;
                    auto at = [&](double offset) { return s.vertex + std::polar(r, s.bisector + offset); };
                    const double h = s.opening / 2;
                    arcs.push_back({at(-h), at(-h / 2), at(0.0)});
                    arcs.push_back({at(0.0), at(h / 2), at(h)});
                }
                return arcs;
            } else {
                std::vector<BoundaryArc> arcs = s.base->boundary();
                for (auto& a : arcs) a = {s.map.apply(a.start), s.map.apply(a.mid), s.map.apply(a.end)};
                return arcs;
            }
        },
        shape_);
}

double PlanarDomain::dist_to_boundary(Complex z) const {
    require_finite(z, "query point");
    if (const auto* d = std::get_if<Disk>(&shape_)) return std::abs(d->radius - std::abs(z - d->center));
    if (const auto* d = std::get_if<ExteriorDisk>(&shape_)) return std::abs(d->radius - std::abs(z - d->center));
    if (const auto* h = std::get_if<HalfPlane>(&shape_))
        return std::abs(((z - h->point) * std::polar(1.0, -h->normal_angle)).real());
    return std::abs(z - nearest_boundary_point(z));
}

Complex PlanarDomain::nearest_boundary_point(Complex z) const {
    require_finite(z, "query point");
    auto radial = [z](Complex c, double r) {
        const Complex w = z - c;
        if (w == Complex(0.0, 0.0)) return c + r;
        return c + r * w / std::abs(w);
    };
    if (const auto* d = std::get_if<Disk>(&shape_)) return radial(d->center, d->radius);
    if (const auto* d = std::get_if<ExteriorDisk>(&shape_)) return radial(d->center, d->radius);
    if (const auto* h = std::get_if<HalfPlane>(&shape_)) {
        const Complex n = std::polar(1.0, h->normal_angle);
        return z - ((z - h->point) * std::conj(n)).real() * n;
    }
    Complex best = z;
    double best_dist = kInf;
    for (const BoundaryArc& arc : boundary()) {
        const Complex p = nearest_point_on_arc(arc, z);
        const double d = std::abs(z - p);
        if (d < best_dist) {
            best_dist = d;
            best = p;
        }
    }
    return best;
}

bool PlanarDomain::is_bounded() const {
    return std::visit(
        [](const auto& s) -> bool {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return true;
            } else if constexpr (std::is_same_v<T, AnnularSector>) {
                return std::isfinite(s.outer_radius);
            } else if constexpr (std::is_same_v<T, MobiusImage>) {
                const ComplexPoint pole = s.map.pole();
                if (pole.is_infinite()) return s.base->is_bounded();
                if (s.base->contains(pole)) return false;
                const double scale = std::max(1.0, pole.abs());
                return s.base->dist_to_boundary(pole.value()) > 1e-12 * scale;
            } else {
                return false;
            }
        },
        shape_);
}

BoundingBox PlanarDomain::bounding_box() const {
    if (!is_bounded()) return BoundingBox{};
    BoundingBox box{kInf, -kInf, kInf, -kInf};
    for (const BoundaryArc& arc : boundary()) {
        const BoundingBox b = arc_box(arc);
        box = {std::min(box.xmin, b.xmin), std::max(box.xmax, b.xmax), std::min(box.ymin, b.ymin),
               std::max(box.ymax, b.ymax)};
    }
    return box;
}

PlanarDomain PlanarDomain::similarity_image(Complex factor, Complex shift) const {
    require_finite(factor, "similarity factor");
    require_finite(shift, "similarity shift");
    if (factor == Complex(0.0, 0.0)) throw InvalidArgument("similarity factor must be nonzero");
    const double scale = std::abs(factor);
    const double turn = std::arg(factor);
    return std::visit(
        [&](const auto& s) -> PlanarDomain {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Disk>) {
                return disk(factor * s.center + shift, scale * s.radius);
            } else if constexpr (std::is_same_v<T, ExteriorDisk>) {
                return exterior_disk(factor * s.center + shift, scale * s.radius);
            } else if constexpr (std::is_same_v<T, HalfPlane>) {
                return half_plane(factor * s.point + shift, s.normal_angle + turn);
            } else if constexpr (std::is_same_v<T, Sector>) {
                return sector(factor * s.vertex + shift, s.bisector + turn, s.opening);
            } else if constexpr (std::is_same_v<T, AnnularSector>) {
                return annular_sector(factor * s.vertex + shift, s.bisector + turn, s.opening,
                                      scale * s.inner_radius, scale * s.outer_radius);
            } else {
                return mobius_image(*s.base, MobiusMap::affine(factor, shift).compose(s.map));
            }
        },
        shape_);
}

bool domain_contains(const PlanarDomain& domain, const ComplexPoint& z) { return domain.contains(z); }

DisjointResult domains_disjoint(const PlanarDomain& d1, const PlanarDomain& d2, std::size_t samples) {
    if (auto exact = exact_disjoint(d1, d2)) return *exact;

    BoundingBox box = d1.bounding_box().intersect(d2.bounding_box());
    if (box.xmin > box.xmax || box.ymin > box.ymax) return {DisjointStatus::disjoint, true, 0};
    if (samples == 0) throw InvalidArgument("disjointness sampling needs at least one sample");
    const BoundingBox window{-kDisjointSampleWindow, kDisjointSampleWindow, -kDisjointSampleWindow,
                             kDisjointSampleWindow};
    if (!box.is_finite()) box = box.intersect(window);
    if (box.xmin > box.xmax || box.ymin > box.ymax) return {DisjointStatus::inconclusive, false, 0};

    const auto per_side = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(samples))));
    const double dx = (box.xmax - box.xmin) / static_cast<double>(per_side);
    const double dy = (box.ymax - box.ymin) / static_cast<double>(per_side);
    std::mt19937_64 rng(0x5eed'd15fULL);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::size_t drawn = 0;
    for (std::size_t i = 0; i < per_side; ++i) {
        for (std::size_t j = 0; j < per_side; ++j) {
            const Complex z(box.xmin + (static_cast<double>(i) + unit(rng)) * dx,
                            box.ymin + (static_cast<double>(j) + unit(rng)) * dy);
            ++drawn;
            if (d1.contains(z) && d2.contains(z)) return {DisjointStatus::overlapping, false, drawn};
        }
    }
    return {DisjointStatus::inconclusive, false, drawn};
}

}  // namespace polyrad
