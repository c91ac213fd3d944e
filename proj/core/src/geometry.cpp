#include "patch_contact/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace patch_contact {

namespace {

// Error-free transforms. two_sum: a + b = s + e exactly.
inline void two_sum(double a, double b, double& s, double& e) {
  s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  e = (a - av) + (b - bv);
}

inline void two_product(double a, double b, double& p, double& e) {
  p = a * b;
  e = std::fma(a, b, -p);
}

// Adds b to a nonoverlapping expansion (increasing magnitude), keeping it
// nonoverlapping. Zero components are dropped.
void grow_expansion(std::vector<double>& e, double b) {
  double q = b;
  std::size_t out = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    double s = 0.0;
    double h = 0.0;
    two_sum(q, e[i], s, h);
    q = s;
    if (h != 0.0) e[out++] = h;
  }
  e.resize(out);
  if (q != 0.0) e.push_back(q);
}

int exact_orientation(Vec2 a, Vec2 b, Vec2 c) {
  double dx1 = 0.0, dx1e = 0.0, dy2 = 0.0, dy2e = 0.0;
  double dy1 = 0.0, dy1e = 0.0, dx2 = 0.0, dx2e = 0.0;
  two_sum(b.x, -a.x, dx1, dx1e);
  two_sum(c.y, -a.y, dy2, dy2e);
  two_sum(b.y, -a.y, dy1, dy1e);
  two_sum(c.x, -a.x, dx2, dx2e);

  const double left[2] = {dx1, dx1e};
  const double left2[2] = {dy2, dy2e};
  const double right[2] = {dy1, dy1e};
  const double right2[2] = {dx2, dx2e};

  std::vector<double> expansion;
  expansion.reserve(32);
  for (double u : left) {
    for (double v : left2) {
      double p = 0.0, err = 0.0;
      two_product(u, v, p, err);
      grow_expansion(expansion, err);
      grow_expansion(expansion, p);
    }
  }
  for (double u : right) {
    for (double v : right2) {
      double p = 0.0, err = 0.0;
      two_product(u, v, p, err);
      grow_expansion(expansion, -err);
      grow_expansion(expansion, -p);
    }
  }
  if (expansion.empty()) return 0;
  const double top = expansion.back();
  return top > 0.0 ? 1 : (top < 0.0 ? -1 : 0);
}

bool lex_less(Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }

double max_pairwise_distance(std::span<const Vec2> pts) {
  double best = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, norm(pts[i] - pts[j]));
  return best;
}

// Point-in-polygon by crossing parity; the caller handles the boundary band.
bool crossing_parity_inside(std::span<const Vec2> poly, Vec2 p) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_at = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x_at) inside = !inside;
    }
  }
  return inside;
}

bool ellipse_contains(const Ellipse& e, Vec2 p, double margin) {
  const Vec2 local = e.to_local(p);
  const double ax = (local.x / (e.semi_a + margin));
  const double by = (local.y / (e.semi_b + margin));
  return ax * ax + by * by <= 1.0;
}

bool hull_contains(std::span<const Vec2> hull, Vec2 p, double margin) {
  if (hull.size() == 1) return norm(p - hull[0]) <= margin;
  if (hull.size() == 2) return distance_to_segment(p, hull[0], hull[1]) <= margin;
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = hull[i];
    const Vec2 b = hull[(i + 1) % n];
    const Vec2 edge = b - a;
    // Signed distance to the edge line, positive inside for a ccw hull.
    if (cross(edge, p - a) < -margin * norm(edge)) return false;
  }
  return true;
}

}  // namespace

Vec2 Vec2::checked(double x, double y) {
  if (!std::isfinite(x) || !std::isfinite(y)) throw std::invalid_argument("Vec2: non-finite component");
  return {x, y};
}

int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double detleft = (b.x - a.x) * (c.y - a.y);
  const double detright = (b.y - a.y) * (c.x - a.x);
  const double det = detleft - detright;
  // Static filter: the rounded determinant has the right sign when it exceeds
  // this bound (relative error of the four roundings plus the subtraction).
  constexpr double kBound = 8.0 * std::numeric_limits<double>::epsilon();
  const double bound = kBound * (std::abs(detleft) + std::abs(detright));
  if (det > bound) return 1;
  if (-det > bound) return -1;
  return exact_orientation(a, b, c);
}

Vec2 Ellipse::to_local(Vec2 p) const {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  const Vec2 d = p - center;
  return {c * d.x + s * d.y, -s * d.x + c * d.y};
}

Vec2 Ellipse::to_world(Vec2 local) const {
  const double c = std::cos(rotation);
  const double s = std::sin(rotation);
  return center + Vec2{c * local.x - s * local.y, s * local.x + c * local.y};
}

std::string to_string(SupportSet::Kind kind) {
  switch (kind) {
    case SupportSet::Kind::vertex:
      return "vertex";
    case SupportSet::Kind::segment:
      return "segment";
    case SupportSet::Kind::full_hull:
      return "full_hull";
  }
  return "unknown";
}

Patch Patch::polygon(std::vector<Vec2> vertices) {
  if (vertices.empty()) throw InvalidPatch("polygon patch needs at least one vertex");
  for (const Vec2& v : vertices)
    if (!v.finite()) throw InvalidPatch("polygon vertex is not finite");
  const std::size_t n = vertices.size();
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) {
      if (vertices[i] == vertices[(i + 1) % n])
        throw InvalidPatch("polygon has repeated consecutive vertex at index " + std::to_string(i));
    }
  }
  Patch patch;
  patch.shape_ = std::move(vertices);
  patch.finish();
  return patch;
}

Patch Patch::box(double half_x, double half_y, Vec2 center) {
  if (!(half_x > 0.0) || !(half_y > 0.0)) throw InvalidPatch("box half extents must be positive");
  return polygon({center + Vec2{-half_x, -half_y}, center + Vec2{half_x, -half_y}, center + Vec2{half_x, half_y},
                  center + Vec2{-half_x, half_y}});
}

Patch Patch::ellipse(Vec2 center, double semi_a, double semi_b, double rotation) {
  if (!center.finite() || !std::isfinite(rotation)) throw InvalidPatch("ellipse parameters must be finite");
  if (!(semi_a > 0.0) || !(semi_b > 0.0) || !std::isfinite(semi_a) || !std::isfinite(semi_b))
    throw InvalidPatch("ellipse semi-axes must be positive and finite");
  Patch patch;
  patch.shape_ = Ellipse{center, semi_a, semi_b, rotation};
  patch.finish();
  return patch;
}

void Patch::finish() {
  if (auto* verts = std::get_if<std::vector<Vec2>>(&shape_)) {
    hull_ = convex_hull(*verts);
    diameter_ = max_pairwise_distance(hull_);
  } else {
    const Ellipse& e = std::get<Ellipse>(shape_);
    diameter_ = 2.0 * std::max(e.semi_a, e.semi_b);
  }
}

std::span<const Vec2> Patch::vertices() const {
  if (auto* verts = std::get_if<std::vector<Vec2>>(&shape_)) return *verts;
  return {};
}

Patch Patch::rotated_perp() const {
  if (is_ellipse()) {
    const Ellipse& e = ellipse();
    // perp is a rotation by -pi/2.
    return Patch::ellipse(perp(e.center), e.semi_a, e.semi_b, e.rotation - std::numbers::pi / 2.0);
  }
  std::vector<Vec2> rotated;
  rotated.reserve(vertices().size());
  for (const Vec2& v : vertices()) rotated.push_back(perp(v));
  return Patch::polygon(std::move(rotated));
}

std::vector<Vec2> convex_hull(std::span<const Vec2> points) {
  std::vector<Vec2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const Vec2& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], *it) <= 0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  // All points collinear: the chain collapses to the two extremes.
  if (hull.size() == 2 && hull[0] == hull[1]) hull.resize(1);
  return hull;
}

HullView convex_hull(const Patch& patch) {
  if (patch.is_ellipse()) return patch.ellipse();
  return patch.hull();
}

SupportResult support(const Patch& patch, Vec2 d) {
  if (d.x == 0.0 && d.y == 0.0) return {0.0, SupportSet::full_hull()};

  if (patch.is_ellipse()) {
    const Ellipse& e = patch.ellipse();
    // Direction in the ellipse frame.
    const double c = std::cos(e.rotation);
    const double s = std::sin(e.rotation);
    const Vec2 local{c * d.x + s * d.y, -s * d.x + c * d.y};
    const double ad = e.semi_a * local.x;
    const double bd = e.semi_b * local.y;
    const double radius = std::hypot(ad, bd);
    const Vec2 argmax_local{e.semi_a * ad / radius, e.semi_b * bd / radius};
    return {dot(e.center, d) + radius, SupportSet::vertex(e.to_world(argmax_local))};
  }

  const auto hull = patch.hull();
  const std::size_t n = hull.size();
  std::size_t best = 0;
  double best_value = dot(hull[0], d);
  for (std::size_t i = 1; i < n; ++i) {
    const double v = dot(hull[i], d);
    if (v > best_value) {
      best_value = v;
      best = i;
    }
  }
  if (n == 1) return {best_value, SupportSet::vertex(hull[0])};

  // Neighbouring vertices tie when their values agree to the rounding error
  // of the dot product, i.e. when the edge is orthogonal to d.
  const double dn = norm(d);
  const auto ties = [&](std::size_t i) {
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() * dn *
                         (std::abs(hull[i].x) + std::abs(hull[i].y) + std::abs(hull[best].x) + std::abs(hull[best].y));
    return best_value - dot(hull[i], d) <= slack;
  };
  const std::size_t next = (best + 1) % n;
  const std::size_t prev = (best + n - 1) % n;
  if (ties(next)) return {best_value, SupportSet::segment(hull[best], hull[next])};
  if (n > 2 && ties(prev)) return {best_value, SupportSet::segment(hull[prev], hull[best])};
  return {best_value, SupportSet::vertex(hull[best])};
}

double distance_to_segment(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return norm(p - a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return norm(p - (a + ab * t));
}

bool contains(const Patch& patch, Vec2 p, double tol) {
  const double margin = tol * patch.length_scale();
  if (patch.is_ellipse()) return ellipse_contains(patch.ellipse(), p, margin);
  return hull_contains(patch.hull(), p, margin);
}

bool in_patch(const Patch& patch, Vec2 p, double tol) {
  if (patch.is_ellipse() || patch.degenerate()) return contains(patch, p, tol);
  const auto poly = patch.vertices();
  if (crossing_parity_inside(poly, p)) return true;
  const double margin = tol * patch.length_scale();
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i)
    if (distance_to_segment(p, poly[i], poly[(i + 1) % n]) <= margin) return true;
  return false;
}

double distance_to_hull_boundary(const Patch& patch, Vec2 p) {
  if (patch.is_ellipse()) {
    // Closest point on the ellipse boundary by Newton iteration on the
    // parametric angle, seeded from the polar angle of the local point.
    const Ellipse& e = patch.ellipse();
    const Vec2 q = e.to_local(p);
    const double a = e.semi_a;
    const double b = e.semi_b;
    double best = std::numeric_limits<double>::infinity();
    for (int seed = 0; seed < 4; ++seed) {
      double t = std::atan2(a * q.y, b * q.x) + seed * std::numbers::pi / 2.0;
      for (int it = 0; it < 50; ++it) {
        const double ct = std::cos(t), st = std::sin(t);
        const Vec2 r{a * ct - q.x, b * st - q.y};
        const Vec2 dr{-a * st, b * ct};
        const Vec2 ddr{-a * ct, -b * st};
        const double f = dot(r, dr);
        const double df = dot(dr, dr) + dot(r, ddr);
        if (df == 0.0) break;
        const double step = f / df;
        t -= step;
        if (std::abs(step) < 1e-15) break;
      }
      best = std::min(best, norm(Vec2{a * std::cos(t), b * std::sin(t)} - q));
    }
    return best;
  }
  const auto hull = patch.hull();
  if (hull.size() == 1) return norm(p - hull[0]);
  double best = std::numeric_limits<double>::infinity();
  const std::size_t edges = hull.size() == 2 ? 1 : hull.size();
  for (std::size_t i = 0; i < edges; ++i)
    best = std::min(best, distance_to_segment(p, hull[i], hull[(i + 1) % hull.size()]));
  return best;
}

}  // namespace patch_contact
