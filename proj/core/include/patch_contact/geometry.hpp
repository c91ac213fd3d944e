#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace patch_contact {

/// Default relative tolerance. Geometric tests multiply it by a patch length scale.
inline constexpr double kDefaultTol = 1e-9;

class InvalidPatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Point or direction in the contact plane.
struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}

  /// Throws std::invalid_argument on NaN or infinite components.
  static Vec2 checked(double x, double y);

  bool finite() const { return std::isfinite(x) && std::isfinite(y); }

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(Vec2 o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  constexpr bool operator==(const Vec2&) const = default;
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }

constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
/// z-component of the 3D cross product [a,0] x [b,0].
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

/// Rotation by -pi/2 about the contact normal: [a, b] -> [b, -a].
constexpr Vec2 perp(Vec2 v) { return {v.y, -v.x}; }
/// Inverse of perp: [a, b] -> [-b, a].
constexpr Vec2 perp_inverse(Vec2 v) { return {-v.y, v.x}; }

/// Sign of cross(b - a, c - a), exact for any finite double inputs.
/// Returns +1 for a counterclockwise turn, -1 for clockwise, 0 when collinear.
int orientation(Vec2 a, Vec2 b, Vec2 c);

/// Filled ellipse {center + R(rotation) * (a cos t, b sin t) scaled by r <= 1}.
struct Ellipse {
  Vec2 center;
  double semi_a = 1.0;
  double semi_b = 1.0;
  double rotation = 0.0;  // radians, angle of the first semi-axis

  Vec2 to_local(Vec2 p) const;
  Vec2 to_world(Vec2 local) const;
};

/// Maximizing face of a linear functional over a convex hull.
struct SupportSet {
  enum class Kind { vertex, segment, full_hull };

  Kind kind = Kind::full_hull;
  Vec2 first;   // vertex, or first segment endpoint
  Vec2 second;  // second segment endpoint

  static SupportSet vertex(Vec2 v) { return {Kind::vertex, v, v}; }
  static SupportSet segment(Vec2 a, Vec2 b) { return {Kind::segment, a, b}; }
  static SupportSet full_hull() { return {}; }

  bool operator==(const SupportSet&) const = default;
};

std::string to_string(SupportSet::Kind kind);

struct SupportResult {
  double value = 0.0;
  SupportSet set;
};

/// Planar contact region: a polygon (possibly nonconvex or degenerate) or an ellipse.
///
/// The convex hull and the length scale are computed at construction, so a
/// Patch is immutable and safe to share between threads.
class Patch {
 public:
  /// Vertices in boundary order. One vertex gives a point patch, two a segment.
  /// Throws InvalidPatch on empty input, non-finite coordinates, or repeated
  /// consecutive vertices (including the closing pair).
  static Patch polygon(std::vector<Vec2> vertices);
  static Patch point(Vec2 p) { return polygon({p}); }
  static Patch segment(Vec2 a, Vec2 b) { return polygon({a, b}); }
  /// Axis-aligned box [-half_x, half_x] x [-half_y, half_y] shifted by center.
  static Patch box(double half_x, double half_y, Vec2 center = {});
  static Patch ellipse(Vec2 center, double semi_a, double semi_b, double rotation = 0.0);

  bool is_ellipse() const { return std::holds_alternative<Ellipse>(shape_); }
  const Ellipse& ellipse() const { return std::get<Ellipse>(shape_); }
  /// Boundary vertices as given. Empty for ellipses.
  std::span<const Vec2> vertices() const;
  /// Counterclockwise hull vertices without collinear points. Empty for ellipses.
  std::span<const Vec2> hull() const { return hull_; }

  /// Max pairwise hull-vertex distance, or twice the largest semi-axis.
  double diameter() const { return diameter_; }
  /// Multiplier for relative tolerances: the diameter, or 1 for a point patch.
  double length_scale() const { return diameter_ > 0.0 ? diameter_ : 1.0; }

  /// True when the patch has no area (point, segment, or collinear polygon).
  bool degenerate() const { return !is_ellipse() && hull_.size() < 3; }

  /// Image of the patch under perp.
  Patch rotated_perp() const;

 private:
  Patch() = default;
  void finish();

  std::variant<std::vector<Vec2>, Ellipse> shape_;
  std::vector<Vec2> hull_;
  double diameter_ = 0.0;
};

/// Monotone chain hull of a point set: counterclockwise, starting at the
/// lexicographically smallest point, collinear points removed. Degenerate
/// inputs give 1- or 2-vertex results.
std::vector<Vec2> convex_hull(std::span<const Vec2> points);

/// Hull of a patch: the polygon hull vertex list, or the ellipse itself.
using HullView = std::variant<std::span<const Vec2>, Ellipse>;
HullView convex_hull(const Patch& patch);

/// max over C(P) of <x, d> and the face attaining it. FullHull for d = 0.
SupportResult support(const Patch& patch, Vec2 d);

/// Membership in C(P) inflated by tol * patch.length_scale().
bool contains(const Patch& patch, Vec2 p, double tol = kDefaultTol);

/// Membership in P itself (not its hull), with the same inflation semantics.
/// Polygons are treated as simple and filled; boundary points are inside.
bool in_patch(const Patch& patch, Vec2 p, double tol = kDefaultTol);

double distance_to_segment(Vec2 p, Vec2 a, Vec2 b);

/// Distance from p to the boundary of C(P); zero for points on it.
double distance_to_hull_boundary(const Patch& patch, Vec2 p);

}  // namespace patch_contact
