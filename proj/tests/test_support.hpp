#pragma once

// Independent reference computations and fixtures shared by the test binaries.
// Nothing here calls into the library's own geometry beyond constructing
// patches, so the results can serve as oracles.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "patch_contact/fields.hpp"
#include "patch_contact/geometry.hpp"

namespace testing_support {

using patch_contact::Patch;
using patch_contact::Twist;
using patch_contact::Vec2;
using patch_contact::Wrench;

inline Patch unit_square() { return Patch::polygon({{-1, -1}, {1, -1}, {1, 1}, {-1, 1}}); }

// L-shaped plate with the notch at the upper right.
inline Patch l_shape() { return Patch::polygon({{0, 0}, {3, 0}, {3, 1}, {1, 1}, {1, 3}, {0, 3}}); }

// nu_N written out coordinate by coordinate.
inline double nu_expanded(const Twist& t, Vec2 x) { return t.v_n + x.y * t.omega_t.x - x.x * t.omega_t.y; }

// CoP from the moment balance, solved by hand.
inline Vec2 cop_expanded(const Wrench& w) { return {-w.m_t.y / w.f_n, w.m_t.x / w.f_n}; }

// Sign of the orientation determinant for coordinates on the 2^-40 lattice
// with magnitude below 2^10, evaluated exactly in 128-bit integers.
inline int exact_orientation_lattice(Vec2 a, Vec2 b, Vec2 c) {
  auto fix = [](double v) { return static_cast<__int128>(std::ldexp(v, 40)); };
  const __int128 abx = fix(b.x) - fix(a.x);
  const __int128 aby = fix(b.y) - fix(a.y);
  const __int128 acx = fix(c.x) - fix(a.x);
  const __int128 acy = fix(c.y) - fix(a.y);
  const __int128 det = abx * acy - aby * acx;
  return (det > 0) - (det < 0);
}

// Winding-number membership for a simple polygon, boundary included via a
// distance band.
inline bool winding_inside(const std::vector<Vec2>& poly, Vec2 p, double band) {
  int wn = 0;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a = poly[i];
    const Vec2 b = poly[(i + 1) % n];
    const Vec2 ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    const double s = len2 > 0 ? std::clamp(((p.x - a.x) * ab.x + (p.y - a.y) * ab.y) / len2, 0.0, 1.0) : 0.0;
    const Vec2 q{a.x + s * ab.x, a.y + s * ab.y};
    if (std::hypot(p.x - q.x, p.y - q.y) <= band) return true;
    const double side = ab.x * (p.y - a.y) - ab.y * (p.x - a.x);
    if (a.y <= p.y) {
      if (b.y > p.y && side > 0) ++wn;
    } else if (b.y <= p.y && side < 0) {
      --wn;
    }
  }
  return wn != 0;
}

// Dense boundary points of an ellipse patch.
inline std::vector<Vec2> ellipse_boundary(const patch_contact::Ellipse& e, std::size_t n) {
  std::vector<Vec2> out;
  out.reserve(n);
  const double c = std::cos(e.rotation);
  const double s = std::sin(e.rotation);
  for (std::size_t i = 0; i < n; ++i) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    const double lx = e.semi_a * std::cos(th);
    const double ly = e.semi_b * std::sin(th);
    out.push_back({e.center.x + c * lx - s * ly, e.center.y + s * lx + c * ly});
  }
  return out;
}

// Candidate maximizers of a linear functional over C(P): the raw polygon
// vertices, or a dense ellipse boundary.
inline std::vector<Vec2> extreme_candidates(const Patch& patch, std::size_t ellipse_samples = 20000) {
  if (patch.is_ellipse()) return ellipse_boundary(patch.ellipse(), ellipse_samples);
  return {patch.vertices().begin(), patch.vertices().end()};
}

inline double brute_support_value(const Patch& patch, Vec2 d) {
  double best = -INFINITY;
  for (const Vec2& x : extreme_candidates(patch)) best = std::max(best, x.x * d.x + x.y * d.y);
  return best;
}

inline double brute_min_nu(const Patch& patch, const Twist& t) {
  double best = INFINITY;
  for (const Vec2& x : extreme_candidates(patch)) best = std::min(best, nu_expanded(t, x));
  return best;
}

// Rigid motion x -> R(theta) x + shift applied to the contact quantities.
struct RigidMotion {
  double theta = 0.0;
  Vec2 shift;

  Vec2 rotate(Vec2 v) const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return {c * v.x - s * v.y, s * v.x + c * v.y};
  }
  Vec2 apply(Vec2 x) const { return rotate(x) + shift; }

  Patch apply(const Patch& p) const {
    if (p.is_ellipse()) {
      const auto& e = p.ellipse();
      return Patch::ellipse(apply(e.center), e.semi_a, e.semi_b, e.rotation + theta);
    }
    std::vector<Vec2> v;
    for (const Vec2& x : p.vertices()) v.push_back(apply(x));
    return Patch::polygon(v);
  }

  // Moments move by the Varignon formula: m_T' = R m_T + f_N perp(shift).
  Wrench apply(const Wrench& w) const {
    Wrench out = w;
    out.m_t = rotate(w.m_t) + patch_contact::perp(shift) * w.f_n;
    out.f_t = rotate(w.f_t);
    return out;
  }

  // nu'(x') = nu(x): omega_T' = R omega_T, v_N' = v_N + <shift, perp(R omega_T)>.
  Twist apply(const Twist& t) const {
    Twist out = t;
    out.omega_t = rotate(t.omega_t);
    out.v_n = t.v_n + patch_contact::dot(shift, patch_contact::perp(out.omega_t));
    out.v_t = rotate(t.v_t);
    return out;
  }
};

inline std::vector<Patch> assorted_patches() {
  return {
      unit_square(),
      l_shape(),
      Patch::polygon({{0, 0}, {4, 0}, {1, 0.5}}),
      Patch::polygon({{-2, 0}, {0, -1}, {2, 0}, {0, 1}, {0, 0.2}}),
      Patch::ellipse({0.5, -0.25}, 2.0, 0.7, 0.4),
      Patch::ellipse({0, 0}, 1.0, 1.0),
      Patch::segment({-1, 0}, {1, 0.5}),
      Patch::point({0.3, -0.2}),
  };
}

}  // namespace testing_support
