#include "patch_contact/signorini.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

namespace patch_contact {

namespace {

struct ChordPoint {
  Vec2 point;
  double t = 0.0;  // signed position along the chord direction
};

// Boundary crossings of the line c + t u (|u| = 1) with the polygon edges.
// Vertices within margin of the line count as crossings themselves.
std::vector<ChordPoint> boundary_crossings(std::span<const Vec2> poly, Vec2 c, Vec2 u, double margin) {
  std::vector<ChordPoint> hits;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 p = poly[i];
    const Vec2 q = poly[(i + 1) % n];
    const double sp = cross(u, p - c);
    const double sq = cross(u, q - c);
    const bool p_on = std::abs(sp) <= margin;
    const bool q_on = std::abs(sq) <= margin;
    if (p_on) hits.push_back({p, dot(p - c, u)});
    if (q_on) hits.push_back({q, dot(q - c, u)});
    if (!p_on && !q_on && (sp < 0.0) != (sq < 0.0)) {
      const double s = sp / (sp - sq);
      const Vec2 x = p + (q - p) * s;
      hits.push_back({x, dot(x - c, u)});
    }
  }
  return hits;
}

// Two boundary points bracketing c along direction u, nearest on each side.
std::optional<std::pair<ChordPoint, ChordPoint>> bracketing_chord(std::span<const Vec2> poly, Vec2 c, Vec2 u,
                                                                   double margin) {
  const auto hits = boundary_crossings(poly, c, u, margin);
  std::optional<ChordPoint> below;
  std::optional<ChordPoint> above;
  for (const ChordPoint& h : hits) {
    if (h.t < 0.0 && (!below || h.t > below->t)) below = h;
    if (h.t > 0.0 && (!above || h.t < above->t)) above = h;
  }
  if (!below || !above) return std::nullopt;
  return std::make_pair(*below, *above);
}

ForceDistribution two_atoms(const std::pair<ChordPoint, ChordPoint>& chord, double f_n) {
  const auto& [x1, x2] = chord;
  // c = alpha x1 + (1 - alpha) x2 with t1 < 0 < t2.
  const double alpha = x2.t / (x2.t - x1.t);
  return ForceDistribution::unchecked({{x1.point, alpha * f_n, {}}, {x2.point, (1.0 - alpha) * f_n, {}}});
}

bool polygon_is_convex(const Patch& patch) {
  if (patch.is_ellipse() || patch.degenerate()) return true;
  const double margin = 1e-12 * patch.length_scale();
  for (const Vec2& v : patch.vertices())
    if (distance_to_hull_boundary(patch, v) > margin) return false;
  return true;
}

}  // namespace

std::string to_string(RegimeKind kind) {
  switch (kind) {
    case RegimeKind::separating:
      return "separating";
    case RegimeKind::resting:
      return "resting";
    case RegimeKind::tipping:
      return "tipping";
    case RegimeKind::inactive:
      return "inactive";
  }
  return "unknown";
}

std::optional<ZeroLine> zero_line(const Twist& twist, double tol) {
  const double w = norm(twist.omega_t);
  if (!(w > tol)) return std::nullopt;
  // <x, perp(omega_T)> = v_N  <=>  <x, -perp(omega_T)/|omega_T|> = -v_N/|omega_T|.
  return ZeroLine{-perp(twist.omega_t) / w, -twist.v_n / w};
}

double verdict_scale(const Patch& patch, const Wrench& w, const Twist& t) {
  return std::max({1.0, wrench_part(w).norm(), twist_part(t).norm(), patch.diameter()});
}

Verdict check(const Patch& patch, const Wrench& w, const Twist& t, double tol) {
  return check(PatchCone(patch), w, t, tol);
}

Verdict check(const PatchCone& cone, const Wrench& w, const Twist& t, double tol) {
  if (!w.finite() || !t.finite()) throw std::invalid_argument("check: non-finite wrench or twist");
  const Patch& patch = cone.patch();
  const HomVec3 a = wrench_part(w);
  const HomVec3 b = twist_part(t);

  Verdict v;
  v.scale = verdict_scale(patch, w, t);
  const double band = tol * v.scale;
  v.primal_ok = in_primal(cone, a, tol);
  v.dual_ok = in_dual(cone, b, tol);
  v.residual = complementarity_residual(a, b);
  v.satisfied = v.primal_ok && v.dual_ok && std::abs(v.residual) <= band;
  v.cop = center_of_pressure(w, band);
  v.zero_line = zero_line(t, band);
  v.extended_cop = extended_cop(patch, w, t, tol);

  if (v.satisfied) {
    Regime r;
    r.wrench_norm = a.norm();
    r.twist_norm = b.norm();
    const bool wrench_zero = r.wrench_norm <= band;
    const bool twist_zero = r.twist_norm <= band;
    if (wrench_zero && twist_zero)
      r.kind = RegimeKind::inactive;
    else if (wrench_zero)
      r.kind = RegimeKind::separating;
    else if (twist_zero)
      r.kind = RegimeKind::resting;
    else
      r.kind = RegimeKind::tipping;
    r.tangential_motion = norm(t.v_t) > band || std::abs(t.omega_n) > band;
    v.regime = r;
  }
  return v;
}

Regime classify(const Patch& patch, const Wrench& w, const Twist& t, double tol) {
  const Verdict v = check(patch, w, t, tol);
  if (!v.satisfied) throw NotComplementary("classify: wrench and twist do not satisfy the planar Signorini condition");
  return *v.regime;
}

ExtendedCop extended_cop(const Patch& patch, const Wrench& w, const Twist& t, double tol) {
  const double band = tol * verdict_scale(patch, w, t);
  if (auto cop = center_of_pressure(w, band)) return *cop;
  if (!(norm(t.omega_t) > band)) return SupportSet::full_hull();
  return support(patch, perp(t.omega_t)).set;
}

ForceDistribution synthesize_distribution(const Patch& patch, const Wrench& w, const Twist& t, double tol) {
  const PatchCone cone(patch);
  const Verdict v = check(cone, w, t, tol);
  if (!v.satisfied)
    throw NotComplementary("synthesize_distribution: wrench and twist do not satisfy the planar Signorini condition");

  const double band = tol * v.scale;
  if (!(w.f_n > band)) return {};

  const Vec2 c = *center_of_pressure(w, band);
  if (polygon_is_convex(patch) || in_patch(patch, c, tol)) return ForceDistribution::unchecked({{c, w.f_n, {}}});

  // c lies in C(P) but outside a nonconvex P: split it across a chord.
  const auto poly = patch.vertices();
  const double margin = tol * patch.length_scale();
  if (norm(t.omega_t) > band) {
    const Vec2 u = t.omega_t / norm(t.omega_t);
    if (auto chord = bracketing_chord(poly, c, u, margin)) return two_atoms(*chord, w.f_n);
    throw SynthesisFailure("synthesize_distribution: zero-line does not bracket the center of pressure in the patch");
  }

  std::vector<Vec2> directions;
  for (const Vec2& vertex : poly) {
    const Vec2 d = vertex - c;
    if (norm(d) > margin) directions.push_back(d / norm(d));
  }
  constexpr int kAngles = 64;
  for (int k = 0; k < kAngles; ++k) {
    const double angle = std::numbers::pi * k / kAngles;
    directions.push_back({std::cos(angle), std::sin(angle)});
  }
  for (const Vec2& u : directions)
    if (auto chord = bracketing_chord(poly, c, u, margin)) return two_atoms(*chord, w.f_n);
  throw SynthesisFailure("synthesize_distribution: no chord through the center of pressure has both ends in the patch");
}

}  // namespace patch_contact
