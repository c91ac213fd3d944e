#pragma once

#include <cstdint>
#include <vector>

#include "patch_contact/fields.hpp"
#include "patch_contact/geometry.hpp"

namespace patch_contact {

/// Homogeneous triple [tangential, normal]: either [m_T, f_N] or [omega_T, v_N].
struct HomVec3 {
  Vec2 tangential;
  double normal = 0.0;

  double norm() const { return std::hypot(tangential.x, tangential.y, normal); }
  HomVec3 operator*(double s) const { return {tangential * s, normal * s}; }
  bool operator==(const HomVec3&) const = default;
};

inline HomVec3 wrench_part(const Wrench& w) { return {w.m_t, w.f_n}; }
inline HomVec3 twist_part(const Twist& t) { return {t.omega_t, t.v_n}; }

/// The cone K_P = R+ (C(perp P) x {1}) generated by a patch, and its dual.
class PatchCone {
 public:
  explicit PatchCone(Patch patch);

  const Patch& patch() const { return patch_; }
  /// perp image of the patch; its hull is the perp image of the patch hull.
  const Patch& perp_patch() const { return perp_patch_; }

 private:
  Patch patch_;
  Patch perp_patch_;
};

/// [m_T, f_N] in K_P: f_N > 0 with m_T / f_N in C(perp P), or the apex.
/// Boundary points pass; slack is tol * max(1, |h|).
bool in_primal(const PatchCone& cone, const HomVec3& h, double tol = kDefaultTol);

/// [omega_T, v_N] in K_P*: min over C(P) of nu_N >= 0, evaluated as
/// v_N - support(P, perp(omega_T)).
bool in_dual(const PatchCone& cone, const HomVec3& h, double tol = kDefaultTol);

/// Slack scale used by in_dual: max(1, |h|) * max(1, diameter).
double dual_scale(const PatchCone& cone, const HomVec3& h);

/// <a.tangential, b.tangential> + a.normal * b.normal.
double complementarity_residual(const HomVec3& a, const HomVec3& b);

/// n elements alpha [y, 1] of K_P with y drawn from C(perp P): a mix of
/// interior convex combinations, boundary points, hull vertices, and apex draws.
std::vector<HomVec3> sample_primal(const PatchCone& cone, std::uint64_t seed, std::size_t n);

/// n elements of K_P*: random omega_T with v_N at or above the support value.
/// About a third of the draws sit exactly on the boundary.
std::vector<HomVec3> sample_dual(const PatchCone& cone, std::uint64_t seed, std::size_t n);

}  // namespace patch_contact
