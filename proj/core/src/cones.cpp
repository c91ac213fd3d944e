#include "patch_contact/cones.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "patch_contact/random.hpp"

namespace patch_contact {

namespace {

// Point of C(perp P): random convex combination, edge point, or vertex.
Vec2 sample_perp_hull(const Patch& perp_patch, Rng& rng) {
  if (perp_patch.is_ellipse()) {
    const Ellipse& e = perp_patch.ellipse();
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    // Boundary for a third of the draws, otherwise area-uniform.
    const double r = rng.chance(1.0 / 3.0) ? 1.0 : std::sqrt(rng.unit());
    return e.to_world({e.semi_a * r * std::cos(angle), e.semi_b * r * std::sin(angle)});
  }
  const auto hull = perp_patch.hull();
  const std::size_t n = hull.size();
  const double mode = rng.unit();
  if (n == 1) return hull[0];
  if (mode < 0.15) return hull[rng.index(n)];
  if (mode < 0.45) {
    const std::size_t i = rng.index(n);
    const double t = rng.unit();
    return hull[i] + (hull[(i + 1) % n] - hull[i]) * t;
  }
  double total = 0.0;
  Vec2 acc;
  for (const Vec2& v : hull) {
    const double w = rng.exponential();
    total += w;
    acc += v * w;
  }
  return acc / total;
}

}  // namespace

PatchCone::PatchCone(Patch patch) : patch_(std::move(patch)), perp_patch_(patch_.rotated_perp()) {}

bool in_primal(const PatchCone& cone, const HomVec3& h, double tol) {
  const double slack = tol * std::max(1.0, h.norm());
  if (h.normal < -slack) return false;
  if (h.normal <= slack) return norm(h.tangential) <= slack;
  return contains(cone.perp_patch(), h.tangential / h.normal, tol);
}

double dual_scale(const PatchCone& cone, const HomVec3& h) {
  return std::max(1.0, h.norm()) * std::max(1.0, cone.patch().diameter());
}

bool in_dual(const PatchCone& cone, const HomVec3& h, double tol) {
  const double min_velocity = h.normal - support(cone.patch(), perp(h.tangential)).value;
  return min_velocity >= -tol * dual_scale(cone, h);
}

double complementarity_residual(const HomVec3& a, const HomVec3& b) {
  return dot(a.tangential, b.tangential) + a.normal * b.normal;
}

std::vector<HomVec3> sample_primal(const PatchCone& cone, std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  std::vector<HomVec3> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double alpha = rng.chance(0.05) ? 0.0 : rng.uniform(0.0, 10.0);
    const Vec2 y = sample_perp_hull(cone.perp_patch(), rng);
    out.push_back({y * alpha, alpha});
  }
  return out;
}

std::vector<HomVec3> sample_dual(const PatchCone& cone, std::uint64_t seed, std::size_t n) {
  Rng rng(seed);
  std::vector<HomVec3> out;
  out.reserve(n);
  const double length = cone.patch().length_scale();
  for (std::size_t i = 0; i < n; ++i) {
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double magnitude = rng.chance(0.05) ? 0.0 : rng.uniform(0.0, 5.0);
    const Vec2 omega{magnitude * std::cos(angle), magnitude * std::sin(angle)};
    const double floor = support(cone.patch(), perp(omega)).value;
    const double lift = rng.chance(1.0 / 3.0) ? 0.0 : rng.uniform(0.0, 5.0 * length);
    out.push_back({omega, floor + lift});
  }
  return out;
}

}  // namespace patch_contact
