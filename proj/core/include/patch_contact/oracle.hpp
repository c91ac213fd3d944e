#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "patch_contact/fields.hpp"
#include "patch_contact/geometry.hpp"

namespace patch_contact::oracle {

class RejectionBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Where the pointwise verifier evaluates the normal velocity field.
struct SamplePlan {
  std::size_t grid_resolution = 101;  // per axis over the bounding box, >= 2
  bool include_hull_vertices = true;  // hull vertices and edge midpoints
  std::size_t boundary_samples = 256;
  std::uint64_t rng_seed = 0;         // jitters boundary sample phase

  /// Throws std::invalid_argument if grid_resolution < 2.
  void validate() const;
};

/// Points of P selected by a plan. Build once, reuse across twists.
struct SampleSet {
  std::vector<Vec2> points;
  double length_scale = 1.0;
};

SampleSet build_samples(const Patch& patch, const SamplePlan& plan);

struct Violation {
  double magnitude = 0.0;  // zero when the condition holds everywhere
  std::optional<Vec2> where;
};

/// Worst case of each pointwise condition 0 <= rho_N(x) _|_ nu_N(x) >= 0.
struct PointwiseReport {
  Violation repulsivity;       // max(0, -rho_N) over atoms
  Violation nonpenetration;    // max(0, -nu_N) over samples and atoms
  Violation complementarity;   // max |rho_N nu_N| over atoms
  double min_normal_velocity = 0.0;
  double scale = 1.0;
  bool repulsivity_ok = true;
  bool nonpenetration_ok = true;
  bool complementarity_ok = true;

  bool passed() const { return repulsivity_ok && nonpenetration_ok && complementarity_ok; }
};

/// Slack scale of the pointwise checks: max(1, |[omega_T, v_N]|) * max(1, length scale).
double pointwise_scale(const Twist& t, double length_scale);

PointwiseReport pointwise_check(const Patch& patch, const ForceDistribution& dist, const Twist& t,
                                const SamplePlan& plan, double tol = kDefaultTol);
PointwiseReport pointwise_check(const SampleSet& samples, const ForceDistribution& dist, const Twist& t,
                                double tol = kDefaultTol);

/// Minimum of nu_N over the sample set.
double sampled_min_normal_velocity(const SampleSet& samples, const Twist& t);

/// Minimum of nu_N over C(P) by hull-vertex enumeration, or by the
/// closed-form ellipse extremum. Independent of the support-function path.
double enumerated_min_normal_velocity(const Patch& patch, const Twist& t);

/// Uniform point of P: rejection sampling in the bounding box for polygons
/// with area, convex combinations for degenerate ones.
Vec2 random_point_in_patch(const Patch& patch, std::uint64_t seed);

/// 1 to 8 atoms with nonnegative weights at random patch points.
struct RepulsiveInstance {
  ForceDistribution dist;
  Wrench wrench;
};
RepulsiveInstance random_repulsive_instance(const Patch& patch, std::uint64_t seed);

enum class Family { resting, separating, tipping };
std::string to_string(Family f);

struct ComplementaryInstance {
  Family family = Family::resting;
  ForceDistribution dist;
  Twist twist;
  Wrench wrench;
};

/// Pointwise-complementary instance from a family drawn by the seed.
ComplementaryInstance random_complementary_instance(const Patch& patch, std::uint64_t seed);
ComplementaryInstance random_complementary_instance(const Patch& patch, std::uint64_t seed, Family family);

/// Pair on the cone boundaries with zero residual: a twist whose zero-line
/// supports C(P) and a wrench whose CoP lies in the touching face. A share of
/// draws uses a zero twist or a zero wrench instead.
struct BoundaryPair {
  Wrench wrench;
  Twist twist;
};
BoundaryPair random_boundary_pair(const Patch& patch, std::uint64_t seed);

/// Star polygon with sorted random angles and random radii; generally nonconvex.
Patch random_star_polygon(std::uint64_t seed, std::size_t min_vertices = 3, std::size_t max_vertices = 12);
/// Convex hull of a random star polygon.
Patch random_convex_polygon(std::uint64_t seed, std::size_t min_vertices = 3, std::size_t max_vertices = 12);
Patch random_ellipse(std::uint64_t seed);

/// Pass/fail tallies of the property suite for one patch.
struct PropertyTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  double worst = 0.0;  // worst residual or violation seen
};

struct SuiteSummary {
  std::vector<PropertyTally> properties;
  bool all_passed() const;
};

/// Runs repulsivity (both directions), nonpenetration equivalence,
/// complementarity (both directions), and the negative control on `count`
/// instances each.
SuiteSummary run_property_suite(const Patch& patch, std::uint64_t seed, std::size_t count,
                                double tol = kDefaultTol);

}  // namespace patch_contact::oracle
