#include <random>

#include "doctest.h"
#include "patch_contact/cones.hpp"
#include "patch_contact/oracle.hpp"
#include "patch_contact/signorini.hpp"
#include "test_support.hpp"

using namespace patch_contact;
using namespace patch_contact::oracle;
using testing_support::unit_square;

TEST_CASE("SamplePlan validation") {
  SamplePlan plan;
  plan.grid_resolution = 1;
  CHECK_THROWS_AS(plan.validate(), std::invalid_argument);
  CHECK_THROWS_AS(build_samples(unit_square(), plan), std::invalid_argument);
  plan.grid_resolution = 2;
  plan.boundary_samples = 0;
  CHECK_NOTHROW(plan.validate());
}

TEST_CASE("samples lie in the patch and include hull vertices") {
  for (const Patch& p : testing_support::assorted_patches()) {
    const SampleSet s = build_samples(p, SamplePlan{});
    CHECK_FALSE(s.points.empty());
    for (const Vec2& x : s.points) {
      INFO("sample ", x.x, ", ", x.y);
      CHECK(in_patch(p, x, 1e-9));
    }
    if (!p.is_ellipse())
      for (const Vec2& v : p.hull()) CHECK(std::find(s.points.begin(), s.points.end(), v) != s.points.end());
  }
}

TEST_CASE("pointwise_check examples") {
  const Patch sq = unit_square();
  Twist tip;
  tip.omega_t = {1, 0};
  tip.v_n = 1;
  Wrench w;
  w.m_t = {-2, 0};
  w.f_n = 2;
  const auto dist = synthesize_distribution(sq, w, tip);
  CHECK(pointwise_check(sq, dist, tip, SamplePlan{}).passed());

  // Atom where nu_N = 1.
  Twist lift;
  lift.v_n = 1;
  const auto bad = ForceDistribution::unchecked({{{0.5, 0.5}, 1.0, {}}});
  const PointwiseReport r = pointwise_check(sq, bad, lift, SamplePlan{});
  CHECK_FALSE(r.complementarity_ok);
  CHECK(r.complementarity.magnitude == doctest::Approx(1.0));
  REQUIRE(r.complementarity.where.has_value());
  CHECK(*r.complementarity.where == Vec2{0.5, 0.5});
  CHECK(r.repulsivity_ok);
  CHECK(r.nonpenetration_ok);

  Twist sep;
  sep.omega_t = {1, 0};
  sep.v_n = 2;
  const PointwiseReport ok = pointwise_check(sq, ForceDistribution{}, sep, SamplePlan{});
  CHECK(ok.passed());
  CHECK(ok.min_normal_velocity == doctest::Approx(1.0));
}

TEST_CASE("pointwise_check reports negative intensities and penetration") {
  const Patch sq = unit_square();
  const auto neg = ForceDistribution::unchecked({{{0, 0}, -0.5, {}}});
  const PointwiseReport r = pointwise_check(sq, neg, Twist{}, SamplePlan{});
  CHECK_FALSE(r.repulsivity_ok);
  CHECK(r.repulsivity.magnitude == doctest::Approx(0.5));

  Twist dive;
  dive.omega_t = {1, 0};
  dive.v_n = 0.5;  // nu_N = 0.5 + y, negative on the bottom strip
  const PointwiseReport p = pointwise_check(sq, ForceDistribution{}, dive, SamplePlan{});
  CHECK_FALSE(p.nonpenetration_ok);
  CHECK(p.nonpenetration.magnitude == doctest::Approx(0.5));
  REQUIRE(p.nonpenetration.where.has_value());
  CHECK(p.nonpenetration.where->y == -1.0);
}

TEST_CASE("enumerated and sampled minima agree with the brute force") {
  std::mt19937_64 gen(19);
  std::uniform_real_distribution<double> u(-3, 3);
  for (const Patch& p : testing_support::assorted_patches()) {
    const SampleSet s = build_samples(p, SamplePlan{});
    for (int i = 0; i < 200; ++i) {
      Twist t;
      t.omega_t = {u(gen), u(gen)};
      t.v_n = u(gen);
      const double brute = testing_support::brute_min_nu(p, t);
      CHECK(enumerated_min_normal_velocity(p, t) == doctest::Approx(brute).epsilon(1e-7).scale(p.length_scale()));
      CHECK(sampled_min_normal_velocity(s, t) >= enumerated_min_normal_velocity(p, t) - 1e-12 * p.length_scale());
    }
  }
}

TEST_CASE("random repulsive instances") {
  for (const Patch& p : testing_support::assorted_patches()) {
    const PatchCone cone(p);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto inst = random_repulsive_instance(p, seed);
      CHECK(inst.dist.size() >= 1);
      CHECK(inst.dist.size() <= 8);
      for (const ContactAtom& a : inst.dist.atoms()) {
        CHECK(a.rho_n >= 0.0);
        CHECK(in_patch(p, a.point, 1e-9));
      }
      CHECK(in_primal(cone, wrench_part(inst.wrench)));
      const auto again = random_repulsive_instance(p, seed);
      CHECK(again.wrench.f_n == inst.wrench.f_n);
      CHECK(again.wrench.m_t == inst.wrench.m_t);
    }
  }
}

TEST_CASE("single atom at a hull vertex puts the CoP there") {
  const Patch p = testing_support::l_shape();
  for (const Vec2& v : p.hull()) {
    const Wrench w = integrate_wrench(ForceDistribution::repulsive(p, {{v, 2.5, {}}}));
    const Vec2 c = center_of_pressure(w).value();
    CHECK(norm(c - v) <= 1e-15 * p.length_scale());
  }
  // All-zero weights integrate to the apex.
  const Wrench zero = integrate_wrench(ForceDistribution::repulsive(p, {{{0, 0}, 0, {}}, {{1, 1}, 0, {}}}));
  CHECK(in_primal(PatchCone(p), wrench_part(zero)));
  CHECK(wrench_part(zero).norm() == 0.0);
}

TEST_CASE("complementary families produce their regimes") {
  for (const Patch& p : testing_support::assorted_patches()) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto a = random_complementary_instance(p, seed, Family::resting);
      CHECK(classify(p, a.wrench, a.twist).kind == RegimeKind::resting);
      const auto b = random_complementary_instance(p, seed, Family::separating);
      CHECK(classify(p, b.wrench, b.twist).kind == RegimeKind::separating);
      CHECK(b.dist.empty());
      const auto c = random_complementary_instance(p, seed, Family::tipping);
      CHECK(classify(p, c.wrench, c.twist).kind == RegimeKind::tipping);
      CHECK(pointwise_check(p, c.dist, c.twist, SamplePlan{}).passed());
    }
  }
}

TEST_CASE("tipping on the unit square along the bottom edge") {
  // Search the family for a bottom-edge draw.
  bool found = false;
  for (std::uint64_t seed = 0; seed < 500 && !found; ++seed) {
    const auto c = random_complementary_instance(unit_square(), seed, Family::tipping);
    const auto zl = zero_line(c.twist);
    if (!zl || zl->normal != Vec2{0, 1} || zl->offset != -1.0) continue;
    found = true;
    const Verdict v = check(unit_square(), c.wrench, c.twist);
    CHECK(v.satisfied);
    CHECK(v.regime->kind == RegimeKind::tipping);
    CHECK(v.cop->y == doctest::Approx(-1.0));
    CHECK(std::abs(v.cop->x) <= 1.0);
  }
  CHECK(found);
}

TEST_CASE("random point sampling gives up on sliver patches") {
  const Patch sliver = Patch::polygon({{0, 0}, {1, 1}, {1 + 1e-10, 1}});
  CHECK_THROWS_AS(random_point_in_patch(sliver, 1), RejectionBudgetExceeded);
  CHECK(in_patch(testing_support::l_shape(), random_point_in_patch(testing_support::l_shape(), 3), 0.0));
}

TEST_CASE("random patch generators") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Patch convex = random_convex_polygon(seed);
    CHECK(convex.hull().size() == convex.vertices().size());
    CHECK(convex.vertices().size() >= 3);
    CHECK(convex.vertices().size() <= 12);
    const Patch star = random_star_polygon(seed);
    CHECK(star.vertices().size() >= 3);
    const Patch e = random_ellipse(seed);
    CHECK(e.is_ellipse());
    CHECK(random_star_polygon(seed).vertices().size() == star.vertices().size());
  }
}

TEST_CASE("property suite passes on the unit square with seed 0") {
  const SuiteSummary s = run_property_suite(unit_square(), 0, 1000);
  for (const auto& p : s.properties) {
    INFO(p.name);
    CHECK(p.failed == 0);
    CHECK(p.passed > 0);
  }
  CHECK(s.all_passed());
  CHECK(s.properties.size() == 6);
}

TEST_CASE("negative control catches a lifted twist") {
  const auto inst = random_complementary_instance(unit_square(), 3, Family::resting);
  Twist bumped = inst.twist;
  bumped.v_n += 0.1 * unit_square().diameter();
  const bool caught = !check(unit_square(), inst.wrench, bumped).satisfied ||
                      !pointwise_check(unit_square(), inst.dist, bumped, SamplePlan{}).passed();
  CHECK(caught);
}
