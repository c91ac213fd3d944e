#include <random>

#include "doctest.h"
#include "patch_contact/oracle.hpp"
#include "patch_contact/signorini.hpp"
#include "test_support.hpp"

using namespace patch_contact;
using testing_support::nu_expanded;
using testing_support::unit_square;

namespace {

Wrench wrench_with(Vec2 m_t, double f_n) {
  Wrench w;
  w.m_t = m_t;
  w.f_n = f_n;
  return w;
}

Twist twist_with(Vec2 omega_t, double v_n) {
  Twist t;
  t.omega_t = omega_t;
  t.v_n = v_n;
  return t;
}

// Distance from a point to an extended-CoP set.
double distance_to_set(const SupportSet& s, Vec2 p, const Patch& patch) {
  switch (s.kind) {
    case SupportSet::Kind::vertex:
      return norm(p - s.first);
    case SupportSet::Kind::segment:
      return distance_to_segment(p, s.first, s.second);
    case SupportSet::Kind::full_hull:
      return contains(patch, p, 0.0) ? 0.0 : distance_to_hull_boundary(patch, p);
  }
  return INFINITY;
}

// Checks the pointwise Signorini condition at every atom and at the hull
// extremes, using the hand-expanded normal velocity.
void check_pointwise(const Patch& p, const ForceDistribution& d, const Twist& t, double scale) {
  for (const ContactAtom& a : d.atoms()) {
    CHECK(a.rho_n >= 0.0);
    CHECK(in_patch(p, a.point, 1e-9));
    CHECK(nu_expanded(t, a.point) >= -1e-9 * scale);
    CHECK(std::abs(a.rho_n * nu_expanded(t, a.point)) <= 1e-9 * scale * std::max(1.0, a.rho_n));
  }
  CHECK(testing_support::brute_min_nu(p, t) >= -1e-9 * scale);
}

}  // namespace

TEST_CASE("zero_line examples") {
  const auto a = zero_line(twist_with({1, 0}, 1));
  REQUIRE(a.has_value());
  // Root set of nu_N: x2 = -1.
  for (double s : {-10.0, 0.0, 3.5}) {
    const Vec2 x = a->anchor() + a->direction() * s;
    CHECK(x.y == doctest::Approx(-1.0));
    CHECK(nu_expanded(twist_with({1, 0}, 1), x) == doctest::Approx(0.0).epsilon(1e-14).scale(1));
  }
  CHECK(a->signed_distance({0, 0}) == doctest::Approx(1.0));

  CHECK_FALSE(zero_line(twist_with({0, 0}, 3)).has_value());

  const auto b = zero_line(twist_with({0, 1}, 0));
  REQUIRE(b.has_value());
  CHECK(b->offset == 0.0);
  CHECK(std::abs(b->normal.x) == 1.0);
  CHECK(b->signed_distance({0, 7}) == 0.0);
}

TEST_CASE("zero_line is a unit-normal oriented root set") {
  std::mt19937_64 gen(14);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 1000; ++i) {
    const Twist t = twist_with({u(gen), u(gen)}, u(gen));
    const auto zl = zero_line(t);
    REQUIRE(zl.has_value());
    CHECK(std::abs(norm(zl->normal) - 1.0) <= 1e-12);
    const Vec2 x{u(gen), u(gen)};
    // Signed distance times |omega_T| reproduces nu_N, so the positive side separates.
    CHECK(zl->signed_distance(x) * norm(t.omega_t) ==
          doctest::Approx(nu_expanded(t, x)).epsilon(1e-12).scale(10));
  }
}

TEST_CASE("zero-line keeps the patch on its positive side for dual twists") {
  for (const Patch& p : testing_support::assorted_patches()) {
    const PatchCone cone(p);
    for (const HomVec3& h : sample_dual(cone, 77, 200)) {
      const Twist t = twist_with(h.tangential, h.normal);
      const auto zl = zero_line(t);
      if (!zl) continue;
      const double lowest = -support(p, -zl->normal).value - zl->offset;
      CHECK(lowest >= -1e-9 * dual_scale(cone, h) / norm(t.omega_t));
    }
  }
}

TEST_CASE("check examples on the unit square") {
  const Patch sq = unit_square();
  const Verdict tip = check(sq, wrench_with({-2, 0}, 2), twist_with({1, 0}, 1));
  CHECK(tip.satisfied);
  CHECK(tip.primal_ok);
  CHECK(tip.dual_ok);
  CHECK(tip.residual == 0.0);
  REQUIRE(tip.regime.has_value());
  CHECK(tip.regime->kind == RegimeKind::tipping);
  CHECK(tip.cop.value() == Vec2{0, -1});
  REQUIRE(tip.zero_line.has_value());
  CHECK(tip.zero_line->signed_distance(*tip.cop) == 0.0);

  const Verdict rest = check(sq, wrench_with({0, 0}, 1), Twist{});
  CHECK(rest.satisfied);
  CHECK(rest.regime->kind == RegimeKind::resting);
  CHECK(rest.cop.value() == Vec2{0, 0});
  CHECK_FALSE(rest.zero_line.has_value());

  const Verdict both = check(sq, wrench_with({0, 0}, 1), twist_with({0, 0}, 1));
  CHECK_FALSE(both.satisfied);
  CHECK(both.residual == 1.0);
  CHECK_FALSE(both.regime.has_value());
}

TEST_CASE("check verdict invariant") {
  for (const Patch& p : testing_support::assorted_patches()) {
    const PatchCone cone(p);
    std::mt19937_64 gen(15);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int i = 0; i < 500; ++i) {
      const Wrench w = wrench_with({u(gen), u(gen)}, u(gen));
      const Twist t = twist_with({u(gen), u(gen)}, u(gen));
      const Verdict v = check(cone, w, t);
      CHECK(v.satisfied == (v.primal_ok && v.dual_ok && std::abs(v.residual) <= 1e-9 * v.scale));
      CHECK(v.regime.has_value() == v.satisfied);
    }
  }
  CHECK_THROWS_AS(check(unit_square(), wrench_with({0, 0}, std::nan("")), Twist{}), std::invalid_argument);
}

TEST_CASE("classify examples") {
  const Patch sq = unit_square();
  CHECK(classify(sq, Wrench{}, twist_with({1, 0}, 2)).kind == RegimeKind::separating);

  Twist sliding;
  sliding.v_t = {1, 0};
  const Regime r = classify(sq, wrench_with({0, 0}, 1), sliding);
  CHECK(r.kind == RegimeKind::resting);
  CHECK(r.tangential_motion);
  CHECK_FALSE(classify(sq, wrench_with({0, 0}, 1), Twist{}).tangential_motion);

  CHECK(classify(sq, wrench_with({-2, 0}, 2), twist_with({1, 0}, 1)).kind == RegimeKind::tipping);
  CHECK(classify(sq, Wrench{}, Twist{}).kind == RegimeKind::inactive);

  CHECK_THROWS_AS(classify(sq, wrench_with({0, 0}, 1), twist_with({0, 0}, 1)), NotComplementary);
  CHECK_THROWS_AS(classify(sq, wrench_with({0, 0}, -1), Twist{}), NotComplementary);
}

TEST_CASE("regime reports raw norms") {
  const Regime r = classify(unit_square(), wrench_with({-2, 0}, 2), twist_with({1, 0}, 1));
  CHECK(r.wrench_norm == doctest::Approx(std::sqrt(8.0)));
  CHECK(r.twist_norm == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("extended CoP examples") {
  const Patch sq = unit_square();
  const ExtendedCop point = extended_cop(sq, wrench_with({-2, 0}, 2), Twist{});
  REQUIRE(std::holds_alternative<Vec2>(point));
  CHECK(std::get<Vec2>(point) == Vec2{0, -1});

  const ExtendedCop edge = extended_cop(sq, Wrench{}, twist_with({1, 0}, 2));
  REQUIRE(std::holds_alternative<SupportSet>(edge));
  const SupportSet s = std::get<SupportSet>(edge);
  CHECK(s.kind == SupportSet::Kind::segment);
  CHECK(s.first.y == -1.0);
  CHECK(s.second.y == -1.0);
  CHECK(std::abs(s.first.x - s.second.x) == 2.0);

  const ExtendedCop all = extended_cop(sq, Wrench{}, Twist{});
  REQUIRE(std::holds_alternative<SupportSet>(all));
  CHECK(std::get<SupportSet>(all).kind == SupportSet::Kind::full_hull);

  const ExtendedCop tip = extended_cop(Patch::ellipse({0, 0}, 2, 1), Wrench{}, twist_with({1, 0}, 1));
  REQUIRE(std::holds_alternative<SupportSet>(tip));
  CHECK(std::get<SupportSet>(tip).kind == SupportSet::Kind::vertex);
  CHECK(std::get<SupportSet>(tip).first.y == doctest::Approx(-1.0));
}

TEST_CASE("extended CoP is the limit of tipping CoPs as f_N vanishes") {
  for (const Patch& p : testing_support::assorted_patches()) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      const auto inst = oracle::random_complementary_instance(p, seed, oracle::Family::tipping);
      if (!(inst.wrench.f_n > 0.0)) continue;
      const auto limit = std::get<SupportSet>(extended_cop(p, Wrench{}, inst.twist));
      for (double k : {1.0, 1e-2, 1e-4, 1e-6}) {
        const Wrench w = wrench_with(inst.wrench.m_t * k, inst.wrench.f_n * k);
        const Verdict v = check(p, w, inst.twist);
        CHECK(v.satisfied);
        if (v.cop) CHECK(distance_to_set(limit, *v.cop, p) <= 1e-9 * p.length_scale());
      }
      // Below the band the set itself is returned.
      const Wrench tiny = wrench_with(inst.wrench.m_t * 1e-14, inst.wrench.f_n * 1e-14);
      const ExtendedCop e = extended_cop(p, tiny, inst.twist);
      REQUIRE(std::holds_alternative<SupportSet>(e));
      CHECK(std::get<SupportSet>(e) == limit);
    }
  }
}

TEST_CASE("synthesis examples") {
  const Patch sq = unit_square();
  const auto tip = synthesize_distribution(sq, wrench_with({-2, 0}, 2), twist_with({1, 0}, 1));
  REQUIRE(tip.size() == 1);
  CHECK(tip.atoms()[0].point == Vec2{0, -1});
  CHECK(tip.atoms()[0].rho_n == 2.0);

  CHECK(synthesize_distribution(sq, Wrench{}, twist_with({1, 0}, 2)).empty());
  CHECK(synthesize_distribution(sq, Wrench{}, Twist{}).empty());

  CHECK_THROWS_AS(synthesize_distribution(sq, wrench_with({0, 0}, 1), twist_with({0, 0}, 1)), NotComplementary);
}

TEST_CASE("synthesis on the L-shape notch uses two boundary atoms") {
  const Patch l = testing_support::l_shape();
  const Vec2 c{2, 2};
  const double f = 3.0;
  const Wrench w = wrench_with(perp(c) * f, f);

  // Zero twist: any bracketing chord.
  const auto rest = synthesize_distribution(l, w, Twist{});
  REQUIRE(rest.size() == 2);
  // Tipping about the hull edge from (3,1) to (1,3): nu_N = 4 - x - y.
  const Twist t = twist_with({-1, 1}, 4);
  REQUIRE(check(l, w, t).satisfied);
  const auto tip = synthesize_distribution(l, w, t);
  REQUIRE(tip.size() == 2);

  for (const auto* d : {&rest, &tip}) {
    Vec2 mean{0, 0};
    double total = 0;
    for (const ContactAtom& a : d->atoms()) {
      CHECK(a.rho_n > 0.0);
      CHECK(in_patch(l, a.point, 1e-12));
      CHECK_FALSE(in_patch(l, (a.point + c) * 0.5, 1e-9));  // endpoints sit on the notch rim
      mean += a.point * a.rho_n;
      total += a.rho_n;
    }
    CHECK(total == doctest::Approx(f));
    CHECK(norm(mean / total - c) <= 1e-12);
  }
  for (const ContactAtom& a : tip.atoms()) CHECK(std::abs(nu_expanded(t, a.point)) <= 1e-12);
  check_pointwise(l, tip, t, verdict_scale(l, w, t));
}

TEST_CASE("synthesis round trip on random complementary instances") {
  std::size_t total = 0;
  for (const Patch& p : testing_support::assorted_patches()) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto inst = oracle::random_complementary_instance(p, seed);
      const Verdict v = check(p, inst.wrench, inst.twist);
      REQUIRE(v.satisfied);
      const auto d = synthesize_distribution(p, inst.wrench, inst.twist);
      const Wrench back = integrate_wrench(d);
      const double err = HomVec3{back.m_t - inst.wrench.m_t, back.f_n - inst.wrench.f_n}.norm();
      CHECK(err <= 1e-9 * v.scale);
      check_pointwise(p, d, inst.twist, v.scale);
      ++total;
    }
  }
  CHECK(total == 8 * 300);
}

TEST_CASE("regime geometry properties") {
  for (const Patch& p : testing_support::assorted_patches()) {
    const PatchCone cone(p);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto inst = oracle::random_complementary_instance(p, seed);
      const Verdict v = check(cone, inst.wrench, inst.twist);
      REQUIRE(v.regime.has_value());
      const double band = 1e-9 * v.scale;
      switch (v.regime->kind) {
        case RegimeKind::tipping:
          REQUIRE(v.cop.has_value());
          REQUIRE(v.zero_line.has_value());
          CHECK(std::abs(v.zero_line->signed_distance(*v.cop)) <= 1e-9 * p.length_scale());
          CHECK(distance_to_hull_boundary(p, *v.cop) <= 1e-9 * p.length_scale());
          break;
        case RegimeKind::resting:
          for (const Vec2& x : testing_support::extreme_candidates(p, 64))
            CHECK(std::abs(nu_expanded(inst.twist, x)) <= band);
          break;
        case RegimeKind::separating:
          CHECK(wrench_part(inst.wrench).norm() <= band);
          break;
        case RegimeKind::inactive:
          break;
      }
    }
  }
}

TEST_CASE("a strictly separating twist admits only the zero wrench") {
  for (const Patch& p : testing_support::assorted_patches()) {
    const PatchCone cone(p);
    const auto wrenches = sample_primal(cone, 5, 200);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto inst = oracle::random_complementary_instance(p, seed, oracle::Family::separating);
      for (const HomVec3& h : wrenches) {
        const Wrench w = wrench_with(h.tangential, h.normal);
        const Verdict v = check(cone, w, inst.twist);
        if (v.satisfied) CHECK(h.norm() <= 1e-9 * v.scale);
      }
    }
  }
}

TEST_CASE("verdicts are independent of the planar frame") {
  std::mt19937_64 gen(16);
  std::uniform_real_distribution<double> u(-3, 3);
  for (const Patch& p : testing_support::assorted_patches()) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const testing_support::RigidMotion g{u(gen), {u(gen), u(gen)}};
      const auto inst = oracle::random_complementary_instance(p, seed);
      const Verdict a = check(p, inst.wrench, inst.twist);
      const Verdict b = check(g.apply(p), g.apply(inst.wrench), g.apply(inst.twist));
      CHECK(a.satisfied == b.satisfied);
      REQUIRE(b.regime.has_value());
      CHECK(a.regime->kind == b.regime->kind);
      if (a.cop) CHECK(norm(g.apply(*a.cop) - *b.cop) <= 1e-9 * std::max(1.0, norm(*b.cop)));

      // A penetrating twist stays penetrating.
      Twist bad = inst.twist;
      bad.v_n -= 0.5 * p.length_scale() + 0.5;
      CHECK(check(p, inst.wrench, bad).satisfied == check(g.apply(p), g.apply(inst.wrench), g.apply(bad)).satisfied);
    }
  }
}

TEST_CASE("synthesis on segment and point patches") {
  const Patch seg = Patch::segment({-1, 0}, {1, 0});
  // Tipping about the whole segment: zero-line collinear with it.
  const Twist t = twist_with({1, 0}, 0);
  const Wrench w = wrench_with(perp(Vec2{0.4, 0}) * 2.0, 2.0);
  REQUIRE(check(seg, w, t).satisfied);
  const auto d = synthesize_distribution(seg, w, t);
  REQUIRE(d.size() == 1);
  CHECK(d.atoms()[0].point.x == doctest::Approx(0.4));

  const Patch pt = Patch::point({0, 0});
  const auto one = synthesize_distribution(pt, wrench_with({0, 0}, 3), twist_with({2, -1}, 0));
  REQUIRE(one.size() == 1);
  CHECK(one.atoms()[0].rho_n == 3.0);
}
