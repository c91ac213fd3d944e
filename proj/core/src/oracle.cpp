#include "patch_contact/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "patch_contact/cones.hpp"
#include "patch_contact/random.hpp"
#include "patch_contact/signorini.hpp"

namespace patch_contact::oracle {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kRejectionBudget = 100000;

struct Box {
  Vec2 lo;
  Vec2 hi;
};

Box bounding_box(const Patch& patch) {
  if (patch.is_ellipse()) {
    const Ellipse& e = patch.ellipse();
    const double c = std::cos(e.rotation);
    const double s = std::sin(e.rotation);
    const double hx = std::hypot(e.semi_a * c, e.semi_b * s);
    const double hy = std::hypot(e.semi_a * s, e.semi_b * c);
    return {e.center - Vec2{hx, hy}, e.center + Vec2{hx, hy}};
  }
  Box box{patch.vertices()[0], patch.vertices()[0]};
  for (const Vec2& v : patch.vertices()) {
    box.lo = {std::min(box.lo.x, v.x), std::min(box.lo.y, v.y)};
    box.hi = {std::max(box.hi.x, v.x), std::max(box.hi.y, v.y)};
  }
  return box;
}

Vec2 ellipse_point(const Ellipse& e, double angle, double radius = 1.0) {
  return e.to_world({e.semi_a * radius * std::cos(angle), e.semi_b * radius * std::sin(angle)});
}

// Boundary of P as a closed vertex loop (segments and points degenerate).
std::vector<Vec2> boundary_loop(const Patch& patch) {
  const auto verts = patch.vertices();
  return {verts.begin(), verts.end()};
}

Vec2 random_boundary_point(const Patch& patch, Rng& rng) {
  if (patch.is_ellipse()) return ellipse_point(patch.ellipse(), rng.uniform(0.0, kTwoPi));
  const auto loop = boundary_loop(patch);
  const std::size_t i = rng.index(loop.size());
  return loop[i] + (loop[(i + 1) % loop.size()] - loop[i]) * rng.unit();
}

Vec2 random_vertex(const Patch& patch, Rng& rng) {
  if (patch.is_ellipse()) return random_boundary_point(patch, rng);
  const auto verts = patch.vertices();
  return verts[rng.index(verts.size())];
}

// Point of C(P) with a bias towards its boundary.
Vec2 random_point_in_hull(const Patch& patch, Rng& rng) {
  if (patch.is_ellipse()) {
    const double r = rng.chance(0.3) ? 1.0 : std::sqrt(rng.unit());
    return ellipse_point(patch.ellipse(), rng.uniform(0.0, kTwoPi), r);
  }
  const auto hull = patch.hull();
  if (hull.size() == 1) return hull[0];
  const double mode = rng.unit();
  if (mode < 0.3) {
    const std::size_t i = rng.index(hull.size());
    return hull[i] + (hull[(i + 1) % hull.size()] - hull[i]) * rng.unit();
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

Vec2 random_direction(Rng& rng) {
  const double angle = rng.uniform(0.0, kTwoPi);
  return {std::cos(angle), std::sin(angle)};
}

// Maximizer of <x, d> over C(P) by vertex enumeration or the ellipse closed form.
Vec2 enumerated_argmax(const Patch& patch, Vec2 d) {
  if (patch.is_ellipse()) {
    const Ellipse& e = patch.ellipse();
    const Vec2 axis_a{std::cos(e.rotation), std::sin(e.rotation)};
    const Vec2 axis_b{-std::sin(e.rotation), std::cos(e.rotation)};
    const double A = e.semi_a * dot(d, axis_a);
    const double B = e.semi_b * dot(d, axis_b);
    return ellipse_point(e, std::atan2(B, A));
  }
  const auto verts = patch.vertices();
  Vec2 best = verts[0];
  for (const Vec2& v : verts)
    if (dot(v, d) > dot(best, d)) best = v;
  return best;
}

Twist random_tangential_motion(Rng& rng) {
  Twist t;
  if (rng.chance(0.5)) {
    t.v_t = {rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
    t.omega_n = rng.uniform(-1.0, 1.0);
  }
  return t;
}

// Twist whose zero-line supports C(P) along the face that contains `face_point`.
struct TippingSetup {
  Twist twist;
  std::vector<Vec2> face;  // points of P on the zero-line
};

TippingSetup tipping_setup(const Patch& patch, Rng& rng) {
  TippingSetup out;
  const double speed = rng.uniform(0.2, 3.0);
  const auto hull = patch.hull();
  const bool edge_aligned = !patch.is_ellipse() && hull.size() >= 2 && rng.chance(0.5);
  if (edge_aligned) {
    const std::size_t i = rng.index(hull.size());
    const Vec2 p = hull[i];
    const Vec2 q = hull[(i + 1) % hull.size()];
    Vec2 outward = perp(q - p) / norm(q - p);
    // A segment hull has two sides.
    if (hull.size() == 2 && rng.chance(0.5)) outward = -outward;
    const Vec2 d = outward * speed;  // d = perp(omega_T)
    out.twist.omega_t = perp_inverse(d);
    out.twist.v_n = std::max(dot(p, d), dot(q, d));
    out.face = {p, q};
    const Vec2 mid = p + (q - p) * rng.unit();
    if (in_patch(patch, mid, 0.0)) out.face.push_back(mid);
  } else {
    const Vec2 d = random_direction(rng) * speed;
    out.twist.omega_t = perp_inverse(d);
    const Vec2 x = enumerated_argmax(patch, d);
    out.twist.v_n = dot(x, d);
    out.face = {x};
  }
  return out;
}

}  // namespace

void SamplePlan::validate() const {
  if (grid_resolution < 2) throw std::invalid_argument("SamplePlan: grid_resolution must be at least 2");
}

SampleSet build_samples(const Patch& patch, const SamplePlan& plan) {
  plan.validate();
  SampleSet set;
  set.length_scale = patch.length_scale();
  const Box box = bounding_box(patch);
  const std::size_t n = plan.grid_resolution;
  set.points.reserve(n * n + plan.boundary_samples + 64);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec2 p{box.lo.x + (box.hi.x - box.lo.x) * static_cast<double>(i) / static_cast<double>(n - 1),
                   box.lo.y + (box.hi.y - box.lo.y) * static_cast<double>(j) / static_cast<double>(n - 1)};
      if (in_patch(patch, p, 0.0)) set.points.push_back(p);
    }
  }
  if (plan.include_hull_vertices && !patch.is_ellipse()) {
    // Hull edges of a nonconvex patch may bridge a notch, so midpoints come
    // from the patch's own edges.
    for (const Vec2& v : patch.hull()) set.points.push_back(v);
    const auto verts = patch.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      set.points.push_back(verts[i]);
      if (verts.size() > 1) set.points.push_back((verts[i] + verts[(i + 1) % verts.size()]) * 0.5);
    }
  }
  if (plan.boundary_samples > 0) {
    Rng rng(plan.rng_seed);
    const double phase = rng.unit();
    const std::size_t m = plan.boundary_samples;
    if (patch.is_ellipse()) {
      for (std::size_t k = 0; k < m; ++k)
        set.points.push_back(ellipse_point(patch.ellipse(), kTwoPi * (static_cast<double>(k) + phase) / m));
    } else {
      // Evenly spaced in arc length along the boundary loop.
      const auto loop = boundary_loop(patch);
      double perimeter = 0.0;
      for (std::size_t i = 0; i < loop.size(); ++i) perimeter += norm(loop[(i + 1) % loop.size()] - loop[i]);
      if (perimeter > 0.0) {
        const double step = perimeter / static_cast<double>(m);
        double s = phase * step;
        double walked = 0.0;
        for (std::size_t i = 0; i < loop.size() && s < perimeter; ++i) {
          const Vec2 a = loop[i];
          const Vec2 b = loop[(i + 1) % loop.size()];
          const double len = norm(b - a);
          while (s < walked + len) {
            set.points.push_back(a + (b - a) * ((s - walked) / len));
            s += step;
          }
          walked += len;
        }
      }
    }
  }
  return set;
}

double pointwise_scale(const Twist& t, double length_scale) {
  const double twist_norm = std::hypot(t.omega_t.x, t.omega_t.y, t.v_n);
  return std::max(1.0, twist_norm) * std::max(1.0, length_scale);
}

double sampled_min_normal_velocity(const SampleSet& samples, const Twist& t) {
  double lowest = std::numeric_limits<double>::infinity();
  for (const Vec2& p : samples.points) lowest = std::min(lowest, normal_velocity(t, p));
  return lowest;
}

double enumerated_min_normal_velocity(const Patch& patch, const Twist& t) {
  if (patch.is_ellipse()) {
    // nu_N(center + a cos(s) axis_a + b sin(s) axis_b) = nu_N(center) + A cos(s) + B sin(s).
    const Ellipse& e = patch.ellipse();
    const Vec2 axis_a{std::cos(e.rotation), std::sin(e.rotation)};
    const Vec2 axis_b{-std::sin(e.rotation), std::cos(e.rotation)};
    const double A = e.semi_a * dot(t.omega_t, perp(axis_a));
    const double B = e.semi_b * dot(t.omega_t, perp(axis_b));
    return normal_velocity(t, e.center) - std::hypot(A, B);
  }
  double lowest = std::numeric_limits<double>::infinity();
  for (const Vec2& v : patch.vertices()) lowest = std::min(lowest, normal_velocity(t, v));
  return lowest;
}

PointwiseReport pointwise_check(const Patch& patch, const ForceDistribution& dist, const Twist& t,
                                const SamplePlan& plan, double tol) {
  return pointwise_check(build_samples(patch, plan), dist, t, tol);
}

PointwiseReport pointwise_check(const SampleSet& samples, const ForceDistribution& dist, const Twist& t,
                                double tol) {
  PointwiseReport report;
  report.scale = pointwise_scale(t, samples.length_scale);
  const double slack = tol * report.scale;

  double lowest = std::numeric_limits<double>::infinity();
  auto visit = [&](Vec2 p) {
    const double nu = normal_velocity(t, p);
    if (nu < lowest) {
      lowest = nu;
      if (-nu > report.nonpenetration.magnitude) report.nonpenetration = {-nu, p};
    }
  };
  for (const Vec2& p : samples.points) visit(p);

  for (const ContactAtom& atom : dist.atoms()) {
    visit(atom.point);
    if (-atom.rho_n > report.repulsivity.magnitude) report.repulsivity = {-atom.rho_n, atom.point};
    if (atom.rho_n < -tol) report.repulsivity_ok = false;
    const double product = std::abs(atom.rho_n * normal_velocity(t, atom.point));
    if (product > report.complementarity.magnitude) report.complementarity = {product, atom.point};
    if (product > slack * std::max(1.0, std::abs(atom.rho_n))) report.complementarity_ok = false;
  }
  report.min_normal_velocity = lowest;
  report.nonpenetration_ok = !(lowest < -slack);
  return report;
}

Vec2 random_point_in_patch(const Patch& patch, std::uint64_t seed) {
  Rng rng(seed);
  if (patch.is_ellipse()) return ellipse_point(patch.ellipse(), rng.uniform(0.0, kTwoPi), std::sqrt(rng.unit()));
  if (patch.degenerate()) {
    const auto hull = patch.hull();
    if (hull.size() == 1) return hull[0];
    return hull[0] + (hull[1] - hull[0]) * rng.unit();
  }
  const Box box = bounding_box(patch);
  for (std::size_t k = 0; k < kRejectionBudget; ++k) {
    const Vec2 p{rng.uniform(box.lo.x, box.hi.x), rng.uniform(box.lo.y, box.hi.y)};
    if (in_patch(patch, p, 0.0)) return p;
  }
  throw RejectionBudgetExceeded("random_point_in_patch: no interior point found within the draw budget");
}

RepulsiveInstance random_repulsive_instance(const Patch& patch, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t count = 1 + rng.index(8);
  const bool all_zero = rng.chance(0.05);
  std::vector<ContactAtom> atoms;
  atoms.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double mode = rng.unit();
    Vec2 p;
    if (mode < 0.6)
      p = random_point_in_patch(patch, rng.bits());
    else if (mode < 0.8)
      p = random_vertex(patch, rng);
    else
      p = random_boundary_point(patch, rng);
    const double weight = all_zero ? 0.0 : rng.uniform(0.0, 5.0);
    atoms.push_back({p, weight, {}});
  }
  auto dist = ForceDistribution::unchecked(std::move(atoms));
  const Wrench w = integrate_wrench(dist);
  return {std::move(dist), w};
}

std::string to_string(Family f) {
  switch (f) {
    case Family::resting:
      return "resting";
    case Family::separating:
      return "separating";
    case Family::tipping:
      return "tipping";
  }
  return "unknown";
}

ComplementaryInstance random_complementary_instance(const Patch& patch, std::uint64_t seed) {
  const Family family = static_cast<Family>(Rng(derive_seed(seed, 0xFA)).index(3));
  return random_complementary_instance(patch, seed, family);
}

ComplementaryInstance random_complementary_instance(const Patch& patch, std::uint64_t seed, Family family) {
  Rng rng(seed);
  ComplementaryInstance out;
  out.family = family;
  out.twist = random_tangential_motion(rng);
  std::vector<ContactAtom> atoms;

  switch (family) {
    case Family::resting: {
      const std::size_t count = 1 + rng.index(8);
      for (std::size_t k = 0; k < count; ++k) {
        const Vec2 p = rng.chance(0.7) ? random_point_in_patch(patch, rng.bits()) : random_boundary_point(patch, rng);
        atoms.push_back({p, rng.uniform(0.1, 5.0), {}});
      }
      break;
    }
    case Family::separating: {
      if (!rng.chance(0.1)) out.twist.omega_t = random_direction(rng) * rng.uniform(0.0, 3.0);
      out.twist.v_n = 0.0;
      const double floor = enumerated_min_normal_velocity(patch, out.twist);
      const double margin = rng.uniform(0.05, 1.0) * std::max(1.0, patch.length_scale() * norm(out.twist.omega_t));
      out.twist.v_n = margin - floor;
      break;
    }
    case Family::tipping: {
      const TippingSetup setup = tipping_setup(patch, rng);
      out.twist.omega_t = setup.twist.omega_t;
      out.twist.v_n = setup.twist.v_n;
      for (const Vec2& p : setup.face)
        if (rng.chance(0.8) || atoms.empty()) atoms.push_back({p, rng.uniform(0.1, 5.0), {}});
      break;
    }
  }
  out.dist = ForceDistribution::unchecked(std::move(atoms));
  out.wrench = integrate_wrench(out.dist);
  return out;
}

BoundaryPair random_boundary_pair(const Patch& patch, std::uint64_t seed) {
  Rng rng(seed);
  BoundaryPair out;
  const double mode = rng.unit();
  const double f_n = rng.uniform(0.1, 5.0);
  if (mode < 0.15) {
    // Zero twist part, any wrench of the cone.
    const Vec2 c = random_point_in_hull(patch, rng);
    out.wrench.f_n = f_n;
    out.wrench.m_t = perp(c) * f_n;
    return out;
  }
  if (mode < 0.3) {
    // Zero wrench, any twist of the dual cone.
    out.twist.omega_t = random_direction(rng) * rng.uniform(0.0, 3.0);
    out.twist.v_n = rng.uniform(0.0, 2.0) * patch.length_scale() - enumerated_min_normal_velocity(patch, out.twist);
    return out;
  }
  const TippingSetup setup = tipping_setup(patch, rng);
  out.twist = setup.twist;
  Vec2 c = setup.face[0];
  if (setup.face.size() >= 2) c = setup.face[0] + (setup.face[1] - setup.face[0]) * rng.unit();
  out.wrench.f_n = f_n;
  out.wrench.m_t = perp(c) * f_n;
  return out;
}

Patch random_star_polygon(std::uint64_t seed, std::size_t min_vertices, std::size_t max_vertices) {
  Rng rng(seed);
  const std::size_t n = min_vertices + rng.index(max_vertices - min_vertices + 1);
  const Vec2 center{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
  const double radius = rng.uniform(0.5, 3.0);
  std::vector<double> angles(n);
  // Jittered stratification keeps the angles distinct and the polygon simple.
  for (std::size_t k = 0; k < n; ++k) angles[k] = kTwoPi * (static_cast<double>(k) + rng.uniform(0.05, 0.95)) / n;
  std::sort(angles.begin(), angles.end());
  std::vector<Vec2> verts;
  verts.reserve(n);
  for (double a : angles) {
    const double r = radius * rng.uniform(0.3, 1.0);
    verts.push_back(center + Vec2{r * std::cos(a), r * std::sin(a)});
  }
  return Patch::polygon(std::move(verts));
}

Patch random_convex_polygon(std::uint64_t seed, std::size_t min_vertices, std::size_t max_vertices) {
  const Patch star = random_star_polygon(seed, min_vertices, max_vertices);
  return Patch::polygon({star.hull().begin(), star.hull().end()});
}

Patch random_ellipse(std::uint64_t seed) {
  Rng rng(seed);
  const Vec2 center{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
  const double a = rng.uniform(0.2, 2.0);
  const double b = rng.uniform(0.2, 2.0);
  return Patch::ellipse(center, a, b, rng.uniform(0.0, std::numbers::pi));
}

bool SuiteSummary::all_passed() const {
  return std::all_of(properties.begin(), properties.end(), [](const PropertyTally& t) { return t.failed == 0; });
}

SuiteSummary run_property_suite(const Patch& patch, std::uint64_t seed, std::size_t count, double tol) {
  const PatchCone cone(patch);
  SamplePlan plan;
  plan.rng_seed = seed;
  const SampleSet samples = build_samples(patch, plan);
  SuiteSummary summary;

  auto tally = [&](PropertyTally t, bool ok, double worst) {
    ok ? ++t.passed : ++t.failed;
    t.worst = std::max(t.worst, worst);
    return t;
  };

  PropertyTally forward{"repulsivity_forward"};
  for (std::size_t i = 0; i < count; ++i) {
    const auto inst = random_repulsive_instance(patch, derive_seed(seed, 4 * i));
    forward = tally(forward, in_primal(cone, wrench_part(inst.wrench), tol), 0.0);
  }
  summary.properties.push_back(forward);

  PropertyTally reverse{"repulsivity_reverse"};
  const auto primal = sample_primal(cone, derive_seed(seed, 1), count);
  for (const HomVec3& h : primal) {
    const Wrench w{h.tangential, 0.0, {}, h.normal};
    const auto dist = synthesize_distribution(patch, w, Twist{}, tol);
    const Wrench back = integrate_wrench(dist);
    const double error = HomVec3{back.m_t - w.m_t, back.f_n - w.f_n}.norm() / std::max(1.0, h.norm());
    const bool repulsive = std::all_of(dist.atoms().begin(), dist.atoms().end(), [&](const ContactAtom& a) {
      return a.rho_n >= 0.0 && in_patch(patch, a.point, tol);
    });
    reverse = tally(reverse, repulsive && error <= 1e-9, error);
  }
  summary.properties.push_back(reverse);

  PropertyTally dual{"nonpenetration_equivalence"};
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, 4 * i + 2));
    Twist t;
    t.omega_t = random_direction(rng) * rng.uniform(0.0, 3.0);
    const double floor = enumerated_min_normal_velocity(patch, t);
    t.v_n = -floor + (rng.chance(0.25) ? 0.0 : rng.uniform(-1.0, 1.0) * patch.length_scale());
    const bool brute = sampled_min_normal_velocity(samples, t) >= -tol * pointwise_scale(t, samples.length_scale);
    const bool fast = in_dual(cone, twist_part(t), tol);
    dual = tally(dual, brute == fast, 0.0);
  }
  summary.properties.push_back(dual);

  PropertyTally comp_forward{"complementarity_forward"};
  PropertyTally control{"negative_control"};
  for (std::size_t i = 0; i < count; ++i) {
    const auto inst = random_complementary_instance(patch, derive_seed(seed, 4 * i + 3));
    const Verdict v = check(cone, inst.wrench, inst.twist, tol);
    const double rel = std::abs(v.residual) / v.scale;
    comp_forward = tally(comp_forward, v.satisfied && rel <= 1e-9, rel);

    if (inst.wrench.f_n > 0.0) {
      Twist bumped = inst.twist;
      bumped.v_n += 0.1 * patch.length_scale();
      const bool caught = !check(cone, inst.wrench, bumped, tol).satisfied ||
                          !pointwise_check(samples, inst.dist, bumped, tol).passed();
      control = tally(control, caught, 0.0);
    }
  }
  summary.properties.push_back(comp_forward);

  PropertyTally comp_reverse{"complementarity_reverse"};
  for (std::size_t i = 0; i < count; ++i) {
    const auto pair = random_boundary_pair(patch, derive_seed(seed ^ 0x5EED, i));
    bool ok = false;
    double worst = 0.0;
    try {
      const auto dist = synthesize_distribution(patch, pair.wrench, pair.twist, tol);
      const auto report = pointwise_check(samples, dist, pair.twist, tol);
      ok = report.passed();
      worst = std::max(report.nonpenetration.magnitude, report.complementarity.magnitude);
    } catch (const std::exception&) {
      ok = false;
    }
    comp_reverse = tally(comp_reverse, ok, worst);
  }
  summary.properties.push_back(comp_reverse);
  summary.properties.push_back(control);
  return summary;
}

}  // namespace patch_contact::oracle
