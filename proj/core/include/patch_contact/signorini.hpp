#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "patch_contact/cones.hpp"
#include "patch_contact/fields.hpp"
#include "patch_contact/geometry.hpp"

namespace patch_contact {

class NotComplementary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SynthesisFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Oriented line {x : <x, normal> = offset} where the normal velocity vanishes.
/// normal is -perp(omega_T) / |omega_T|; the positive side is where nu_N > 0.
struct ZeroLine {
  Vec2 normal;
  double offset = 0.0;

  /// Equals nu_N(x) / |omega_T|.
  double signed_distance(Vec2 x) const { return dot(x, normal) - offset; }
  Vec2 direction() const { return perp_inverse(normal); }
  /// Foot of the perpendicular from the origin.
  Vec2 anchor() const { return normal * offset; }
};

/// Empty when |omega_T| <= tol: the field is then constant.
std::optional<ZeroLine> zero_line(const Twist& twist, double tol = kDefaultTol);

enum class RegimeKind { separating, resting, tipping, inactive };

std::string to_string(RegimeKind kind);

struct Regime {
  RegimeKind kind = RegimeKind::inactive;
  /// [v_T, omega_N] nonzero: sliding, or slide-tipping, depending on friction.
  bool tangential_motion = false;
  /// Raw norms of the homogeneous parts, for callers near the zero band.
  double wrench_norm = 0.0;
  double twist_norm = 0.0;
};

/// Classical CoP when f_N is nonzero, otherwise the support set of C(P) in
/// direction perp(omega_T).
using ExtendedCop = std::variant<Vec2, SupportSet>;

struct Verdict {
  bool primal_ok = false;
  bool dual_ok = false;
  double residual = 0.0;
  /// Band used for the residual and for "zero" homogeneous parts.
  double scale = 1.0;
  bool satisfied = false;
  /// Filled only when satisfied.
  std::optional<Regime> regime;
  std::optional<Vec2> cop;
  std::optional<ZeroLine> zero_line;
  ExtendedCop extended_cop;
};

/// max(1, |[m_T, f_N]|, |[omega_T, v_N]|, diameter).
double verdict_scale(const Patch& patch, const Wrench& w, const Twist& t);

/// Evaluates K_P membership of the wrench part, K_P* membership of the twist
/// part, and their complementarity. m_N, f_T, v_T and omega_N only feed the
/// tangential_motion flag.
Verdict check(const Patch& patch, const Wrench& w, const Twist& t, double tol = kDefaultTol);
Verdict check(const PatchCone& cone, const Wrench& w, const Twist& t, double tol = kDefaultTol);

/// Regime of a complementary pair. Throws NotComplementary if check fails.
Regime classify(const Patch& patch, const Wrench& w, const Twist& t, double tol = kDefaultTol);

ExtendedCop extended_cop(const Patch& patch, const Wrench& w, const Twist& t, double tol = kDefaultTol);

/// Minimal atom set realizing the normal part of w while satisfying the
/// pointwise law against t: no atom when f_N vanishes, one atom at the CoP
/// when it lies in P, otherwise two atoms on the boundary of P along a chord
/// through the CoP (the zero-line when the twist part is nonzero).
///
/// Throws NotComplementary when check fails, SynthesisFailure when no chord
/// is found.
ForceDistribution synthesize_distribution(const Patch& patch, const Wrench& w, const Twist& t,
                                          double tol = kDefaultTol);

}  // namespace patch_contact
