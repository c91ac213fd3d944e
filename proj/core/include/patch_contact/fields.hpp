#pragma once

#include <optional>
#include <vector>

#include "patch_contact/geometry.hpp"

namespace patch_contact {

/// Relative spatial velocity [omega_T, omega_N, v_T, v_N] in the contact frame.
struct Twist {
  Vec2 omega_t;         // rad/s, tangential angular velocity
  double omega_n = 0.;  // rad/s, normal angular velocity
  Vec2 v_t;             // m/s, tangential linear velocity
  double v_n = 0.;      // m/s, normal linear velocity

  bool finite() const;
  Twist operator+(const Twist& o) const;
  Twist operator*(double s) const;
};

/// Contact wrench [m_T, m_N, f_T, f_N] in the contact frame.
struct Wrench {
  Vec2 m_t;          // N.m, tangential moment
  double m_n = 0.;   // N.m, normal moment
  Vec2 f_t;          // N, tangential force
  double f_n = 0.;   // N, normal force

  bool finite() const;
};

/// One Dirac atom of a contact force distribution.
struct ContactAtom {
  Vec2 point;
  double rho_n = 0.0;
  Vec2 rho_t;
};

/// Finite sum of weighted atoms standing in for rho(x) = [rho_T(x), rho_N(x)].
class ForceDistribution {
 public:
  ForceDistribution() = default;

  /// Validated distribution: every rho_N >= 0 and every atom in the patch
  /// (within tol). Throws std::invalid_argument otherwise.
  static ForceDistribution repulsive(const Patch& patch, std::vector<ContactAtom> atoms, double tol = kDefaultTol);
  /// No validation; used to build counterexamples.
  static ForceDistribution unchecked(std::vector<ContactAtom> atoms);

  const std::vector<ContactAtom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }

 private:
  explicit ForceDistribution(std::vector<ContactAtom> atoms) : atoms_(std::move(atoms)) {}
  std::vector<ContactAtom> atoms_;
};

/// nu_N(x) = v_N + <omega_T, perp(x)>.
double normal_velocity(const Twist& twist, Vec2 x);
/// nu_T(x) = v_T - omega_N perp(x).
Vec2 tangential_velocity(const Twist& twist, Vec2 x);

/// Resultant and moment of the atoms: f_N = sum rho_N, m_T = sum rho_N perp(x),
/// f_T = sum rho_T, m_N = -sum <rho_T, perp(x)>. Compensated summation in
/// list order.
Wrench integrate_wrench(const ForceDistribution& dist);

/// -perp(m_T) / f_N when |f_N| > tol, otherwise empty.
std::optional<Vec2> center_of_pressure(const Wrench& w, double tol = kDefaultTol);

/// Tangential moment about c: m_T - f_N perp(c).
Vec2 varignon_shift(const Wrench& w, Vec2 c);

/// Root of varignon_shift(w, .), computed by inverting perp on m_T / f_N.
/// Bitwise equal to center_of_pressure.
std::optional<Vec2> zmp(const Wrench& w, double tol = kDefaultTol);

}  // namespace patch_contact
