#include "patch_contact/fields.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace patch_contact {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v))
      comp_ += (sum_ - t) + v;
    else
      comp_ += (v - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace

bool Twist::finite() const {
  return omega_t.finite() && std::isfinite(omega_n) && v_t.finite() && std::isfinite(v_n);
}

Twist Twist::operator+(const Twist& o) const {
  return {omega_t + o.omega_t, omega_n + o.omega_n, v_t + o.v_t, v_n + o.v_n};
}

Twist Twist::operator*(double s) const { return {omega_t * s, omega_n * s, v_t * s, v_n * s}; }

bool Wrench::finite() const { return m_t.finite() && std::isfinite(m_n) && f_t.finite() && std::isfinite(f_n); }

ForceDistribution ForceDistribution::repulsive(const Patch& patch, std::vector<ContactAtom> atoms, double tol) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const ContactAtom& a = atoms[i];
    if (!a.point.finite() || !std::isfinite(a.rho_n) || !a.rho_t.finite())
      throw std::invalid_argument("atom " + std::to_string(i) + " is not finite");
    if (a.rho_n < 0.0) throw std::invalid_argument("atom " + std::to_string(i) + " has negative normal intensity");
    if (!in_patch(patch, a.point, tol)) throw std::invalid_argument("atom " + std::to_string(i) + " lies outside the patch");
  }
  return ForceDistribution(std::move(atoms));
}

ForceDistribution ForceDistribution::unchecked(std::vector<ContactAtom> atoms) {
  return ForceDistribution(std::move(atoms));
}

double normal_velocity(const Twist& twist, Vec2 x) { return twist.v_n + dot(twist.omega_t, perp(x)); }

Vec2 tangential_velocity(const Twist& twist, Vec2 x) { return twist.v_t - twist.omega_n * perp(x); }

Wrench integrate_wrench(const ForceDistribution& dist) {
  CompensatedSum f_n, m_tx, m_ty, f_tx, f_ty, m_n;
  for (const ContactAtom& a : dist.atoms()) {
    const Vec2 xp = perp(a.point);
    f_n.add(a.rho_n);
    m_tx.add(a.rho_n * xp.x);
    m_ty.add(a.rho_n * xp.y);
    f_tx.add(a.rho_t.x);
    f_ty.add(a.rho_t.y);
    m_n.add(-(a.rho_t.x * xp.x));
    m_n.add(-(a.rho_t.y * xp.y));
  }
  return {{m_tx.value(), m_ty.value()}, m_n.value(), {f_tx.value(), f_ty.value()}, f_n.value()};
}

std::optional<Vec2> center_of_pressure(const Wrench& w, double tol) {
  if (!(std::abs(w.f_n) > tol)) return std::nullopt;
  return -perp(w.m_t) / w.f_n;
}

Vec2 varignon_shift(const Wrench& w, Vec2 c) { return w.m_t - w.f_n * perp(c); }

std::optional<Vec2> zmp(const Wrench& w, double tol) {
  if (!(std::abs(w.f_n) > tol)) return std::nullopt;
  // varignon_shift(w, c) = 0  <=>  perp(c) = m_T / f_N.
  return perp_inverse(w.m_t / w.f_n);
}

}  // namespace patch_contact
