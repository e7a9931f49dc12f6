#include "rss/experiments/references.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "rss/error.hpp"

namespace rss {

TractionVelocity sphere_translation_reference(const Vec3& x, double a, const Vec3& U, double mu) {
  TractionVelocity out;
  out.traction = (-1.5 * mu / a) * U;
  const double r = norm(x);
  if (r < a * (1 - 1e-12)) throw InvalidArgument("point inside the sphere");
  const double ar2 = (a * a) / (r * r);
  out.velocity = (a / (4 * r)) * (3 + ar2) * U + (3 * a * dot(x, U) / (4 * r * r)) * (1 - ar2) * (x / r);
  return out;
}

TractionVelocity sphere_rotation_reference(const Vec3& x, double a, const Vec3& Omega, double mu) {
  TractionVelocity out;
  out.traction = (3 * mu / a) * cross(x, Omega);
  const double r = norm(x);
  if (r < a * (1 - 1e-12)) throw InvalidArgument("point inside the sphere");
  const double ar = a / r;
  out.velocity = (ar * ar * ar) * cross(Omega, x);
  return out;
}

double spheroid_beta0(double a, double b) {
  if (!(a > b) || !(b > 0)) throw InvalidArgument("spheroid reference needs a > b > 0");
  const double e = std::sqrt(a * a - b * b) / a;
  return a * a * e * e / (2 * e / (1 - e * e) - std::log((1 + e) / (1 - e)));
}

SpheroidRotation spheroid_rotation_reference(const Vec3& x, double a, double b, double mu) {
  const double e = std::sqrt(a * a - b * b) / a;
  const double beta0 = spheroid_beta0(a, b);
  SpheroidRotation out;
  out.torque = {0, 0, -(32.0 / 3.0) * std::numbers::pi * mu * a * e * beta0};
  const Vec3 n = normalized(Vec3{x.x / (b * b), x.y / (b * b), x.z / (a * a)});
  out.traction = (3 * dot(n, x) / (8 * std::numbers::pi * a * b * b * b * b)) * cross(out.torque, x);
  return out;
}

std::pair<double, double> squirmer_reference(double r, double theta, double a, double B1) {
  if (r < a * (1 - 1e-12)) throw InvalidArgument("point inside the squirmer");
  const double ar3 = std::pow(a / r, 3);
  // U = (2/3) B1; the B1 = 3/2 field scaled linearly.
  const double s = B1 / 1.5;
  return {s * ar3 * std::cos(theta), s * 0.5 * ar3 * std::sin(theta)};
}

Vec3 squirmer_slip(const Vec3& x, double B1) {
  const double r = norm(x);
  const double theta = std::acos(std::clamp(x.z / r, -1.0, 1.0));
  const double phi = std::atan2(x.y, x.x);
  const Vec3 theta_hat{std::cos(theta) * std::cos(phi), std::cos(theta) * std::sin(phi), -std::sin(theta)};
  // V1(cos theta) = sin theta.
  return (B1 * std::sin(theta)) * theta_hat;
}

namespace {
void check_duct(double a, double b, double mu, int n_terms) {
  if (!(a > 0) || !(b > 0) || !(mu > 0)) throw InvalidArgument("duct half-widths and viscosity must be positive");
  if (n_terms < 1) throw InvalidArgument("need at least one series term");
}
}  // namespace

double pipe_reference(double y, double z, double a, double b, double dP, double mu, int n_terms) {
  check_duct(a, b, mu, n_terms);
  double sum = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    const double al = (n - 0.5) * std::numbers::pi;
    // cosh(al y / b) / cosh(al a / b) without overflow.
    const double ratio = std::exp(al * (std::fabs(y) - a) / b) * (1 + std::exp(-2 * al * std::fabs(y) / b)) /
                         (1 + std::exp(-2 * al * a / b));
    sum += (n % 2 ? -1.0 : 1.0) / (al * al * al) * ratio * std::cos(al * z / b);
  }
  return dP / (2 * mu) * (b * b - z * z + 4 * b * b * sum);
}

double flux_without_cube(double s, double a, double b, double dP, double mu, int n_terms) {
  check_duct(a, b, mu, n_terms);
  if (!(s > 0) || s > a || s > b) throw InvalidArgument("square must fit inside the duct");
  double sum = 0.0;
  for (int n = 1; n <= n_terms; ++n) {
    const double al = (n - 0.5) * std::numbers::pi;
    const double ratio = std::exp(al * (s - a) / b) * (1 - std::exp(-2 * al * s / b)) / (1 + std::exp(-2 * al * a / b));
    sum += (n % 2 ? -1.0 : 1.0) / std::pow(al, 5) * ratio * std::sin(al * s / b);
  }
  // Each series term integrates to (2b/al)^2 times its y, z profile.
  return -(2.0 / 3.0) * (dP / mu) * s * s * (s * s - 3 * b * b) + dP / (2 * mu) * 16 * std::pow(b, 4) * sum;
}

}  // namespace rss
