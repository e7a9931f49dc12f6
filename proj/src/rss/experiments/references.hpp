#pragma once

#include <utility>

#include "rss/vec3.hpp"

namespace rss {

// Analytic solutions used to measure errors. Tractions are the force per area
// the fluid exerts on the body; the solver works with the opposite sign (force
// on the fluid).

struct TractionVelocity {
  Vec3 traction;
  Vec3 velocity;
};

/// Sphere of radius a centred at the origin translating with U.
TractionVelocity sphere_translation_reference(const Vec3& x, double a, const Vec3& U, double mu);

/// Sphere of radius a rotating with angular velocity Omega. The velocity is
/// (a / r)^3 Omega x x; the traction is evaluated at x as given.
TractionVelocity sphere_rotation_reference(const Vec3& x, double a, const Vec3& Omega, double mu);

struct SpheroidRotation {
  Vec3 traction;
  Vec3 torque;  // exerted by the fluid on the body
};

/// Prolate spheroid z^2/a^2 + (x^2 + y^2)/b^2 = 1, a > b, rotating with unit
/// angular speed about +z.
SpheroidRotation spheroid_rotation_reference(const Vec3& x, double a, double b, double mu);

/// beta_0 in the torque on the rotating prolate spheroid.
double spheroid_beta0(double a, double b);

/// Squirmer with only the first slip mode: (u_r, u_theta) at (r, theta),
/// theta measured from the +z pole.
std::pair<double, double> squirmer_reference(double r, double theta, double a, double B1);

/// Tangential slip B1 V1(cos theta) theta_hat at a point on the sphere.
Vec3 squirmer_slip(const Vec3& x, double B1);

/// Axial velocity of pressure-driven flow in the duct |y| < a, |z| < b.
double pipe_reference(double y, double z, double a, double b, double dP, double mu, int n_terms = 50);

/// int_{-s}^{s} int_{-s}^{s} pipe_reference dy dz.
double flux_without_cube(double s, double a, double b, double dP, double mu, int n_terms = 50);

}  // namespace rss
