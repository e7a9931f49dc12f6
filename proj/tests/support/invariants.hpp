#pragma once

// Property checks shared by the unit tests and the acceptance runner. Each
// returns the worst observed error, already divided by its own scale, so a
// value <= 1 means the property holds at the stated tolerance.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "rss/geometry/mesh.hpp"
#include "rss/kernel/triangle_velocity.hpp"

namespace rss::invariants {

inline Vec3 random_vec(std::mt19937_64& g, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return {u(g), u(g), u(g)};
}

/// Rotation from a uniformly random unit quaternion.
inline Mat3 random_rotation(std::mt19937_64& g) {
  std::normal_distribution<double> n(0, 1);
  double q[4] = {n(g), n(g), n(g), n(g)};
  const double s = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  for (double& v : q) v /= s;
  const double w = q[0], x = q[1], y = q[2], z = q[3];
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
           {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
           {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

struct TriangleCase {
  Vec3 y0, y1, y2, xf, f0, f1, f2;
  double eps;
  TriangleFrame frame() const { return TriangleFrame::from_vertices(y0, y1, y2); }
};

inline TriangleCase random_triangle_case(std::mt19937_64& g, double eps_lo = 1e-2, double eps_hi = 1.0) {
  std::uniform_real_distribution<double> le(std::log(eps_lo), std::log(eps_hi));
  for (;;) {
    TriangleCase c{random_vec(g, -1, 1), random_vec(g, -1, 1), random_vec(g, -1, 1), random_vec(g, -1.5, 1.5),
                   random_vec(g, -1, 1), random_vec(g, -1, 1), random_vec(g, -1, 1), std::exp(le(g))};
    try {
      if (c.frame().area() > 0.05) return c;
    } catch (const std::exception&) {
    }
  }
}

inline Vec3 velocity(const TriangleCase& c, double mu = 1.0) {
  return triangle_velocity(c.xf, c.frame(), c.f0, c.f1, c.f2, KernelParams{c.eps, mu});
}

/// u(Q xf + t) for the moved triangle and rotated forces vs Q u(xf); tolerance 1e-12.
inline double rigid_motion(int trials, unsigned seed) {
  std::mt19937_64 g(seed);
  double worst = 0;
  for (int k = 0; k < trials; ++k) {
    const TriangleCase c = random_triangle_case(g);
    const Mat3 Q = random_rotation(g);
    const Vec3 t = random_vec(g, -2, 2);
    const TriangleCase m{Q * c.y0 + t, Q * c.y1 + t, Q * c.y2 + t, Q * c.xf + t,
                         Q * c.f0,     Q * c.f1,     Q * c.f2,     c.eps};
    const Vec3 want = Q * velocity(c);
    worst = std::max(worst, norm(velocity(m) - want) / (1e-12 * norm(want)));
  }
  return worst;
}

/// Cycling (y0, y1, y2) and the forces together; tolerance 1e-10.
inline double relabel(int trials, unsigned seed) {
  std::mt19937_64 g(seed);
  double worst = 0;
  for (int k = 0; k < trials; ++k) {
    const TriangleCase c = random_triangle_case(g);
    const TriangleCase r{c.y1, c.y2, c.y0, c.xf, c.f1, c.f2, c.f0, c.eps};
    const Vec3 want = velocity(c);
    worst = std::max(worst, norm(velocity(r) - want) / (1e-10 * norm(want)));
  }
  return worst;
}

/// u(a f + b g) vs a u(f) + b u(g), scaled by 1e-13 (|a u(f)| + |b u(g)|).
inline double linearity(int trials, unsigned seed) {
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> coef(-3, 3);
  double worst = 0;
  for (int k = 0; k < trials; ++k) {
    const TriangleCase c = random_triangle_case(g);
    TriangleCase d = c;
    d.f0 = random_vec(g, -1, 1);
    d.f1 = random_vec(g, -1, 1);
    d.f2 = random_vec(g, -1, 1);
    const double a = coef(g), b = coef(g);
    TriangleCase s = c;
    s.f0 = a * c.f0 + b * d.f0;
    s.f1 = a * c.f1 + b * d.f1;
    s.f2 = a * c.f2 + b * d.f2;
    const Vec3 uc = velocity(c), ud = velocity(d);
    const double scale = 1e-13 * (std::fabs(a) * norm(uc) + std::fabs(b) * norm(ud));
    worst = std::max(worst, norm(velocity(s) - (a * uc + b * ud)) / scale);
  }
  return worst;
}

/// Central-difference divergence with step delta = 1e-4 at off-surface points
/// of one random triangle; tolerance 1e-6 |u| / delta.
inline double divergence(int points, unsigned seed) {
  std::mt19937_64 g(seed);
  TriangleCase c = random_triangle_case(g, 0.05, 0.5);
  const TriangleFrame frame = c.frame();
  const KernelParams params{c.eps, 1.0};
  const double delta = 1e-4;
  double worst = 0;
  for (int k = 0; k < points; ++k) {
    Vec3 x;
    do {
      x = random_vec(g, -1.5, 1.5);
    } while (std::fabs(dot(x - frame.y0, frame.nHat)) < 0.05);
    double div = 0;
    for (int i = 0; i < 3; ++i) {
      Vec3 e{};
      e[i] = delta;
      div += (triangle_velocity(x + e, frame, c.f0, c.f1, c.f2, params)[i] -
              triangle_velocity(x - e, frame, c.f0, c.f1, c.f2, params)[i]) /
             (2 * delta);
    }
    const Vec3 u = triangle_velocity(x, frame, c.f0, c.f1, c.f2, params);
    worst = std::max(worst, std::fabs(div) / (1e-6 * norm(u) / delta));
  }
  return worst;
}

/// |sum (BH / 2) nHat| over the faces, relative to 1e-10 times the total area.
inline double normal_sum(const TriMesh& mesh) {
  Vec3 s{};
  for (const TriangleFrame& t : mesh.frames()) s += (0.5 * t.BH) * t.nHat;
  return norm(s) / (1e-10 * mesh.total_area());
}

}  // namespace rss::invariants
