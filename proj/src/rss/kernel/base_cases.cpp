#include "rss/kernel/base_cases.hpp"

#include <array>
#include <cmath>

#include "rss/error.hpp"
#include "rss/kernel/segment.hpp"
#include "rss/kernel/stokeslet.hpp"

namespace rss {

namespace {

struct SideView {
  Vec3 ya, yb;
  double L;
  Vec3 v;  // (ya - yb) / L
  Vec3 n;  // outward in-plane normal
};

std::array<SideView, 3> sides_of(const TriangleFrame& t) {
  const std::array<std::pair<Vec3, Vec3>, 3> ends{{{t.y0, t.y1}, {t.y1, t.y2}, {t.y2, t.y0}}};
  std::array<SideView, 3> s;
  for (int i = 0; i < 3; ++i) {
    const auto& [ya, yb] = ends[i];
    s[i].ya = ya;
    s[i].yb = yb;
    s[i].L = norm(ya - yb);
    s[i].v = (ya - yb) / s[i].L;
    s[i].n = cross(yb - ya, t.nHat) / s[i].L;
  }
  return s;
}

double half_angle_tangent(double t) { return std::fabs(t) / (1.0 + std::sqrt(1.0 + t * t)); }

double sign(double x) { return x < 0.0 ? -1.0 : 1.0; }

}  // namespace

namespace detail {

double t003_side(double x0n, double x0v, double x1v, double L, double gamma) {
  // With P = x0v / L, Q^2 = (x0n^2 + gamma^2) / L^2 and k = gamma / (L Q):
  //   2 / (Q (1 + k)) * sqrt((1 + k) / (1 - k)) = 2 L / |x0n|,
  //   sqrt((1 - k) / (1 + k)) = |x0n| / (L Q + gamma),
  // which avoids forming 1 - k by subtraction.
  (void)L;
  const double lq = std::sqrt(x0n * x0n + gamma * gamma);
  const double kappa = std::fabs(x0n) / (lq + gamma);
  const double r1 = half_angle_tangent(x0v / lq);
  const double r2 = half_angle_tangent(x1v / lq);
  double bracket;
  if (x0v < 0.0 && x1v > 0.0) {
    // -1 < P < 0: the path crosses the foot of the perpendicular.
    bracket = std::atan(r1 * kappa) + std::atan(r2 * kappa);
  } else if (x0v >= 0.0) {
    bracket = std::atan(r2 * kappa) - std::atan(r1 * kappa);
  } else {
    bracket = std::atan(r1 * kappa) - std::atan(r2 * kappa);
  }
  // -(x0n / (gamma L)) * (2 L / |x0n|) * bracket
  return -2.0 * sign(x0n) * bracket / gamma;
}

}  // namespace detail

double T003(const Vec3& xf, const TriangleFrame& frame, double eps) {
  require_above_floor(eps, frame.max_side());
  const double z0 = dot(xf - frame.y0, frame.nHat);
  const double gamma = std::sqrt(z0 * z0 + eps * eps);
  double sum = 0.0;
  for (const SideView& s : sides_of(frame)) {
    const Vec3 x0 = xf - s.ya;
    const double x0n = dot(x0, s.n);
    if (std::fabs(x0n) < 1e-14 * s.L) continue;
    sum += detail::t003_side(x0n, dot(x0, s.v), dot(xf - s.yb, s.v), s.L, gamma);
  }
  const double t = sum / frame.BH;
  if (!std::isfinite(t)) throw FloatingFloorError("T003 is not finite");
  return t;
}

double T001(const Vec3& xf, const TriangleFrame& frame, double eps, double t003) {
  require_above_floor(eps, frame.max_side());
  const double z0 = dot(xf - frame.y0, frame.nHat);
  const double gamma2 = z0 * z0 + eps * eps;
  double sum = 0.0;
  for (const SideView& s : sides_of(frame)) {
    const Vec3 x0 = xf - s.ya;
    const double x0n = dot(x0, s.n);
    if (std::fabs(x0n) < 1e-14 * s.L) continue;
    SegmentGeometry g;
    g.L = s.L;
    g.a0 = dot(x0, s.v);
    g.a1 = dot(xf - s.yb, s.v);
    g.rho2 = x0n * x0n + gamma2;
    g.R0 = std::sqrt(g.a0 * g.a0 + g.rho2);
    g.R1 = std::sqrt(g.a1 * g.a1 + g.rho2);
    // int_side dR/dn ds = -(x0 . n) * [arctanh(x(alpha) . v / R)]_0^1
    sum += -x0n * asinh_difference(g);
  }
  const double t = (sum - gamma2 * frame.BH * t003) / frame.BH;
  if (!std::isfinite(t)) throw FloatingFloorError("T001 is not finite");
  return t;
}

}  // namespace rss
