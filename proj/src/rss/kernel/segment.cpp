#include "rss/kernel/segment.hpp"

#include <cmath>
#include <limits>

#include "rss/error.hpp"
#include "rss/kernel/stokeslet.hpp"

namespace rss {

namespace {
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
}

SegmentGeometry SegmentGeometry::make(const Vec3& xf, const Vec3& yStart, const Vec3& yEnd, double eps) {
  SegmentGeometry g;
  const Vec3 seg = yStart - yEnd;
  g.L = norm(seg);
  if (!(g.L > 0.0)) throw DegenerateTriangleError("zero-length segment");
  require_above_floor(eps, g.L);
  const Vec3 ell = seg / g.L;
  const Vec3 x0 = xf - yStart;
  const Vec3 x1 = xf - yEnd;
  g.a0 = dot(x0, ell);
  g.a1 = dot(x1, ell);
  // Perpendicular part from whichever endpoint is closer.
  const Vec3 perp = norm2(x0) <= norm2(x1) ? x0 - g.a0 * ell : x1 - g.a1 * ell;
  g.rho2 = norm2(perp) + eps * eps;
  g.R0 = std::sqrt(g.a0 * g.a0 + g.rho2);
  g.R1 = std::sqrt(g.a1 * g.a1 + g.rho2);
  return g;
}

SegmentBasis::SegmentBasis() {
  for (int m = 0; m < 3; ++m) {
    S_neg[m] = kNaN;
    S_pos[m] = kNaN;
  }
}

double SegmentBasis::S(int m, int q) const {
  if (m < 0 || m > 2 || (q != 1 && q != -1)) throw InvalidArgument("segment integral index out of range");
  return q == 1 ? S_pos[m] : S_neg[m];
}

double asinh_difference(const SegmentGeometry& g) {
  const double rho = std::sqrt(g.rho2);
  if (g.a0 * g.a1 > 0.0) {
    // asinh(u) - asinh(w) = asinh(u sqrt(1 + w^2) - w sqrt(1 + u^2)), rationalized.
    const double arg = g.L * (g.a1 + g.a0) / (g.a1 * g.R0 + g.a0 * g.R1);
    return std::asinh(arg);
  }
  return std::asinh(g.a1 / rho) - std::asinh(g.a0 / rho);
}

namespace {

std::pair<double, double> base_from_geometry(const SegmentGeometry& g) {
  const double dash = asinh_difference(g);
  // [a R]_0^1, rationalized when a0 and a1 share a sign.
  double aR;
  if (g.a0 * g.a1 > 0.0) {
    aR = g.L * (g.a1 + g.a0) * (g.a1 * g.a1 + g.a0 * g.a0 + g.rho2) / (g.a1 * g.R1 + g.a0 * g.R0);
  } else {
    aR = g.a1 * g.R1 - g.a0 * g.R0;
  }
  const double s_neg = (aR + g.rho2 * dash) / (2.0 * g.L);
  const double s_pos = dash / g.L;
  if (!std::isfinite(s_neg) || !std::isfinite(s_pos) || !(s_pos > 0.0)) {
    throw FloatingFloorError("segment integral lost all precision; increase eps");
  }
  return {s_neg, s_pos};
}

}  // namespace

std::pair<double, double> segment_base(const Vec3& xf, const Vec3& yStart, const Vec3& yEnd, double eps) {
  return base_from_geometry(SegmentGeometry::make(xf, yStart, yEnd, eps));
}

SegmentBasis segment_base_basis(SegmentDir dir, const Vec3& xf, const Vec3& yStart, const Vec3& yEnd, double eps) {
  SegmentBasis b;
  b.dir = dir;
  b.geom = SegmentGeometry::make(xf, yStart, yEnd, eps);
  const auto [s_neg, s_pos] = base_from_geometry(b.geom);
  b.S_neg[0] = s_neg;
  b.S_pos[0] = s_pos;
  return b;
}

void segment_recurse(SegmentBasis& b, bool with_S1_neg) {
  if (std::isnan(b.S_neg[0]) || std::isnan(b.S_pos[0])) {
    throw InvalidArgument("segment_recurse needs the base entries S_{0,-1} and S_{0,1}");
  }
  const SegmentGeometry& g = b.geom;
  const double L2 = g.L * g.L;
  const double xl = g.a0 / g.L;  // (x0 . ell) / L
  // q = 1 (q - 2 = -1):
  //   S_{m+1,1} = [theta^m R]_0^1 / L^2 - m S_{m-1,-1} / L^2 - (x0.ell / L) S_{m,1}
  // with R1 - R0 = L (a1 + a0) / (R1 + R0).
  b.S_pos[1] = (g.L * (g.a1 + g.a0) / (g.R1 + g.R0)) / L2 - xl * b.S_pos[0];
  b.S_pos[2] = g.R1 / L2 - b.S_neg[0] / L2 - xl * b.S_pos[1];
  if (with_S1_neg) {
    // q = -1 (q - 2 = -3): S_{1,-1} = [R^3]_0^1 / (3 L^2) - (x0.ell / L) S_{0,-1}.
    const double r3 = g.R1 * g.R1 * g.R1 - g.R0 * g.R0 * g.R0;
    b.S_neg[1] = r3 / (3.0 * L2) - xl * b.S_neg[0];
  }
  for (int m = 1; m < 3; ++m) {
    if (!std::isfinite(b.S_pos[m])) throw FloatingFloorError("segment recursion produced a non-finite value");
  }
}

}  // namespace rss
