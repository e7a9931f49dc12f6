#pragma once

#include <utility>

#include "rss/vec3.hpp"

namespace rss {

/// Which parameter-space side a segment maps to: e1 is y0 -> y1, e2 is
/// y1 -> y2 and d (the diagonal) is y2 -> y0.
enum class SegmentDir { e1, e2, d };

/// Geometry of the straight segment y(theta) = yStart + theta (yEnd - yStart)
/// seen from a field point. ell is the unit vector from yEnd to yStart, so
/// xf - y(theta) has the ell-component a(theta) = a0 + theta L.
struct SegmentGeometry {
  double L = 0.0;
  double a0 = 0.0;    // (xf - yStart) . ell
  double a1 = 0.0;    // (xf - yEnd) . ell
  double rho2 = 0.0;  // squared distance of xf from the segment's line, plus eps^2
  double R0 = 0.0;    // R at theta = 0
  double R1 = 0.0;    // R at theta = 1

  static SegmentGeometry make(const Vec3& xf, const Vec3& yStart, const Vec3& yEnd, double eps);
};

/// Line integrals S_{m,q} = int_0^1 theta^m R^{-q} dtheta along one side, for
/// m in {0, 1, 2} and q in {-1, 1}. Entries not computed stay NaN.
struct SegmentBasis {
  SegmentDir dir = SegmentDir::e1;
  SegmentGeometry geom;
  double S_neg[3];  // q = -1
  double S_pos[3];  // q = +1

  SegmentBasis();

  double S(int m, int q) const;
};

/// asinh(a1/rho) - asinh(a0/rho) for a1 = a0 + L, without cancellation when
/// a0 and a1 share a sign. Equals the arctanh(a/R) difference of the closed form.
double asinh_difference(const SegmentGeometry& g);

/// Closed forms of S_{0,-1} = int R and S_{0,1} = int R^{-1}.
std::pair<double, double> segment_base(const Vec3& xf, const Vec3& yStart, const Vec3& yEnd, double eps);

/// Base entries only.
SegmentBasis segment_base_basis(SegmentDir dir, const Vec3& xf, const Vec3& yStart, const Vec3& yEnd, double eps);

/// Fills S_{1,1} and S_{2,1} (and S_{1,-1} when requested) from the base
/// entries through the integration-by-parts recurrence in m.
void segment_recurse(SegmentBasis& basis, bool with_S1_neg = false);

}  // namespace rss
