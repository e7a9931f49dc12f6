#pragma once

#include "rss/vec3.hpp"

namespace rss {

/// Cached geometry of one flat triangle.
///
/// Points of the triangle are parameterized as
///   y(alpha, beta) = y0 - alpha * L1 * vHat - beta * L2 * wHat,  0 <= beta <= alpha <= 1,
/// so (1,0) maps to y1 and (1,1) maps to y2. The Jacobian of the map is BH.
struct TriangleFrame {
  Vec3 y0, y1, y2;
  Vec3 vHat;  // direction of y0 - y1
  Vec3 wHat;  // direction of y1 - y2
  double L1 = 0.0;  // |y0 - y1|
  double L2 = 0.0;  // |y1 - y2|
  double BH = 0.0;  // twice the area
  Vec3 nHat;        // (y1 - y0) x (y2 - y0), normalized
  /// Cyclic shift s such that (y_s, y_{s+1}, y_{s+2}) keeps the angle at the
  /// middle vertex away from 0 and pi; 0 unless the angle at y1 is sharp.
  int stable_shift = 0;
  /// Vertex whose interior angle exceeds 150 degrees, or -1. No labeling of
  /// such a triangle is well conditioned; kernels split it along the altitude
  /// from this vertex into two right triangles.
  int split_vertex = -1;

  /// Throws DegenerateTriangleError when (vHat . wHat)^2 is within 1e-12 of 1
  /// or BH < 1e-14 * L1 * L2.
  static TriangleFrame from_vertices(const Vec3& y0, const Vec3& y1, const Vec3& y2);

  /// Frame of the cyclically relabeled triangle (y_s, y_{s+1}, y_{s+2}).
  TriangleFrame shifted(int s) const;

  double area() const { return 0.5 * BH; }
  Vec3 centroid() const { return (y0 + y1 + y2) / 3.0; }
  double max_side() const;

  /// Point at parameter-space coordinates (alpha, beta).
  Vec3 point(double alpha, double beta) const { return y0 - (alpha * L1) * vHat - (beta * L2) * wHat; }
};

}  // namespace rss
