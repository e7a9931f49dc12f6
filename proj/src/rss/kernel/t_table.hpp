#pragma once

#include <array>

#include "rss/geometry/triangle_frame.hpp"
#include "rss/kernel/segment.hpp"

namespace rss {

/// The moment integrals T_{m,n,q} = int int alpha^m beta^n R^{-q} over the
/// parameter-space triangle 0 <= beta <= alpha <= 1 that the velocity formula needs.
struct TTable {
  double T001 = 0, T003 = 0;
  double T101 = 0, T103 = 0;
  double T011 = 0, T013 = 0;
  double T203 = 0, T113 = 0, T023 = 0;
  double T303 = 0, T213 = 0, T123 = 0, T033 = 0;

  /// Lookup by index; throws InvalidArgument for a combination not stored.
  double get(int m, int n, int q) const;
};

/// Segment data for the three sides as seen from one field point.
struct SideBases {
  SegmentBasis e1;  // y0 -> y1
  SegmentBasis e2;  // y1 -> y2
  SegmentBasis d;   // y2 -> y0
};

SideBases side_bases(const Vec3& xf, const TriangleFrame& frame, double eps);

/// Contour integrals of alpha^m beta^n R^{-q} against the e1 and e2
/// components of the outward normal of the parameter triangle.
std::pair<double, double> boundary_AB(int m, int n, int q, const SideBases& bases);

TTable T_table(const Vec3& xf, const TriangleFrame& frame, double eps);

}  // namespace rss
