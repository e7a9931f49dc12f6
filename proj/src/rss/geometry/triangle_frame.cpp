#include "rss/geometry/triangle_frame.hpp"

#include <algorithm>
#include <sstream>

#include "rss/error.hpp"

namespace rss {

TriangleFrame TriangleFrame::from_vertices(const Vec3& y0, const Vec3& y1, const Vec3& y2) {
  if (!is_finite(y0) || !is_finite(y1) || !is_finite(y2)) {
    throw InvalidArgument("triangle vertex is not finite");
  }
  TriangleFrame t;
  t.y0 = y0;
  t.y1 = y1;
  t.y2 = y2;
  const Vec3 a = y0 - y1;
  const Vec3 b = y1 - y2;
  t.L1 = norm(a);
  t.L2 = norm(b);
  if (t.L1 == 0.0 || t.L2 == 0.0) {
    throw DegenerateTriangleError("triangle has a zero-length side");
  }
  t.vHat = a / t.L1;
  t.wHat = b / t.L2;
  const Vec3 n = cross(y1 - y0, y2 - y0);
  t.BH = norm(n);
  const double c = dot(t.vHat, t.wHat);
  if (1.0 - c * c < 1e-12 || t.BH < 1e-14 * t.L1 * t.L2) {
    std::ostringstream msg;
    msg << "degenerate triangle " << y0 << ' ' << y1 << ' ' << y2;
    throw DegenerateTriangleError(msg.str());
  }
  t.nHat = n / t.BH;
  // The moment recursions divide by 1 - (vHat . wHat)^2, the squared sine of
  // the angle at y1, so a sharp or flat angle there costs digits.
  const Vec3 ys[3] = {y0, y1, y2};
  double cosk[3];
  for (int k = 0; k < 3; ++k)
    cosk[k] = dot(normalized(ys[(k + 1) % 3] - ys[k]), normalized(ys[(k + 2) % 3] - ys[k]));
  for (int k = 0; k < 3; ++k)
    if (cosk[k] < -0.8660254037844386) t.split_vertex = k;
  if (t.split_vertex < 0 && cosk[1] * cosk[1] > 0.75) {
    double best = cosk[1] * cosk[1];
    for (int s = 1; s < 3; ++s) {
      const double cs = cosk[(s + 1) % 3];
      if (cs * cs < best) {
        best = cs * cs;
        t.stable_shift = s;
      }
    }
  }
  return t;
}

TriangleFrame TriangleFrame::shifted(int s) const {
  const Vec3 ys[3] = {y0, y1, y2};
  return from_vertices(ys[s % 3], ys[(s + 1) % 3], ys[(s + 2) % 3]);
}

double TriangleFrame::max_side() const { return std::max({L1, L2, norm(y2 - y0)}); }

}  // namespace rss
