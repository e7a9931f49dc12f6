#include "rss/kernel/stokeslet.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "rss/error.hpp"

namespace rss {

void KernelParams::validate() const {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidArgument("eps must be finite and positive");
  if (!(mu > 0.0) || !std::isfinite(mu)) throw InvalidArgument("mu must be finite and positive");
}

Mat3 point_stokeslet(const Vec3& x, const Vec3& y, double eps) {
  const Vec3 d = x - y;
  const double r2 = norm2(d) + eps * eps;
  const double R = std::sqrt(r2);
  const double inv_r = 1.0 / R;
  const double inv_r3 = inv_r / r2;
  const double diag = inv_r + eps * eps * inv_r3;
  Mat3 S{};
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const double v = d[i] * d[j] * inv_r3 + (i == j ? diag : 0.0);
      S[i][j] = v;
      S[j][i] = v;
    }
  }
  return S;
}

double ulp_spacing(double x) {
  const double ax = std::fabs(x);
  return std::nextafter(ax, std::numeric_limits<double>::infinity()) - ax;
}

double epsilon_floor(double max_side_length) { return std::sqrt(ulp_spacing(max_side_length)); }

double epsilon_floor(const TriMesh& mesh) { return epsilon_floor(mesh.max_side_length()); }

void require_above_floor(double eps, double max_side_length) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InvalidArgument("eps must be finite and positive");
  if (!(eps * eps > ulp_spacing(max_side_length))) {
    std::ostringstream msg;
    msg << "eps = " << eps << " is below the floating-point floor: eps^2 must exceed ulp(" << max_side_length
        << ") = " << ulp_spacing(max_side_length) << " (eps > " << epsilon_floor(max_side_length) << ")";
    throw FloatingFloorError(msg.str());
  }
}

}  // namespace rss
