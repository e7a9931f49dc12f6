#pragma once

#include "rss/geometry/triangle_frame.hpp"

namespace rss {

/// T_{0,0,3}: integral of R^{-3} over the parameter-space triangle.
///
/// The physical integral is turned into a contour integral with the in-plane
/// potential psi = log(R + gamma) / gamma (gamma^2 = z0^2 + eps^2) and summed
/// side by side, then divided by BH.
double T003(const Vec3& xf, const TriangleFrame& frame, double eps);

/// T_{0,0,1} from the contour integral of dR/dn minus gamma^2 times the
/// physical R^{-3} integral, divided by BH. `t003` must come from T003() for
/// the same arguments.
double T001(const Vec3& xf, const TriangleFrame& frame, double eps, double t003);

namespace detail {

/// Closed form of int_0^1 dalpha / (s (s + gamma/L)), s = sqrt((alpha + P)^2 + Q^2),
/// already multiplied by the side prefactor -(x0 . n) / (gamma L).
double t003_side(double x0n, double x0v, double x1v, double L, double gamma);

}  // namespace detail

}  // namespace rss
