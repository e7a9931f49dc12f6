#pragma once

#include <array>

#include "rss/geometry/triangle_frame.hpp"
#include "rss/kernel/stokeslet.hpp"
#include "rss/kernel/t_table.hpp"

namespace rss {

/// Vector coefficients of the cubic numerator in
///   S(xf, y(alpha, beta)) f(alpha, beta)
///     = f0/R + P00/R^3 + alpha (fa/R + P10/R^3) + beta (fb/R + P01/R^3)
///       + sum_{i+j in {2,3}} alpha^i beta^j Pij / R^3.
struct PCoefficients {
  Vec3 P00, P10, P01, P20, P11, P02, P30, P21, P12, P03;
};

/// x0 = xf - y0, fa = f1 - f0, fb = f2 - f1.
PCoefficients p_coefficients(const Vec3& xf, const TriangleFrame& frame, const Vec3& f0, const Vec3& f1,
                             const Vec3& f2, double eps);

/// Velocity at xf induced by one triangle whose force density interpolates
/// f0, f1, f2 linearly from its vertices. The force density is the force the
/// surface exerts on the fluid.
/// Triangles with a sharp angle at y1 are evaluated on the relabeling given by
/// frame.stable_shift, and those with an angle above 150 degrees as two right
/// triangles; the integral depends on neither.
Vec3 triangle_velocity(const Vec3& xf, const TriangleFrame& frame, const Vec3& f0, const Vec3& f1, const Vec3& f2,
                       const KernelParams& params);

/// Same, reusing a table computed for (xf, frame, params.eps).
Vec3 triangle_velocity(const Vec3& xf, const TriangleFrame& frame, const TTable& table, const Vec3& f0,
                       const Vec3& f1, const Vec3& f2, const KernelParams& params);

/// Blocks G[k] with u(xf) = G[0] f0 + G[1] f1 + G[2] f2, 1/(8 pi mu) included.
std::array<Mat3, 3> triangle_influence(const Vec3& xf, const TriangleFrame& frame, const KernelParams& params);
std::array<Mat3, 3> triangle_influence(const Vec3& xf, const TriangleFrame& frame, const TTable& table,
                                       const KernelParams& params);

Vec3 triangle_net_force(const TriangleFrame& frame, const Vec3& f0, const Vec3& f1, const Vec3& f2);

/// Torque of the force density about yc.
Vec3 triangle_net_torque(const TriangleFrame& frame, const Vec3& f0, const Vec3& f1, const Vec3& f2, const Vec3& yc);

}  // namespace rss
