#pragma once

#include "rss/geometry/mesh.hpp"
#include "rss/vec3.hpp"

namespace rss {

struct KernelParams {
  double eps = 1e-4;  // regularization length
  double mu = 1.0;    // dynamic viscosity

  /// Throws InvalidArgument unless eps and mu are finite and positive.
  void validate() const;
};

/// Regularized Stokeslet for the blob 15 eps^4 / (8 pi (r^2 + eps^2)^{7/2}):
///   S_ij = (1/R + eps^2/R^3) delta_ij + (x_i - y_i)(x_j - y_j) / R^3,  R^2 = |x - y|^2 + eps^2.
/// The 1/(8 pi mu) factor is not included.
Mat3 point_stokeslet(const Vec3& x, const Vec3& y, double eps);

/// Distance from x to the next larger double.
double ulp_spacing(double x);

/// sqrt(ulp_spacing(longest side)). Any admissible eps must exceed it.
double epsilon_floor(double max_side_length);
double epsilon_floor(const TriMesh& mesh);

/// Throws FloatingFloorError when eps^2 <= ulp_spacing(max_side_length).
void require_above_floor(double eps, double max_side_length);

}  // namespace rss
