#pragma once

#include <Eigen/Dense>
#include <vector>

#include "rss/geometry/mesh.hpp"
#include "rss/kernel/stokeslet.hpp"

namespace rss {

/// One Vec3 per mesh vertex.
using VertexField = std::vector<Vec3>;

struct DenseSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
  Eigen::Index size() const { return matrix.rows(); }
};

struct SwimmerSolution {
  VertexField forces;
  Vec3 U;
  Vec3 Omega;
};

/// Velocity at each point from piecewise-linear force densities on the mesh.
std::vector<Vec3> evaluate_velocity(const TriMesh& mesh, const VertexField& forces, const std::vector<Vec3>& points,
                                    const KernelParams& params);

/// 3N x 3N matrix M with (M f)_i = velocity at vertex i; unknowns ordered
/// (f_0x, f_0y, f_0z, f_1x, ...).
Eigen::MatrixXd assemble_resistance(const TriMesh& mesh, const KernelParams& params);

/// Rows of the velocity operator for arbitrary evaluation points.
Eigen::MatrixXd assemble_velocity_operator(const TriMesh& mesh, const std::vector<Vec3>& points,
                                           const KernelParams& params);

/// Force densities whose velocity at the vertices equals boundaryVelocity.
VertexField solve_resistance(const TriMesh& mesh, const VertexField& boundaryVelocity, const KernelParams& params);

/// Force- and torque-free body with prescribed surface slip: rigid motion plus
/// slip at every vertex, net force and torque about `center` zero.
SwimmerSolution solve_swimmer(const TriMesh& mesh, const VertexField& slip, const Vec3& center,
                              const KernelParams& params);

/// Dense LU with partial pivoting and up to two refinement steps. Throws
/// SingularSystemError when the factorization breaks down or the residual
/// |A x - b|_inf stays above 1e-10 |b|_inf.
Eigen::VectorXd solve_dense(const Eigen::MatrixXd& A, const Eigen::VectorXd& b);
Eigen::VectorXd solve_dense(const DenseSystem& system);

/// sigma_max / sigma_min.
double condition_number(const Eigen::MatrixXd& A);
double condition_number(const DenseSystem& system);

Vec3 mesh_net_force(const TriMesh& mesh, const VertexField& forces);
Vec3 mesh_net_torque(const TriMesh& mesh, const VertexField& forces, const Vec3& center);

Eigen::VectorXd pack(const std::vector<Vec3>& field);
std::vector<Vec3> unpack(const Eigen::VectorXd& x, std::size_t count);

}  // namespace rss
