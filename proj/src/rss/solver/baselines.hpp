#pragma once

#include <vector>

#include "rss/solver/solver.hpp"

namespace rss {

/// Point regularized Stokeslets at the vertices with one-third incident-area weights.
std::vector<Vec3> baseline_mrs_velocity(const TriMesh& mesh, const VertexField& forces,
                                        const std::vector<Vec3>& points, const KernelParams& params);

/// Face centroids, in face order.
std::vector<Vec3> face_centroids(const TriMesh& mesh);

/// Velocity from one constant force density per face.
std::vector<Vec3> constant_element_velocity(const TriMesh& mesh, const std::vector<Vec3>& faceForces,
                                            const std::vector<Vec3>& points, const KernelParams& params);

/// 3F x 3F collocation matrix at face centroids for constant elements.
Eigen::MatrixXd assemble_constant_resistance(const TriMesh& mesh, const KernelParams& params);

/// Per-face constant force densities reproducing centroidVelocity at the face centroids.
std::vector<Vec3> baseline_constant_solve(const TriMesh& mesh, const std::vector<Vec3>& centroidVelocity,
                                          const KernelParams& params);

}  // namespace rss
