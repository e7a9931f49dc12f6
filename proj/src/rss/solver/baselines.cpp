#include "rss/solver/baselines.hpp"

#include <numbers>

#include "rss/error.hpp"
#include "rss/kernel/triangle_velocity.hpp"
#include "rss/solver/parallel.hpp"

namespace rss {

std::vector<Vec3> baseline_mrs_velocity(const TriMesh& mesh, const VertexField& forces,
                                        const std::vector<Vec3>& points, const KernelParams& params) {
  params.validate();
  if (forces.size() != mesh.num_vertices()) throw InvalidArgument("force field does not match the mesh");
  const std::vector<double> w = mesh.vertex_weights();
  const double scale = 1.0 / (8.0 * std::numbers::pi * params.mu);
  std::vector<Vec3> out(points.size());
  parallel_for(points.size(), [&](std::size_t p) {
    Vec3 u{};
    for (std::size_t j = 0; j < mesh.num_vertices(); ++j)
      u += w[j] * (point_stokeslet(points[p], mesh.vertex(j), params.eps) * forces[j]);
    out[p] = scale * u;
  });
  return out;
}

std::vector<Vec3> face_centroids(const TriMesh& mesh) {
  std::vector<Vec3> c;
  c.reserve(mesh.num_faces());
  for (const TriangleFrame& t : mesh.frames()) c.push_back(t.centroid());
  return c;
}

std::vector<Vec3> constant_element_velocity(const TriMesh& mesh, const std::vector<Vec3>& faceForces,
                                            const std::vector<Vec3>& points, const KernelParams& params) {
  params.validate();
  require_above_floor(params.eps, mesh.max_side_length());
  if (faceForces.size() != mesh.num_faces()) throw InvalidArgument("one force per face expected");
  std::vector<Vec3> out(points.size());
  parallel_for(points.size(), [&](std::size_t p) {
    Vec3 u{};
    for (std::size_t j = 0; j < mesh.num_faces(); ++j)
      u += triangle_velocity(points[p], mesh.frame(j), faceForces[j], faceForces[j], faceForces[j], params);
    out[p] = u;
  });
  return out;
}

Eigen::MatrixXd assemble_constant_resistance(const TriMesh& mesh, const KernelParams& params) {
  params.validate();
  require_above_floor(params.eps, mesh.max_side_length());
  const std::vector<Vec3> pts = face_centroids(mesh);
  const std::size_t nf = mesh.num_faces();
  Eigen::MatrixXd M(3 * nf, 3 * nf);
  parallel_for(nf, [&](std::size_t p) {
    for (std::size_t j = 0; j < nf; ++j) {
      const auto G = triangle_influence(pts[p], mesh.frame(j), params);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) M(3 * p + r, 3 * j + c) = G[0][r][c] + G[1][r][c] + G[2][r][c];
    }
  });
  return M;
}

std::vector<Vec3> baseline_constant_solve(const TriMesh& mesh, const std::vector<Vec3>& centroidVelocity,
                                          const KernelParams& params) {
  if (centroidVelocity.size() != mesh.num_faces()) throw InvalidArgument("one velocity per face expected");
  const Eigen::MatrixXd M = assemble_constant_resistance(mesh, params);
  return unpack(solve_dense(M, pack(centroidVelocity)), mesh.num_faces());
}

}  // namespace rss
