#pragma once

#include <array>
#include <span>
#include <vector>

#include "rss/geometry/triangle_frame.hpp"
#include "rss/vec3.hpp"

namespace rss {

using Face = std::array<int, 3>;

/// Indexed triangle surface with cached per-face frames. Immutable after
/// construction, so it can be shared read-only between threads.
class TriMesh {
 public:
  TriMesh() = default;
  /// Validates indices and builds one TriangleFrame per face.
  TriMesh(std::vector<Vec3> vertices, std::vector<Face> faces);

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_faces() const { return faces_.size(); }
  bool empty() const { return faces_.empty(); }

  std::span<const Vec3> vertices() const { return vertices_; }
  std::span<const Face> faces() const { return faces_; }
  std::span<const TriangleFrame> frames() const { return frames_; }

  const Vec3& vertex(std::size_t i) const { return vertices_[i]; }
  const Face& face(std::size_t i) const { return faces_[i]; }
  const TriangleFrame& frame(std::size_t i) const { return frames_[i]; }

  /// One third of the total area of the faces incident to each vertex.
  std::vector<double> vertex_weights() const;
  Vec3 vertex_centroid() const;
  double total_area() const;
  double max_side_length() const;

  /// Applies x -> rotation * x + shift to every vertex.
  TriMesh transformed(const Mat3& rotation, const Vec3& shift) const;

  /// True when two vertices lie within tol * (bounding-box diagonal).
  bool has_duplicate_vertices(double rel_tol = 1e-12) const;

 private:
  std::vector<Vec3> vertices_;
  std::vector<Face> faces_;
  std::vector<TriangleFrame> frames_;
};

struct MeshStats {
  std::size_t num_faces = 0;
  std::size_t num_vertices = 0;
  std::size_t dof = 0;  // 3 * num_vertices
  double h = 0.0;       // sqrt(mean BH)
};

/// Icosahedron with every face split into f^2 sub-triangles, vertices projected
/// onto the sphere of the given radius: 20 f^2 faces and 10 f^2 + 2 vertices.
TriMesh make_icosphere(int f, double radius = 1.0);

/// Prolate spheroid x^2/b^2 + y^2/b^2 + z^2/a^2 = 1 built from make_icosphere(f, 1).
///
/// With grading = 0 the unit sphere is scaled by (b, b, a). With grading > 0 the
/// polar angle is remapped theta -> theta - 0.25 * grading * sin(2 theta), which
/// pulls vertices toward the poles and shrinks the polar triangles. The remap is
/// monotone for grading < 2.
TriMesh make_spheroid_mesh(int f, double a, double b, double grading = 0.0);

/// Closed axis-aligned cube surface; each face carries an n x n grid with
/// n = round(2 halfSide / gridH), each cell split by its diagonal. 12 n^2 faces.
TriMesh make_box_mesh(const Vec3& center, double halfSide, double gridH);

/// Lateral walls y = +-a, z = +-b of a rectangular pipe over x in [-L, L],
/// grid-triangulated with normals pointing into the fluid; the ends are open.
TriMesh make_pipe_mesh(double L, double a, double b, double gridH);

/// Concatenates meshes, offsetting face indices. No vertex merging.
TriMesh merge_meshes(std::span<const TriMesh> parts);

MeshStats mesh_stats(const TriMesh& mesh);

}  // namespace rss
