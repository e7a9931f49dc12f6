#include "rss/geometry/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include "rss/error.hpp"

namespace rss {

TriMesh::TriMesh(std::vector<Vec3> vertices, std::vector<Face> faces)
    : vertices_(std::move(vertices)), faces_(std::move(faces)) {
  const int nv = static_cast<int>(vertices_.size());
  frames_.reserve(faces_.size());
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const Face& f = faces_[i];
    for (int k = 0; k < 3; ++k) {
      if (f[k] < 0 || f[k] >= nv) {
        std::ostringstream msg;
        msg << "face " << i << " references vertex " << f[k] << " outside [0, " << nv << ")";
        throw InvalidArgument(msg.str());
      }
    }
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) {
      std::ostringstream msg;
      msg << "face " << i << " repeats a vertex";
      throw InvalidArgument(msg.str());
    }
    frames_.push_back(TriangleFrame::from_vertices(vertices_[f[0]], vertices_[f[1]], vertices_[f[2]]));
  }
}

std::vector<double> TriMesh::vertex_weights() const {
  std::vector<double> w(vertices_.size(), 0.0);
  for (std::size_t i = 0; i < faces_.size(); ++i) {
    const double third = frames_[i].area() / 3.0;
    for (int v : faces_[i]) w[v] += third;
  }
  return w;
}

Vec3 TriMesh::vertex_centroid() const {
  Vec3 c;
  for (const Vec3& v : vertices_) c += v;
  return vertices_.empty() ? c : c / static_cast<double>(vertices_.size());
}

double TriMesh::total_area() const {
  double a = 0.0;
  for (const auto& t : frames_) a += t.area();
  return a;
}

double TriMesh::max_side_length() const {
  double m = 0.0;
  for (const auto& t : frames_) m = std::max(m, t.max_side());
  return m;
}

TriMesh TriMesh::transformed(const Mat3& rotation, const Vec3& shift) const {
  std::vector<Vec3> v;
  v.reserve(vertices_.size());
  for (const Vec3& p : vertices_) v.push_back(rotation * p + shift);
  return TriMesh(std::move(v), faces_);
}

bool TriMesh::has_duplicate_vertices(double rel_tol) const {
  if (vertices_.size() < 2) return false;
  Vec3 lo = vertices_[0], hi = vertices_[0];
  for (const Vec3& p : vertices_) {
    for (int k = 0; k < 3; ++k) {
      lo[k] = std::min(lo[k], p[k]);
      hi[k] = std::max(hi[k], p[k]);
    }
  }
  const double tol = rel_tol * norm(hi - lo);
  std::vector<std::size_t> order(vertices_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vertices_[a].x < vertices_[b].x; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const Vec3& a = vertices_[order[i]];
      const Vec3& b = vertices_[order[j]];
      if (b.x - a.x > tol) break;
      if (norm(b - a) <= tol) return true;
    }
  }
  return false;
}

namespace {

struct Icosahedron {
  std::vector<Vec3> vertices;
  std::vector<Face> faces;
};

// Unit icosahedron with vertices at cyclic permutations of (0, +-1, +-phi).
// Faces are found as the vertex triples with pairwise distance 2 (before
// normalization) and oriented so their normal points away from the origin.
Icosahedron unit_icosahedron() {
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  Icosahedron ico;
  for (double s1 : {-1.0, 1.0}) {
    for (double s2 : {-1.0, 1.0}) {
      ico.vertices.push_back({0.0, s1, s2 * phi});
      ico.vertices.push_back({s1, s2 * phi, 0.0});
      ico.vertices.push_back({s2 * phi, 0.0, s1});
    }
  }
  const int n = static_cast<int>(ico.vertices.size());
  auto adjacent = [&](int i, int j) { return std::abs(norm(ico.vertices[i] - ico.vertices[j]) - 2.0) < 1e-9; };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!adjacent(i, j)) continue;
      for (int k = j + 1; k < n; ++k) {
        if (!adjacent(i, k) || !adjacent(j, k)) continue;
        const Vec3& a = ico.vertices[i];
        const Vec3& b = ico.vertices[j];
        const Vec3& c = ico.vertices[k];
        if (dot(cross(b - a, c - a), a + b + c) > 0.0) {
          ico.faces.push_back({i, j, k});
        } else {
          ico.faces.push_back({i, k, j});
        }
      }
    }
  }
  const double r = std::sqrt(1.0 + phi * phi);
  for (Vec3& v : ico.vertices) v /= r;
  return ico;
}

}  // namespace

TriMesh make_icosphere(int f, double radius) {
  if (f < 1) throw InvalidArgument("icosphere subdivision factor must be >= 1");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("icosphere radius must be positive");

  const Icosahedron ico = unit_icosahedron();
  std::vector<Vec3> verts = ico.vertices;
  auto project = [radius](const Vec3& p) { return normalized(p) * radius; };
  for (Vec3& v : verts) v = project(v);

  // Interior points of each icosahedron edge (u < v), stored from u toward v.
  std::map<std::pair<int, int>, int> edge_base;
  auto edge_point = [&](int u, int v, int k) -> int {
    // k in [0, f] measured from u.
    if (k == 0) return u;
    if (k == f) return v;
    if (u > v) {
      std::swap(u, v);
      k = f - k;
    }
    auto it = edge_base.find({u, v});
    if (it == edge_base.end()) {
      const int base = static_cast<int>(verts.size());
      const Vec3 a = ico.vertices[u];
      const Vec3 b = ico.vertices[v];
      for (int s = 1; s < f; ++s) {
        verts.push_back(project((static_cast<double>(f - s) * a + static_cast<double>(s) * b) / f));
      }
      it = edge_base.emplace(std::make_pair(u, v), base).first;
    }
    return it->second + k - 1;
  };

  std::vector<Face> faces;
  faces.reserve(20 * static_cast<std::size_t>(f) * f);
  std::vector<int> grid;
  for (const Face& ic : ico.faces) {
    const int A = ic[0], B = ic[1], C = ic[2];
    // Lattice (i, j) with i + j <= f denotes ((f - i - j) A + i B + j C) / f.
    grid.assign(static_cast<std::size_t>(f + 1) * (f + 1), -1);
    auto at = [&](int i, int j) -> int& { return grid[static_cast<std::size_t>(i) * (f + 1) + j]; };
    for (int i = 0; i <= f; ++i) {
      for (int j = 0; i + j <= f; ++j) {
        int id;
        if (j == 0) {
          id = edge_point(A, B, i);
        } else if (i == 0) {
          id = edge_point(A, C, j);
        } else if (i + j == f) {
          id = edge_point(B, C, j);
        } else {
          id = static_cast<int>(verts.size());
          const Vec3 p = (static_cast<double>(f - i - j) * ico.vertices[A] + static_cast<double>(i) * ico.vertices[B] +
                          static_cast<double>(j) * ico.vertices[C]) /
                         f;
          verts.push_back(project(p));
        }
        at(i, j) = id;
      }
    }
    for (int i = 0; i < f; ++i) {
      for (int j = 0; i + j < f; ++j) {
        faces.push_back({at(i, j), at(i + 1, j), at(i, j + 1)});
        if (i + j + 2 <= f) faces.push_back({at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)});
      }
    }
  }
  return TriMesh(std::move(verts), std::move(faces));
}

TriMesh make_spheroid_mesh(int f, double a, double b, double grading) {
  if (!(b > 0.0) || !(a >= b) || !std::isfinite(a)) throw InvalidArgument("spheroid requires a >= b > 0");
  if (!(grading >= 0.0) || !(grading < 2.0)) throw InvalidArgument("spheroid grading must lie in [0, 2)");
  const TriMesh unit = make_icosphere(f, 1.0);
  std::vector<Vec3> verts(unit.vertices().begin(), unit.vertices().end());
  for (Vec3& p : verts) {
    if (grading == 0.0) {
      p = {b * p.x, b * p.y, a * p.z};
      continue;
    }
    const double theta = std::acos(std::clamp(p.z, -1.0, 1.0));
    const double phi = std::atan2(p.y, p.x);
    const double t = theta - 0.25 * grading * std::sin(2.0 * theta);
    p = {b * std::sin(t) * std::cos(phi), b * std::sin(t) * std::sin(phi), a * std::cos(t)};
  }
  return TriMesh(std::move(verts), std::vector<Face>(unit.faces().begin(), unit.faces().end()));
}

namespace {

// Builds grid-triangulated axis-aligned rectangles on an integer lattice so that
// shared edges reuse vertex indices exactly.
class LatticeMesher {
 public:
  LatticeMesher(std::array<int, 3> cells, Vec3 origin, Vec3 spacing)
      : cells_(cells), origin_(origin), spacing_(spacing) {}

  // Rectangle at lattice coordinate `level` along `axis`, spanning the full
  // lattice in the other two axes. Triangle normals follow `normal_sign` along axis.
  void add_rect(int axis, int level, double normal_sign) {
    const int bx = (axis + 1) % 3;
    const int cx = (axis + 2) % 3;
    Vec3 desired;
    desired[axis] = normal_sign;
    for (int p = 0; p < cells_[bx]; ++p) {
      for (int q = 0; q < cells_[cx]; ++q) {
        auto node = [&](int dp, int dq) {
          std::array<int, 3> key{};
          key[axis] = level;
          key[bx] = p + dp;
          key[cx] = q + dq;
          return vertex(key);
        };
        const int v00 = node(0, 0), v10 = node(1, 0), v11 = node(1, 1), v01 = node(0, 1);
        add_oriented({v00, v10, v11}, desired);
        add_oriented({v00, v11, v01}, desired);
      }
    }
  }

  TriMesh build() && { return TriMesh(std::move(verts_), std::move(faces_)); }

 private:
  int vertex(const std::array<int, 3>& key) {
    auto [it, inserted] = ids_.try_emplace(key, static_cast<int>(verts_.size()));
    if (inserted) {
      Vec3 p;
      for (int k = 0; k < 3; ++k) {
        // Pin the far end exactly so opposite walls are symmetric.
        const double frac = static_cast<double>(key[k]) / cells_[k];
        p[k] = origin_[k] + frac * (spacing_[k] * cells_[k]);
      }
      verts_.push_back(p);
    }
    return it->second;
  }

  void add_oriented(Face f, const Vec3& desired) {
    const Vec3 n = cross(verts_[f[1]] - verts_[f[0]], verts_[f[2]] - verts_[f[0]]);
    if (dot(n, desired) < 0.0) std::swap(f[1], f[2]);
    faces_.push_back(f);
  }

  std::array<int, 3> cells_;
  Vec3 origin_;
  Vec3 spacing_;
  std::map<std::array<int, 3>, int> ids_;
  std::vector<Vec3> verts_;
  std::vector<Face> faces_;
};

int cell_count(double extent, double gridH, const char* what) {
  const int n = static_cast<int>(std::lround(extent / gridH));
  if (n < 1) {
    std::ostringstream msg;
    msg << what << ": grid spacing " << gridH << " leaves no cell across extent " << extent;
    throw InvalidArgument(msg.str());
  }
  return n;
}

}  // namespace

TriMesh make_box_mesh(const Vec3& center, double halfSide, double gridH) {
  if (!(halfSide > 0.0) || !(gridH > 0.0)) throw InvalidArgument("box mesh requires positive halfSide and gridH");
  if (gridH > 2.0 * halfSide * (1.0 + 1e-12)) throw InvalidArgument("box grid spacing exceeds the side length");
  const int n = cell_count(2.0 * halfSide, gridH, "box mesh");
  const double step = 2.0 * halfSide / n;
  LatticeMesher m({n, n, n}, center - Vec3{halfSide, halfSide, halfSide}, {step, step, step});
  for (int axis = 0; axis < 3; ++axis) {
    m.add_rect(axis, 0, -1.0);
    m.add_rect(axis, n, +1.0);
  }
  return std::move(m).build();
}

TriMesh make_pipe_mesh(double L, double a, double b, double gridH) {
  if (!(L > 0.0) || !(a > 0.0) || !(b > 0.0) || !(gridH > 0.0)) {
    throw InvalidArgument("pipe mesh requires positive L, a, b and gridH");
  }
  const int nx = cell_count(2.0 * L, gridH, "pipe mesh");
  const int ny = cell_count(2.0 * a, gridH, "pipe mesh");
  const int nz = cell_count(2.0 * b, gridH, "pipe mesh");
  LatticeMesher m({nx, ny, nz}, {-L, -a, -b}, {2.0 * L / nx, 2.0 * a / ny, 2.0 * b / nz});
  // Walls face the pipe axis.
  m.add_rect(1, 0, +1.0);
  m.add_rect(1, ny, -1.0);
  m.add_rect(2, 0, +1.0);
  m.add_rect(2, nz, -1.0);
  return std::move(m).build();
}

TriMesh merge_meshes(std::span<const TriMesh> parts) {
  std::vector<Vec3> verts;
  std::vector<Face> faces;
  for (const TriMesh& p : parts) {
    const int offset = static_cast<int>(verts.size());
    verts.insert(verts.end(), p.vertices().begin(), p.vertices().end());
    for (Face f : p.faces()) faces.push_back({f[0] + offset, f[1] + offset, f[2] + offset});
  }
  return TriMesh(std::move(verts), std::move(faces));
}

MeshStats mesh_stats(const TriMesh& mesh) {
  if (mesh.empty()) throw InvalidArgument("mesh_stats of an empty mesh");
  MeshStats s;
  s.num_faces = mesh.num_faces();
  s.num_vertices = mesh.num_vertices();
  s.dof = 3 * s.num_vertices;
  double sum = 0.0;
  for (const auto& t : mesh.frames()) sum += t.BH;
  s.h = std::sqrt(sum / static_cast<double>(s.num_faces));
  return s;
}

}  // namespace rss
