#include "rss/geometry/mesh_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "rss/error.hpp"

namespace rss {

void write_mesh(std::ostream& os, const TriMesh& mesh) {
  os << mesh.num_vertices() << ' ' << mesh.num_faces() << '\n';
  char buf[96];
  for (const Vec3& v : mesh.vertices()) {
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g\n", v.x, v.y, v.z);
    os << buf;
  }
  for (const Face& f : mesh.faces()) os << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

TriMesh read_mesh(std::istream& is) {
  long long nv = -1, nf = -1;
  if (!(is >> nv >> nf) || nv < 0 || nf < 0) throw IoError("mesh header must be 'nV nF' with non-negative counts");
  std::vector<Vec3> verts(static_cast<std::size_t>(nv));
  for (auto& v : verts) {
    if (!(is >> v.x >> v.y >> v.z)) throw IoError("truncated vertex list in mesh file");
  }
  std::vector<Face> faces(static_cast<std::size_t>(nf));
  for (auto& f : faces) {
    if (!(is >> f[0] >> f[1] >> f[2])) throw IoError("truncated face list in mesh file");
  }
  return TriMesh(std::move(verts), std::move(faces));
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot rename temporary file onto " + path);
  }
}

void write_mesh_file(const std::string& path, const TriMesh& mesh) {
  std::ostringstream os;
  write_mesh(os, mesh);
  write_file_atomic(path, os.str());
}

TriMesh read_mesh_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open mesh file " + path);
  return read_mesh(in);
}

}  // namespace rss
