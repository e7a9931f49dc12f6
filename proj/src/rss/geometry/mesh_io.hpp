#pragma once

#include <iosfwd>
#include <string>

#include "rss/geometry/mesh.hpp"

namespace rss {

// Plain-text indexed triangle format:
//   nV nF
//   x y z          (nV lines)
//   i j k          (nF lines, 0-based)
// Coordinates are written with 17 significant digits, so a write/read cycle
// reproduces every vertex bit for bit.

void write_mesh(std::ostream& os, const TriMesh& mesh);
TriMesh read_mesh(std::istream& is);

/// Writes through a temporary file in the same directory followed by a rename.
void write_mesh_file(const std::string& path, const TriMesh& mesh);
TriMesh read_mesh_file(const std::string& path);

/// Atomically replaces `path` with `contents`.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace rss
