#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "rss/error.hpp"
#include "rss/geometry/mesh.hpp"
#include "rss/geometry/mesh_io.hpp"
#include "rss/geometry/triangle_frame.hpp"
#include "support/invariants.hpp"

using namespace rss;

TEST(TriangleFrame, RightTriangle) {
  const TriangleFrame t = TriangleFrame::from_vertices({0, 0, 0}, {1, 0, 0}, {1, 1, 0});
  EXPECT_DOUBLE_EQ(t.BH, 1.0);
  EXPECT_DOUBLE_EQ(t.L1, 1.0);
  EXPECT_DOUBLE_EQ(t.L2, 1.0);
  EXPECT_EQ(t.nHat, (Vec3{0, 0, 1}));
  EXPECT_EQ(t.point(1, 0), t.y1);
  EXPECT_EQ(t.point(1, 1), t.y2);
  const TriMesh m({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}}, {{0, 1, 2}});
  EXPECT_DOUBLE_EQ(mesh_stats(m).h, 1.0);
}

TEST(TriangleFrame, RejectsDegenerate) {
  EXPECT_THROW(TriangleFrame::from_vertices({0, 0, 0}, {1, 0, 0}, {2, 0, 0}), DegenerateTriangleError);
  EXPECT_THROW(TriangleFrame::from_vertices({0, 0, 0}, {0, 0, 0}, {1, 1, 0}), DegenerateTriangleError);
}

TEST(TriangleFrame, RigidMotionCovariance) {
  std::mt19937_64 g(3);
  const TriMesh m = make_icosphere(3);
  const Mat3 Q = invariants::random_rotation(g);
  const Vec3 shift{0.3, -1.2, 2.0};
  const TriMesh moved = m.transformed(Q, shift);
  for (std::size_t i = 0; i < m.num_faces(); ++i) {
    const TriangleFrame& a = m.frame(i);
    const TriangleFrame& b = moved.frame(i);
    EXPECT_LE(norm(Q * a.vHat - b.vHat), 1e-12);
    EXPECT_LE(norm(Q * a.wHat - b.wHat), 1e-12);
    EXPECT_LE(norm(Q * a.nHat - b.nHat), 1e-12);
    EXPECT_NEAR(a.L1, b.L1, 1e-12);
    EXPECT_NEAR(a.L2, b.L2, 1e-12);
    EXPECT_NEAR(a.BH, b.BH, 1e-12);
  }
}

TEST(Icosphere, Counts) {
  for (int f = 1; f <= 12; ++f) {
    const TriMesh m = make_icosphere(f);
    EXPECT_EQ(m.num_vertices(), static_cast<std::size_t>(10 * f * f + 2)) << f;
    EXPECT_EQ(m.num_faces(), static_cast<std::size_t>(20 * f * f)) << f;
  }
  EXPECT_EQ(make_icosphere(8).num_faces(), 1280u);
  EXPECT_THROW(make_icosphere(0), InvalidArgument);
}

TEST(Icosphere, OnSphereOutwardAndUnique) {
  const TriMesh m = make_icosphere(5, 2.0);
  for (const Vec3& v : m.vertices()) EXPECT_NEAR(norm(v), 2.0, 1e-14);
  for (const TriangleFrame& t : m.frames()) EXPECT_GT(dot(t.nHat, t.centroid()), 0.0);
  EXPECT_FALSE(m.has_duplicate_vertices());
}

TEST(Icosphere, DiscretizationSize) {
  EXPECT_NEAR(mesh_stats(make_icosphere(9)).h, 0.1243, 0.002);
  const MeshStats s = mesh_stats(make_icosphere(2));
  EXPECT_EQ(s.dof, 3 * s.num_vertices);
}

TEST(Spheroid, OnSurfaceAndGraded) {
  const double a = 3, b = 1;
  for (double grading : {0.0, 0.5, 1.0}) {
    const TriMesh m = make_spheroid_mesh(5, a, b, grading);
    for (const Vec3& v : m.vertices()) {
      EXPECT_NEAR((v.x * v.x + v.y * v.y) / (b * b) + v.z * v.z / (a * a), 1.0, 1e-12);
    }
    for (const TriangleFrame& t : m.frames()) EXPECT_GT(dot(t.nHat, t.centroid()), 0.0);
  }
  // Grading shrinks the triangles touching the poles.
  auto polar_area = [&](const TriMesh& m) {
    double s = 0;
    for (const TriangleFrame& t : m.frames())
      if (std::fabs(t.centroid().z) > 0.9 * a) s += t.area();
    return s;
  };
  auto polar_count = [&](const TriMesh& m) {
    int n = 0;
    for (const TriangleFrame& t : m.frames())
      if (std::fabs(t.centroid().z) > 0.9 * a) ++n;
    return n;
  };
  const TriMesh u = make_spheroid_mesh(6, a, b), gr = make_spheroid_mesh(6, a, b, 1.0);
  EXPECT_LT(polar_area(gr) / polar_count(gr), polar_area(u) / polar_count(u));
}

TEST(Box, CountsAndOrientation) {
  const Vec3 c{0.5, 0, -0.25};
  const TriMesh m = make_box_mesh(c, 0.25, 0.05);
  EXPECT_EQ(m.num_faces(), 12u * 10 * 10);
  EXPECT_FALSE(m.has_duplicate_vertices());
  for (const TriangleFrame& t : m.frames()) EXPECT_GT(dot(t.nHat, t.centroid() - c), 0.0);
  EXPECT_NEAR(m.total_area(), 6 * 0.25, 1e-12);
}

TEST(Pipe, NormalsIntoFluid) {
  const TriMesh m = make_pipe_mesh(2.5, 1, 1, 0.2);
  EXPECT_EQ(m.num_faces(), 4u * 25 * 10 * 2);
  for (const TriangleFrame& t : m.frames()) {
    const Vec3 c = t.centroid();
    EXPECT_LT(dot(t.nHat, Vec3{0, c.y, c.z}), 0.0);
    EXPECT_NEAR(std::max(std::fabs(c.y), std::fabs(c.z)), 1.0, 1e-12);
  }
}

TEST(Mesh, MergeOffsetsFaces) {
  const TriMesh a = make_icosphere(1), b = make_box_mesh({3, 0, 0}, 0.5, 0.5);
  const TriMesh parts[] = {a, b};
  const TriMesh m = merge_meshes(parts);
  EXPECT_EQ(m.num_vertices(), a.num_vertices() + b.num_vertices());
  EXPECT_EQ(m.face(a.num_faces())[0], b.face(0)[0] + static_cast<int>(a.num_vertices()));
}

TEST(Mesh, RejectsBadIndices) {
  EXPECT_THROW(TriMesh({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}, {{0, 1, 3}}), InvalidArgument);
}

TEST(MeshIo, RoundTripIsExact) {
  const TriMesh m = make_spheroid_mesh(4, 3, 1, 0.7);
  std::stringstream ss;
  write_mesh(ss, m);
  const TriMesh r = read_mesh(ss);
  ASSERT_EQ(r.num_vertices(), m.num_vertices());
  ASSERT_EQ(r.num_faces(), m.num_faces());
  for (std::size_t i = 0; i < m.num_vertices(); ++i) EXPECT_EQ(r.vertex(i), m.vertex(i));
  for (std::size_t i = 0; i < m.num_faces(); ++i) EXPECT_EQ(r.face(i), m.face(i));
}

TEST(MeshIo, FileRoundTripAndErrors) {
  const std::string path = ::testing::TempDir() + "rss_mesh_io.mesh";
  const TriMesh m = make_icosphere(3);
  write_mesh_file(path, m);
  const TriMesh r = read_mesh_file(path);
  for (std::size_t i = 0; i < m.num_vertices(); ++i) EXPECT_EQ(r.vertex(i), m.vertex(i));
  EXPECT_THROW(read_mesh_file(path + ".missing"), IoError);
  std::stringstream bad("3 1\n0 0 0\n1 0 0\n");
  EXPECT_THROW(read_mesh(bad), IoError);
}
