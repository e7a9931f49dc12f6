#include "rss/solver/solver.hpp"

#include <cmath>
#include <sstream>

#include "rss/error.hpp"
#include "rss/kernel/triangle_velocity.hpp"
#include "rss/solver/parallel.hpp"

namespace rss {

namespace {

void check_field(const TriMesh& mesh, const VertexField& field, const char* what) {
  if (field.size() != mesh.num_vertices()) {
    std::ostringstream msg;
    msg << what << " has " << field.size() << " entries, mesh has " << mesh.num_vertices() << " vertices";
    throw InvalidArgument(msg.str());
  }
}

void check_params(const TriMesh& mesh, const KernelParams& params) {
  if (mesh.empty()) throw InvalidArgument("mesh has no faces");
  params.validate();
  require_above_floor(params.eps, mesh.max_side_length());
}

}  // namespace

Eigen::VectorXd pack(const std::vector<Vec3>& field) {
  Eigen::VectorXd x(3 * field.size());
  for (std::size_t i = 0; i < field.size(); ++i)
    for (int k = 0; k < 3; ++k) x[3 * i + k] = field[i][k];
  return x;
}

std::vector<Vec3> unpack(const Eigen::VectorXd& x, std::size_t count) {
  std::vector<Vec3> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = {x[3 * i], x[3 * i + 1], x[3 * i + 2]};
  return out;
}

std::vector<Vec3> evaluate_velocity(const TriMesh& mesh, const VertexField& forces, const std::vector<Vec3>& points,
                                    const KernelParams& params) {
  check_params(mesh, params);
  check_field(mesh, forces, "force field");
  std::vector<Vec3> out(points.size());
  parallel_for(points.size(), [&](std::size_t p) {
    Vec3 u{};
    for (std::size_t j = 0; j < mesh.num_faces(); ++j) {
      const Face& fc = mesh.face(j);
      u += triangle_velocity(points[p], mesh.frame(j), forces[fc[0]], forces[fc[1]], forces[fc[2]], params);
    }
    out[p] = u;
  });
  return out;
}

Eigen::MatrixXd assemble_velocity_operator(const TriMesh& mesh, const std::vector<Vec3>& points,
                                           const KernelParams& params) {
  check_params(mesh, params);
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(3 * points.size(), 3 * mesh.num_vertices());
  parallel_for(points.size(), [&](std::size_t p) {
    for (std::size_t j = 0; j < mesh.num_faces(); ++j) {
      const auto G = triangle_influence(points[p], mesh.frame(j), params);
      const Face& fc = mesh.face(j);
      for (int k = 0; k < 3; ++k)
        for (int r = 0; r < 3; ++r)
          for (int c = 0; c < 3; ++c) M(3 * p + r, 3 * fc[k] + c) += G[k][r][c];
    }
  });
  return M;
}

Eigen::MatrixXd assemble_resistance(const TriMesh& mesh, const KernelParams& params) {
  const auto v = mesh.vertices();
  return assemble_velocity_operator(mesh, std::vector<Vec3>(v.begin(), v.end()), params);
}

Eigen::VectorXd solve_dense(const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
  if (A.rows() != A.cols() || A.rows() != b.size()) throw InvalidArgument("system must be square and match rhs");
  if (!A.allFinite() || !b.allFinite()) throw InvalidArgument("system has non-finite entries");
  const Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  const double rcond = lu.rcond();
  if (!(rcond > 0.0) || !std::isfinite(rcond)) throw SingularSystemError("matrix is singular", INFINITY);
  Eigen::VectorXd x = lu.solve(b);
  const double bnorm = b.lpNorm<Eigen::Infinity>();
  double res = 0.0;
  for (int step = 0; step < 3; ++step) {
    const Eigen::VectorXd r = b - A * x;
    res = r.lpNorm<Eigen::Infinity>();
    if (!std::isfinite(res)) break;
    if (res <= 1e-10 * bnorm) return x;
    x += lu.solve(r);
  }
  std::ostringstream msg;
  msg << "dense solve residual " << res << " exceeds 1e-10 * |b| = " << 1e-10 * bnorm;
  throw SingularSystemError(msg.str(), 1.0 / rcond);
}

Eigen::VectorXd solve_dense(const DenseSystem& s) { return solve_dense(s.matrix, s.rhs); }

double condition_number(const Eigen::MatrixXd& A) {
  if (A.rows() != A.cols() || A.rows() == 0) throw InvalidArgument("condition number needs a non-empty square matrix");
  const Eigen::BDCSVD<Eigen::MatrixXd> svd(A);
  const auto& s = svd.singularValues();
  return s[0] / s[s.size() - 1];
}

double condition_number(const DenseSystem& s) { return condition_number(s.matrix); }

VertexField solve_resistance(const TriMesh& mesh, const VertexField& boundaryVelocity, const KernelParams& params) {
  check_field(mesh, boundaryVelocity, "boundary velocity");
  const Eigen::MatrixXd M = assemble_resistance(mesh, params);
  return unpack(solve_dense(M, pack(boundaryVelocity)), mesh.num_vertices());
}

Vec3 mesh_net_force(const TriMesh& mesh, const VertexField& f) {
  check_field(mesh, f, "force field");
  Vec3 F{};
  for (std::size_t j = 0; j < mesh.num_faces(); ++j) {
    const Face& fc = mesh.face(j);
    F += triangle_net_force(mesh.frame(j), f[fc[0]], f[fc[1]], f[fc[2]]);
  }
  return F;
}

Vec3 mesh_net_torque(const TriMesh& mesh, const VertexField& f, const Vec3& center) {
  check_field(mesh, f, "force field");
  Vec3 M{};
  for (std::size_t j = 0; j < mesh.num_faces(); ++j) {
    const Face& fc = mesh.face(j);
    M += triangle_net_torque(mesh.frame(j), f[fc[0]], f[fc[1]], f[fc[2]], center);
  }
  return M;
}

SwimmerSolution solve_swimmer(const TriMesh& mesh, const VertexField& slip, const Vec3& center,
                              const KernelParams& params) {
  check_field(mesh, slip, "slip");
  const Eigen::Index n = 3 * static_cast<Eigen::Index>(mesh.num_vertices());
  DenseSystem sys;
  sys.matrix = Eigen::MatrixXd::Zero(n + 6, n + 6);
  sys.matrix.topLeftCorner(n, n) = assemble_resistance(mesh, params);
  sys.rhs = Eigen::VectorXd::Zero(n + 6);
  sys.rhs.head(n) = pack(slip);

  // M f - U - Omega x (x_i - c) = slip_i
  for (std::size_t i = 0; i < mesh.num_vertices(); ++i) {
    const Vec3 r = mesh.vertex(i) - center;
    for (int k = 0; k < 3; ++k) {
      Vec3 e{};
      e[k] = 1.0;
      const Vec3 col = cross(e, r);
      sys.matrix(3 * i + k, n + k) = -1.0;
      for (int row = 0; row < 3; ++row) sys.matrix(3 * i + row, n + 3 + k) = -col[row];
    }
  }
  // Net force and torque rows: each vertex force enters linearly.
  for (std::size_t j = 0; j < mesh.num_faces(); ++j) {
    const TriangleFrame& t = mesh.frame(j);
    const Face& fc = mesh.face(j);
    const std::array<Vec3, 3> y{t.y0, t.y1, t.y2};
    for (int k = 0; k < 3; ++k) {
      const Vec3 lever = (t.BH / 24.0) * (y[0] + y[1] + y[2] + y[k] - 4.0 * center);
      for (int c = 0; c < 3; ++c) {
        Vec3 e{};
        e[c] = 1.0;
        sys.matrix(n + c, 3 * fc[k] + c) += t.BH / 6.0;
        const Vec3 m = cross(lever, e);
        for (int row = 0; row < 3; ++row) sys.matrix(n + 3 + row, 3 * fc[k] + c) += m[row];
      }
    }
  }
  const Eigen::VectorXd x = solve_dense(sys);
  SwimmerSolution s;
  s.forces = unpack(x.head(n), mesh.num_vertices());
  s.U = {x[n], x[n + 1], x[n + 2]};
  s.Omega = {x[n + 3], x[n + 4], x[n + 5]};
  return s;
}

}  // namespace rss
