#include <gtest/gtest.h>

#include <Eigen/Sparse>
#include <cmath>
#include <json.hpp>
#include <numbers>
#include <sstream>

#include "rss/error.hpp"
#include "rss/experiments/references.hpp"
#include "rss/experiments/report.hpp"
#include "rss/experiments/studies.hpp"
#include "rss/geometry/mesh.hpp"
#include "rss/kernel/stokeslet.hpp"
#include "support/oracle.hpp"

using namespace rss;
using std::numbers::pi;

namespace {

// Five-point Laplacian for -mu lap u = dP on [-1, 1]^2 with u = 0 on the
// boundary; returns u(0, 0). n must be even.
double poisson_center(int n, double dP, double mu) {
  const double h = 2.0 / n;
  const int m = n - 1;
  auto id = [m](int i, int j) { return i * m + j; };
  std::vector<Eigen::Triplet<double>> t;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      t.emplace_back(id(i, j), id(i, j), 4.0);
      if (i > 0) t.emplace_back(id(i, j), id(i - 1, j), -1.0);
      if (i < m - 1) t.emplace_back(id(i, j), id(i + 1, j), -1.0);
      if (j > 0) t.emplace_back(id(i, j), id(i, j - 1), -1.0);
      if (j < m - 1) t.emplace_back(id(i, j), id(i, j + 1), -1.0);
    }
  }
  Eigen::SparseMatrix<double> A(m * m, m * m);
  A.setFromTriplets(t.begin(), t.end());
  const Eigen::VectorXd b = Eigen::VectorXd::Constant(m * m, h * h * dP / mu);
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(A);
  const Eigen::VectorXd u = solver.solve(b);
  return u(id(n / 2 - 1, n / 2 - 1));
}

}  // namespace

TEST(References, SphereTranslation) {
  const Vec3 U{1, 0, 0};
  const auto s = sphere_translation_reference({0, 1, 0}, 1, U, 1);
  EXPECT_LE(norm(s.velocity - U), 1e-15);
  EXPECT_EQ(s.traction, (Vec3{-1.5, 0, 0}));
  // Integrated traction is the Stokes drag.
  EXPECT_NEAR(4 * pi * s.traction.x, -6 * pi, 1e-12);
  const Vec3 x{10, 0, 0};
  const Vec3 u = sphere_translation_reference(x, 1, U, 1).velocity;
  // On the axis: u = U (3 a / (2 r) - a^3 / (2 r^3)).
  EXPECT_NEAR(u.x, 0.15 - 0.0005, 1e-15);
  EXPECT_THROW(sphere_translation_reference({0.5, 0, 0}, 1, U, 1), InvalidArgument);
}

TEST(References, SphereRotation) {
  const Vec3 W{0, 0, 1};
  const Vec3 x{0.6, 0.8, 0};
  const auto s = sphere_rotation_reference(x, 1, W, 1);
  EXPECT_LE(norm(s.velocity - cross(W, x)), 1e-15);
  // -3 mu Omega x x / a on the surface; the torque integrates to -8 pi mu a^3 Omega.
  EXPECT_LE(norm(s.traction + 3.0 * cross(W, x)), 1e-15);
  const Vec3 far = sphere_rotation_reference({2, 0, 0}, 1, W, 1).velocity;
  EXPECT_NEAR(far.y, 0.25, 1e-15);
}

TEST(References, SpheroidRotation) {
  const double a = 3, b = 1;
  const double e = std::sqrt(8.0) / 3.0;
  EXPECT_NEAR(std::sqrt(a * a - b * b) / a, e, 1e-15);
  const double beta0 = a * a * e * e / (2 * e / (1 - e * e) - 2 * std::atanh(e));
  EXPECT_NEAR(spheroid_beta0(a, b), beta0, 1e-12 * beta0);
  const auto pole = spheroid_rotation_reference({0, 0, a}, a, b, 1);
  EXPECT_EQ(norm(pole.traction), 0.0);
  EXPECT_NEAR(pole.torque.z, -(32.0 / 3.0) * pi * a * e * beta0, 1e-10);
  // Nearly spherical: the torque tends to -8 pi mu a^3.
  EXPECT_NEAR(spheroid_rotation_reference({1, 0, 0}, 1.0001, 1.0, 1).torque.z, -8 * pi, 1e-2);
  EXPECT_THROW(spheroid_beta0(1, 2), InvalidArgument);
}

TEST(References, SpheroidTractionIntegratesToTorque) {
  const double a = 3, b = 1;
  const auto ref = spheroid_rotation_reference({b, 0, 0}, a, b, 1);
  // Surface of revolution: dS = b sin t sqrt(a^2 sin^2 t + b^2 cos^2 t) dt dphi.
  const double Mz = oracle::integrate_1d(
      [&](double t) {
        const Vec3 x{b * std::sin(t), 0, a * std::cos(t)};
        const Vec3 f = spheroid_rotation_reference(x, a, b, 1).traction;
        const double dS = b * std::sin(t) * std::hypot(a * std::sin(t), b * std::cos(t));
        return 2 * pi * cross(x, f).z * dS;
      },
      0, pi, 1e-12);
  EXPECT_NEAR(Mz, ref.torque.z, 1e-8 * std::fabs(ref.torque.z));
}

TEST(References, Squirmer) {
  EXPECT_EQ(norm(squirmer_slip({0, 0, 1}, 1.5)), 0.0);
  EXPECT_LE(norm(squirmer_slip({1, 0, 0}, 1.5) - Vec3{0, 0, -1.5}), 1e-15);
  const auto [ur, ut] = squirmer_reference(1, pi / 2, 1, 1.5);
  EXPECT_NEAR(ur, 0.0, 1e-16);
  EXPECT_NEAR(ut, 0.5, 1e-16);
  EXPECT_NEAR(2.0 / 3.0 * 1.5, 1.0, 1e-15);
}

TEST(References, PipeWallsAndCentre) {
  // On z = +-b every series term vanishes. On y = +-a and z = 0 the terms
  // alternate with decreasing size, so the truncation error is below the
  // first dropped term, 2 / (50.5 pi)^3.
  const double next_term = 2.0 / std::pow(50.5 * pi, 3);
  EXPECT_NEAR(next_term, 5e-7, 1e-8);
  EXPECT_LE(std::fabs(pipe_reference(1, 0, 1, 1, 1, 1)), next_term);
  EXPECT_LE(std::fabs(pipe_reference(-1, 0, 1, 1, 1, 1)), next_term);
  for (double s : {-1.0, -0.5, 0.0, 0.3, 0.9}) {
    EXPECT_LE(std::fabs(pipe_reference(s, -1, 1, 1, 1, 1)), 1e-15);
    // Elsewhere on y = a the cosines break the alternation; a few times larger.
    EXPECT_LE(std::fabs(pipe_reference(1, s, 1, 1, 1, 1)), 5 * next_term);
  }
  const double u1 = poisson_center(64, 1, 1), u2 = poisson_center(128, 1, 1), u3 = poisson_center(256, 1, 1);
  const double r1 = (4 * u2 - u1) / 3, r2 = (4 * u3 - u2) / 3;
  const double fd = (16 * r2 - r1) / 15;
  EXPECT_NEAR(pipe_reference(0, 0, 1, 1, 1, 1), fd, 1e-5);
  EXPECT_THROW(pipe_reference(0, 0, 1, 1, 1, 1, 0), InvalidArgument);
}

TEST(References, FluxWithoutCubeMatchesQuadrature) {
  const double s = 0.25;
  const double q = oracle::integrate_1d(
      [&](double y) {
        return oracle::integrate_1d([&](double z) { return pipe_reference(y, z, 1, 1, 1, 1); }, -s, s, 1e-13, 12);
      },
      -s, s, 1e-12, 12);
  EXPECT_NEAR(flux_without_cube(s, 1, 1, 1, 1), q, 1e-8);
  EXPECT_THROW(flux_without_cube(2, 1, 1, 1, 1), InvalidArgument);
}

TEST(Report, L2AndFit) {
  EXPECT_DOUBLE_EQ(l2_error({3, 4}), std::sqrt(12.5));
  EXPECT_THROW(l2_error({}), InvalidArgument);
  const std::vector<double> h{0.5, 0.25, 0.125, 0.0625};
  std::vector<double> e;
  for (double x : h) e.push_back(3 * x * x);
  const PowerLawFit fit = fit_power_law(h, e);
  EXPECT_NEAR(fit.exponent, 2.0, 1e-12);
  EXPECT_NEAR(fit.prefactor, 3.0, 1e-12);
  // The last point barely moves: a plateau.
  e.back() = e[2] * 0.98;
  const PowerLawFit pf = fit_power_law(h, e, true);
  ASSERT_EQ(pf.plateau.size(), 1u);
  EXPECT_EQ(pf.plateau[0], 3u);
  EXPECT_NEAR(pf.exponent, 2.0, 1e-12);
}

TEST(Report, CsvAndJson) {
  ExperimentReport r;
  r.experiment = "forward-translate";
  ReportRow row;
  row.num_faces = 80;
  row.dof = 126;
  row.h = 0.54;
  row.eps = 1e-4;
  row.metric = "l2_error";
  row.value = 0.05;
  row.extras = {{"max_error", 0.07}};
  r.rows.push_back(row);
  r.summary = {{"slope", 2.0}};
  const std::string csv = report_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "experiment,num_faces,dof,h,eps,metric,value");
  EXPECT_NE(csv.find("forward-translate,80,126,"), std::string::npos);
  const auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j["experiment"], "forward-translate");
  EXPECT_DOUBLE_EQ(j["rows"][0]["extras"]["max_error"].get<double>(), 0.07);
  EXPECT_DOUBLE_EQ(j["summary"]["slope"].get<double>(), 2.0);
  EXPECT_EQ(field_csv({{{1, 2, 3}, {4, 5, 6}}}).substr(0, 17), "x,y,z,ux,uy,uz\n1,");
}

TEST(Studies, SmallRunIsReproducible) {
  StudyParams p = default_study_params("forward-translate");
  p.f_values = {2, 3};
  p.eps_values = {1e-4};
  const ExperimentReport a = run_study("forward-translate", p);
  const ExperimentReport b = run_study("forward-translate", p);
  ASSERT_EQ(a.rows.size(), 2u);
  for (std::size_t i = 0; i < a.rows.size(); ++i) EXPECT_EQ(a.rows[i].value, b.rows[i].value);
  EXPECT_LT(a.rows[1].value, a.rows[0].value);
  EXPECT_EQ(report_csv(a), report_csv(b));
}

TEST(Studies, FloorAndGrid) {
  StudyParams p = default_study_params("forward-translate");
  p.f_values = {4};
  p.eps_values = {1e-20};
  EXPECT_THROW(run_study("forward-translate", p), FloatingFloorError);
  EXPECT_THROW(run_study("no-such-study", p), InvalidArgument);
  p.eps_values.clear();
  p.f_values = {1};
  const ExperimentReport r = run_study("resistance-drag", p);
  const double floor = epsilon_floor(make_icosphere(1));
  std::size_t usable = 0;
  for (double e : default_eps_grid()) usable += e > floor;
  EXPECT_LT(usable, default_eps_grid().size());
  EXPECT_EQ(r.rows.size(), usable);
  for (const ReportRow& row : r.rows) EXPECT_TRUE(std::isfinite(row.value));
}

TEST(Studies, FieldSampling) {
  StudyParams p = default_study_params("forward-translate");
  p.f_values = {6};
  p.eps_values = {1e-4};
  p.field_points = {{2, 0, 0}, {0, 0, 3}};
  const ExperimentReport r = run_study("forward-translate", p);
  ASSERT_EQ(r.field.size(), 2u);
  const Vec3 want = sphere_translation_reference({2, 0, 0}, 1, {1, 0, 0}, 1).velocity;
  EXPECT_LE(norm(r.field[0].u - want), 1e-2 * norm(want));
}
