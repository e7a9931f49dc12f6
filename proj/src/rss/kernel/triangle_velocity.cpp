#include "rss/kernel/triangle_velocity.hpp"

#include <numbers>

namespace rss {

PCoefficients p_coefficients(const Vec3& xf, const TriangleFrame& frame, const Vec3& f0, const Vec3& f1,
                             const Vec3& f2, double eps) {
  const Vec3 x0 = xf - frame.y0;
  const Vec3 fa = f1 - f0;
  const Vec3 fb = f2 - f1;
  const Vec3& v = frame.vHat;
  const Vec3& w = frame.wHat;
  const double L1 = frame.L1;
  const double L2 = frame.L2;
  const double e2 = eps * eps;

  const double f0x = dot(f0, x0), fax = dot(fa, x0), fbx = dot(fb, x0);
  const double f0v = dot(f0, v), fav = dot(fa, v), fbv = dot(fb, v);
  const double f0w = dot(f0, w), faw = dot(fa, w), fbw = dot(fb, w);

  PCoefficients p;
  p.P00 = e2 * f0 + f0x * x0;
  p.P10 = e2 * fa + (L1 * f0v + fax) * x0 + (L1 * f0x) * v;
  p.P01 = e2 * fb + (L2 * f0w + fbx) * x0 + (L2 * f0x) * w;
  p.P20 = (L1 * fav) * x0 + (L1 * L1 * f0v + L1 * fax) * v;
  p.P11 = (L1 * fbv + L2 * faw) * x0 + (L1 * L2 * f0w + L1 * fbx) * v + (L1 * L2 * f0v + L2 * fax) * w;
  p.P02 = (L2 * fbw) * x0 + (L2 * L2 * f0w + L2 * fbx) * w;
  p.P30 = (L1 * L1 * fav) * v;
  p.P21 = (L1 * L2 * faw + L1 * L1 * fbv) * v + (L1 * L2 * fav) * w;
  p.P12 = (L1 * L2 * fbv + L2 * L2 * faw) * w + (L1 * L2 * fbw) * v;
  p.P03 = (L2 * L2 * fbw) * w;
  return p;
}

Vec3 triangle_velocity(const Vec3& xf, const TriangleFrame& frame, const TTable& t, const Vec3& f0, const Vec3& f1,
                       const Vec3& f2, const KernelParams& params) {
  const PCoefficients p = p_coefficients(xf, frame, f0, f1, f2, params.eps);
  const Vec3 sum = f0 * t.T001 + p.P00 * t.T003 + (f1 - f0) * t.T101 + p.P10 * t.T103 + (f2 - f1) * t.T011 +
                   p.P01 * t.T013 + p.P20 * t.T203 + p.P11 * t.T113 + p.P02 * t.T023 + p.P30 * t.T303 +
                   p.P21 * t.T213 + p.P12 * t.T123 + p.P03 * t.T033;
  return (frame.BH / (8.0 * std::numbers::pi * params.mu)) * sum;
}

namespace {

/// Altitude split of a triangle with a flat angle at vertex o: the foot p on
/// the opposite side a -> b is y_a + t (y_b - y_a), and the halves (o, a, p)
/// and (o, p, b) keep the orientation.
struct AltitudeSplit {
  int o, a, b;
  double t;
  TriangleFrame first, second;
};

AltitudeSplit altitude_split(const TriangleFrame& frame) {
  const Vec3 ys[3] = {frame.y0, frame.y1, frame.y2};
  AltitudeSplit s;
  s.o = frame.split_vertex;
  s.a = (s.o + 1) % 3;
  s.b = (s.o + 2) % 3;
  const Vec3 ab = ys[s.b] - ys[s.a];
  s.t = dot(ys[s.o] - ys[s.a], ab) / norm2(ab);
  const Vec3 p = ys[s.a] + s.t * ab;
  s.first = TriangleFrame::from_vertices(ys[s.o], ys[s.a], p);
  s.second = TriangleFrame::from_vertices(ys[s.o], p, ys[s.b]);
  return s;
}

}  // namespace

Vec3 triangle_velocity(const Vec3& xf, const TriangleFrame& frame, const Vec3& f0, const Vec3& f1, const Vec3& f2,
                       const KernelParams& params) {
  params.validate();
  const Vec3* f[3] = {&f0, &f1, &f2};
  if (frame.split_vertex >= 0) {
    const AltitudeSplit s = altitude_split(frame);
    const Vec3 fp = (1 - s.t) * *f[s.a] + s.t * *f[s.b];
    return triangle_velocity(xf, s.first, *f[s.o], *f[s.a], fp, params) +
           triangle_velocity(xf, s.second, *f[s.o], fp, *f[s.b], params);
  }
  if (const int s = frame.stable_shift) {
    const TriangleFrame r = frame.shifted(s);
    return triangle_velocity(xf, r, T_table(xf, r, params.eps), *f[s], *f[(s + 1) % 3], *f[(s + 2) % 3], params);
  }
  return triangle_velocity(xf, frame, T_table(xf, frame, params.eps), f0, f1, f2, params);
}

namespace {

void add_sym(Mat3& m, const Vec3& a, const Vec3& b, double s) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] += s * (a[i] * b[j] + b[i] * a[j]);
}

void add_outer(Mat3& m, const Vec3& a, double s) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] += s * a[i] * a[j];
}

}  // namespace

std::array<Mat3, 3> triangle_influence(const Vec3& xf, const TriangleFrame& frame, const TTable& t,
                                       const KernelParams& params) {
  // Hat functions on the parameter triangle: phi0 = 1 - alpha, phi1 = alpha - beta, phi2 = beta.
  static constexpr double kHat[3][3] = {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}};
  const Vec3 x0 = xf - frame.y0;
  const Vec3& v = frame.vHat;
  const Vec3& w = frame.wHat;
  const double L1 = frame.L1, L2 = frame.L2;
  const double e2 = params.eps * params.eps;
  const double scale = frame.BH / (8.0 * std::numbers::pi * params.mu);
  std::array<Mat3, 3> G{};
  for (int k = 0; k < 3; ++k) {
    const double c = kHat[k][0], a = kHat[k][1], b = kHat[k][2];
    // (x - y) = x0 + alpha L1 v + beta L2 w, expanded in (x - y)(x - y)^T / R^3.
    const double diag = c * t.T001 + a * t.T101 + b * t.T011 + e2 * (c * t.T003 + a * t.T103 + b * t.T013);
    Mat3& g = G[k];
    for (int i = 0; i < 3; ++i) g[i][i] = diag;
    add_outer(g, x0, c * t.T003 + a * t.T103 + b * t.T013);
    add_sym(g, x0, v, L1 * (c * t.T103 + a * t.T203 + b * t.T113));
    add_sym(g, x0, w, L2 * (c * t.T013 + a * t.T113 + b * t.T023));
    add_outer(g, v, L1 * L1 * (c * t.T203 + a * t.T303 + b * t.T213));
    add_sym(g, v, w, L1 * L2 * (c * t.T113 + a * t.T213 + b * t.T123));
    add_outer(g, w, L2 * L2 * (c * t.T023 + a * t.T123 + b * t.T033));
    for (auto& row : g)
      for (double& e : row) e *= scale;
  }
  return G;
}

std::array<Mat3, 3> triangle_influence(const Vec3& xf, const TriangleFrame& frame, const KernelParams& params) {
  params.validate();
  if (frame.split_vertex >= 0) {
    const AltitudeSplit s = altitude_split(frame);
    const auto G1 = triangle_influence(xf, s.first, params);
    const auto G2 = triangle_influence(xf, s.second, params);
    // The foot's force is (1 - t) f_a + t f_b.
    std::array<Mat3, 3> G{};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double gp = G1[2][i][j] + G2[1][i][j];
        G[s.o][i][j] = G1[0][i][j] + G2[0][i][j];
        G[s.a][i][j] = G1[1][i][j] + (1 - s.t) * gp;
        G[s.b][i][j] = G2[2][i][j] + s.t * gp;
      }
    }
    return G;
  }
  if (const int s = frame.stable_shift) {
    const TriangleFrame r = frame.shifted(s);
    const auto Gr = triangle_influence(xf, r, T_table(xf, r, params.eps), params);
    // Vertex k of the relabeled triangle is vertex (k + s) mod 3 of this one.
    std::array<Mat3, 3> G;
    for (int k = 0; k < 3; ++k) G[(k + s) % 3] = Gr[k];
    return G;
  }
  return triangle_influence(xf, frame, T_table(xf, frame, params.eps), params);
}

Vec3 triangle_net_force(const TriangleFrame& frame, const Vec3& f0, const Vec3& f1, const Vec3& f2) {
  return (frame.BH / 6.0) * (f0 + f1 + f2);
}

Vec3 triangle_net_torque(const TriangleFrame& frame, const Vec3& f0, const Vec3& f1, const Vec3& f2, const Vec3& yc) {
  const Vec3& y0 = frame.y0;
  const Vec3& y1 = frame.y1;
  const Vec3& y2 = frame.y2;
  const Vec3 m = cross(2.0 * y0 + y1 + y2 - 4.0 * yc, f0) + cross(y0 + 2.0 * y1 + y2 - 4.0 * yc, f1) +
                 cross(y0 + y1 + 2.0 * y2 - 4.0 * yc, f2);
  return (frame.BH / 24.0) * m;
}

}  // namespace rss
