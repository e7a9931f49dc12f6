#include "rss/kernel/t_table.hpp"

#include <cmath>

#include "rss/error.hpp"
#include "rss/kernel/base_cases.hpp"
#include "rss/kernel/stokeslet.hpp"

namespace rss {

double TTable::get(int m, int n, int q) const {
  if (q == 1) {
    if (m == 0 && n == 0) return T001;
    if (m == 1 && n == 0) return T101;
    if (m == 0 && n == 1) return T011;
  } else if (q == 3) {
    switch (m * 10 + n) {
      case 0: return T003;
      case 10: return T103;
      case 1: return T013;
      case 20: return T203;
      case 11: return T113;
      case 2: return T023;
      case 30: return T303;
      case 21: return T213;
      case 12: return T123;
      case 3: return T033;
      default: break;
    }
  }
  throw InvalidArgument("T_{m,n,q} index not stored");
}

SideBases side_bases(const Vec3& xf, const TriangleFrame& frame, double eps) {
  SideBases b{segment_base_basis(SegmentDir::e1, xf, frame.y0, frame.y1, eps),
              segment_base_basis(SegmentDir::e2, xf, frame.y1, frame.y2, eps),
              segment_base_basis(SegmentDir::d, xf, frame.y2, frame.y0, eps)};
  segment_recurse(b.e1);
  segment_recurse(b.e2);
  segment_recurse(b.d);
  return b;
}

std::pair<double, double> boundary_AB(int m, int n, int q, const SideBases& bases) {
  if (m < 0 || n < 0 || m + n > 2) throw InvalidArgument("boundary_AB supports m + n <= 2 only");
  if (q != 1 && q != -1) throw InvalidArgument("boundary_AB supports q = +-1 only");
  if (q == -1 && m + n > 0) throw InvalidArgument("only S_{0,-1} is kept for q = -1");
  static constexpr int kBinom[3][3] = {{1, 0, 0}, {1, 1, 0}, {1, 2, 1}};
  // On the diagonal alpha = beta = 1 - theta, so alpha^m beta^n expands binomially.
  double diag = 0.0;
  for (int k = 0, sgn = 1; k <= m + n; ++k, sgn = -sgn) diag += sgn * kBinom[m + n][k] * bases.d.S(k, q);
  const double A = bases.e2.S(n, q) - diag;
  const double B = n == 0 ? -bases.e1.S(m, q) + diag : diag;
  return {A, B};
}

namespace {

struct Recursion {
  const SideBases& bases;
  double c, inv_d, L1, L2, x0v, x0w;

  // T_{m+1,n,q} from T_{m,n,q} and the q - 2 level.
  double next_alpha(int m, int n, int q, double t_mn, double t_m1n, double t_mn1) const {
    const double qq = q - 2;
    const auto [A, B] = boundary_AB(m, n, q - 2, bases);
    return inv_d * (A / (L1 * L1 * qq) - c * B / (L1 * L2 * qq) - m * t_m1n / (L1 * L1 * qq) +
                    c * n * t_mn1 / (L1 * L2 * qq) + (x0v - c * x0w) / L1 * t_mn);
  }

  // T_{m,n+1,q} from T_{m,n,q} and the q - 2 level.
  double next_beta(int m, int n, int q, double t_mn, double t_m1n, double t_mn1) const {
    const double qq = q - 2;
    const auto [A, B] = boundary_AB(m, n, q - 2, bases);
    return inv_d * (B / (L2 * L2 * qq) - c * A / (L1 * L2 * qq) - n * t_mn1 / (L2 * L2 * qq) +
                    c * m * t_m1n / (L1 * L2 * qq) + (x0w - c * x0v) / L2 * t_mn);
  }
};

}  // namespace

TTable T_table(const Vec3& xf, const TriangleFrame& frame, double eps) {
  require_above_floor(eps, frame.max_side());
  const SideBases bases = side_bases(xf, frame, eps);
  const Vec3 x0 = xf - frame.y0;
  const double c = dot(frame.vHat, frame.wHat);
  const double denom = c * c - 1.0;
  if (!(std::fabs(denom) >= 1e-12)) throw DegenerateTriangleError("triangle sides are parallel");
  const Recursion r{bases, c, 1.0 / denom, frame.L1, frame.L2, dot(x0, frame.vHat), dot(x0, frame.wHat)};

  TTable t;
  t.T003 = T003(xf, frame, eps);
  t.T001 = T001(xf, frame, eps, t.T003);

  t.T101 = r.next_alpha(0, 0, 1, t.T001, 0.0, 0.0);
  t.T011 = r.next_beta(0, 0, 1, t.T001, 0.0, 0.0);

  // Arguments: T_{m,n,3}, T_{m-1,n,1}, T_{m,n-1,1}.
  t.T103 = r.next_alpha(0, 0, 3, t.T003, 0.0, 0.0);
  t.T013 = r.next_beta(0, 0, 3, t.T003, 0.0, 0.0);
  t.T203 = r.next_alpha(1, 0, 3, t.T103, t.T001, 0.0);
  t.T113 = r.next_beta(1, 0, 3, t.T103, t.T001, 0.0);
  t.T023 = r.next_beta(0, 1, 3, t.T013, 0.0, t.T001);
  t.T303 = r.next_alpha(2, 0, 3, t.T203, t.T101, 0.0);
  t.T213 = r.next_beta(2, 0, 3, t.T203, t.T101, 0.0);
  t.T123 = r.next_beta(1, 1, 3, t.T113, t.T011, t.T101);
  t.T033 = r.next_beta(0, 2, 3, t.T023, 0.0, t.T011);

  for (double v : {t.T101, t.T011, t.T103, t.T013, t.T203, t.T113, t.T023, t.T303, t.T213, t.T123, t.T033}) {
    if (!std::isfinite(v)) throw FloatingFloorError("T_{m,n,q} recursion produced a non-finite value");
  }
  return t;
}

}  // namespace rss
