#include "rss/experiments/studies.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <functional>
#include <numbers>
#include <sstream>

#include "rss/error.hpp"
#include "rss/experiments/references.hpp"
#include "rss/kernel/stokeslet.hpp"
#include "rss/solver/baselines.hpp"
#include "rss/solver/solver.hpp"

namespace rss {

std::vector<double> default_eps_grid() { return {1e-1, 1e-2, 1e-4, 1e-6, 1e-7, 1e-8}; }
std::vector<double> default_mrs_eps_grid() { return {0.25, 0.1, 0.05, 0.01, 0.005, 0.001}; }

StudyParams default_study_params(const std::string& id) {
  StudyParams p;
  if (id == "forward-translate" || id == "forward-rotate") {
    p.f_values = {2, 3, 4, 5, 6, 7, 8, 9};
  } else if (id == "resistance-drag" || id == "resistance-torque" || id == "linear-vs-constant") {
    p.f_values = {2, 3, 4, 5, 6};
  } else if (id == "forward-spheroid") {
    p.f_values = {6};
    p.gradings = {0.0, 1.0};
  } else if (id == "squirmer") {
    p.f_values = {3, 4, 5, 6, 7, 8};
  } else if (id == "mrs-comparison") {
    p.f_values = {9};
  } else if (id != "pipe-leak") {
    throw InvalidArgument("unknown study id '" + id + "'");
  }
  if (id == "squirmer" || id == "linear-vs-constant" || id == "resistance-drag" || id == "resistance-torque" ||
      id == "forward-spheroid") {
    p.eps_values = {1e-4};
  }
  return p;
}

namespace {

std::string utc_timestamp() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

std::string num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Short form for summary keys.
std::string label(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

class Study {
 public:
  Study(const std::string& id, const StudyParams& p) : id_(id), p_(p) {
    report_.experiment = id;
    report_.timestamp = utc_timestamp();
    if (p_.f_values.empty()) p_.f_values = default_study_params(id).f_values;
    explicit_eps_ = !p_.eps_values.empty();
    if (!explicit_eps_) p_.eps_values = id == "mrs-comparison" ? default_mrs_eps_grid() : default_eps_grid();
    if (!(p_.mu > 0) || !(p_.radius > 0)) throw InvalidArgument("mu and radius must be positive");
    for (int f : p_.f_values)
      if (f < 1) throw InvalidArgument("subdivision factor must be >= 1");
    for (double e : p_.eps_values)
      if (!(e > 0) || !std::isfinite(e)) throw InvalidArgument("eps values must be finite and positive");
    auto& par = report_.parameters;
    par["f"] = join(p_.f_values);
    par["eps"] = join(p_.eps_values);
    par["mu"] = num(p_.mu);
    par["radius"] = num(p_.radius);
  }

  ExperimentReport run() {
    if (id_ == "forward-translate") forward_sphere(false);
    else if (id_ == "forward-rotate") forward_sphere(true);
    else if (id_ == "resistance-drag") resistance(false);
    else if (id_ == "resistance-torque") resistance(true);
    else if (id_ == "forward-spheroid") spheroid();
    else if (id_ == "squirmer") squirmer();
    else if (id_ == "pipe-leak") pipe_leak();
    else if (id_ == "linear-vs-constant") linear_vs_constant();
    else if (id_ == "mrs-comparison") mrs_comparison();
    else throw InvalidArgument("unknown study id '" + id_ + "'");
    return std::move(report_);
  }

 private:
  std::string id_;
  StudyParams p_;
  bool explicit_eps_ = false;
  ExperimentReport report_;

  /// Eps values usable on this mesh. Explicit values below the floor throw;
  /// defaults are filtered. The quadrature baseline has no floor.
  std::vector<double> eps_for(const TriMesh& mesh, bool floor_applies = true) const {
    if (!floor_applies) return p_.eps_values;
    std::vector<double> out;
    for (double e : p_.eps_values) {
      if (explicit_eps_) {
        require_above_floor(e, mesh.max_side_length());
        out.push_back(e);
      } else if (e * e > ulp_spacing(mesh.max_side_length())) {
        out.push_back(e);
      }
    }
    return out;
  }

  ReportRow base_row(const TriMesh& mesh, double eps, const std::string& metric) const {
    const MeshStats s = mesh_stats(mesh);
    ReportRow r;
    r.num_faces = s.num_faces;
    r.dof = s.dof;
    r.h = s.h;
    r.eps = eps;
    r.metric = metric;
    return r;
  }

  /// Runs body; a solver failure marks the row instead of aborting the study.
  void run_row(ReportRow row, const std::function<void(ReportRow&)>& body) {
    try {
      body(row);
    } catch (const SingularSystemError& e) {
      row.value = std::nan("");
      row.error = e.what();
    }
    report_.rows.push_back(std::move(row));
  }

  std::vector<Vec3> vertices(const TriMesh& m) const { return {m.vertices().begin(), m.vertices().end()}; }

  void maybe_sample(const TriMesh& mesh, const VertexField& forces, double eps, bool last) {
    if (!last || p_.field_points.empty() || !report_.field.empty()) return;
    const auto u = evaluate_velocity(mesh, forces, p_.field_points, KernelParams{eps, p_.mu});
    for (std::size_t i = 0; i < u.size(); ++i) report_.field.push_back({p_.field_points[i], u[i]});
  }

  /// Fits metric ~ h^k per eps over rows with finite values.
  void fit_slopes(const std::string& key, bool exclude_plateau) {
    std::vector<double> eps_seen;
    for (const ReportRow& r : report_.rows)
      if (std::find(eps_seen.begin(), eps_seen.end(), r.eps) == eps_seen.end()) eps_seen.push_back(r.eps);
    for (double e : eps_seen) {
      std::vector<double> h, v;
      for (const ReportRow& r : report_.rows) {
        if (r.eps == e && std::isfinite(r.value)) {
          h.push_back(r.h);
          v.push_back(r.value);
        }
      }
      if (h.size() < 2) continue;
      try {
        const PowerLawFit fit = fit_power_law(h, v, exclude_plateau);
        report_.summary.push_back({key + "_slope@eps=" + label(e), fit.exponent});
        if (!fit.plateau.empty())
          report_.summary.push_back({key + "_plateau_points@eps=" + label(e), static_cast<double>(fit.plateau.size())});
      } catch (const InvalidArgument&) {
        // Fewer than two usable points after plateau removal.
      }
    }
  }

  VertexField rotation_forces(const TriMesh& mesh, const Vec3& Omega) const {
    VertexField f;
    for (const Vec3& x : mesh.vertices()) f.push_back(-1.0 * sphere_rotation_reference(x, p_.radius, Omega, p_.mu).traction);
    return f;
  }

  void forward_sphere(bool rotate) {
    const Vec3 U{1, 0, 0}, Omega{0, 0, 1};
    for (std::size_t fi = 0; fi < p_.f_values.size(); ++fi) {
      const TriMesh mesh = make_icosphere(p_.f_values[fi], p_.radius);
      const std::vector<Vec3> pts = vertices(mesh);
      VertexField forces;
      std::vector<Vec3> target;
      for (const Vec3& x : pts) {
        const auto ref = rotate ? sphere_rotation_reference(x, p_.radius, Omega, p_.mu)
                                : sphere_translation_reference(x, p_.radius, U, p_.mu);
        forces.push_back(-1.0 * ref.traction);
        target.push_back(ref.velocity);
      }
      const auto eps_list = eps_for(mesh);
      for (std::size_t ei = 0; ei < eps_list.size(); ++ei) {
        const double eps = eps_list[ei];
        run_row(base_row(mesh, eps, "l2_error"), [&](ReportRow& row) {
          const auto u = evaluate_velocity(mesh, forces, pts, KernelParams{eps, p_.mu});
          std::vector<double> err;
          double emax = 0;
          for (std::size_t i = 0; i < u.size(); ++i) {
            err.push_back(norm(u[i] - target[i]));
            emax = std::max(emax, err.back());
          }
          row.value = l2_error(err);
          row.extras.push_back({"max_error", emax});
        });
        maybe_sample(mesh, forces, eps, fi + 1 == p_.f_values.size() && ei == 0);
      }
    }
    fit_slopes("l2_error", true);
  }

  void resistance(bool rotate) {
    const double exact = rotate ? -8 * std::numbers::pi * p_.mu * std::pow(p_.radius, 3)
                                : -6 * std::numbers::pi * p_.mu * p_.radius;
    report_.summary.push_back({rotate ? "exact_torque_z" : "exact_drag_x", exact});
    for (std::size_t fi = 0; fi < p_.f_values.size(); ++fi) {
      const TriMesh mesh = make_icosphere(p_.f_values[fi], p_.radius);
      VertexField bc;
      for (const Vec3& x : mesh.vertices()) bc.push_back(rotate ? cross(Vec3{0, 0, 1}, x) : Vec3{1, 0, 0});
      const auto eps_list = eps_for(mesh);
      for (std::size_t ei = 0; ei < eps_list.size(); ++ei) {
        const double eps = eps_list[ei];
        run_row(base_row(mesh, eps, rotate ? "torque_z_error_pct" : "drag_x_error_pct"), [&](ReportRow& row) {
          const KernelParams kp{eps, p_.mu};
          const VertexField f = solve_resistance(mesh, bc, kp);
          // The body feels the opposite of the force it applies to the fluid.
          const Vec3 v = rotate ? -1.0 * mesh_net_torque(mesh, f, {}) : -1.0 * mesh_net_force(mesh, f);
          row.value = 100.0 * std::fabs((rotate ? v.z : v.x) - exact) / std::fabs(exact);
          const char* names[3] = {rotate ? "torque_x" : "drag_x", rotate ? "torque_y" : "drag_y",
                                  rotate ? "torque_z" : "drag_z"};
          for (int k = 0; k < 3; ++k) row.extras.push_back({names[k], v[k]});
          maybe_sample(mesh, f, eps, fi + 1 == p_.f_values.size() && ei == 0);
        });
      }
    }
    fit_slopes(rotate ? "torque_z_error" : "drag_x_error", true);
  }

  void spheroid() {
    const double a = p_.spheroid_a, b = p_.spheroid_b;
    report_.parameters["spheroid_a"] = num(a);
    report_.parameters["spheroid_b"] = num(b);
    report_.parameters["gradings"] = join(p_.gradings);
    for (int f : p_.f_values) {
      for (double g : p_.gradings) {
        const TriMesh mesh = make_spheroid_mesh(f, a, b, g);
        const std::vector<Vec3> pts = vertices(mesh);
        VertexField forces;
        for (const Vec3& x : pts) forces.push_back(-1.0 * spheroid_rotation_reference(x, a, b, p_.mu).traction);
        for (double eps : eps_for(mesh)) {
          run_row(base_row(mesh, eps, "l2_error"), [&](ReportRow& row) {
            const auto u = evaluate_velocity(mesh, forces, pts, KernelParams{eps, p_.mu});
            std::vector<double> err, equator;
            double polar_max = 0;
            for (std::size_t i = 0; i < u.size(); ++i) {
              const Vec3& x = pts[i];
              err.push_back(norm(u[i] - cross(Vec3{0, 0, 1}, x)));
              const double t = std::acos(std::clamp(x.z / a, -1.0, 1.0)) / std::numbers::pi;
              if (t < 0.1 || t > 0.9) polar_max = std::max(polar_max, err.back());
              if (std::fabs(t - 0.5) < 0.1) equator.push_back(err.back());
            }
            row.value = l2_error(err);
            std::nth_element(equator.begin(), equator.begin() + equator.size() / 2, equator.end());
            row.extras.push_back({"grading", g});
            row.extras.push_back({"polar_max_error", polar_max});
            row.extras.push_back({"equator_median_error", equator.empty() ? 0.0 : equator[equator.size() / 2]});
            row.extras.push_back({"max_error", *std::max_element(err.begin(), err.end())});
          });
        }
      }
    }
    const SpheroidRotation ref = spheroid_rotation_reference({0, 0, a}, a, b, p_.mu);
    report_.summary.push_back({"exact_torque_z", ref.torque.z});
  }

  void squirmer() {
    report_.parameters["B1"] = num(p_.B1);
    for (std::size_t fi = 0; fi < p_.f_values.size(); ++fi) {
      const TriMesh mesh = make_icosphere(p_.f_values[fi], p_.radius);
      VertexField slip;
      for (const Vec3& x : mesh.vertices()) slip.push_back(squirmer_slip(x, p_.B1));
      const double speed = 2.0 / 3.0 * p_.B1;
      const auto eps_list = eps_for(mesh);
      for (std::size_t ei = 0; ei < eps_list.size(); ++ei) {
        const double eps = eps_list[ei];
        run_row(base_row(mesh, eps, "Uz_error"), [&](ReportRow& row) {
          const SwimmerSolution s = solve_swimmer(mesh, slip, {}, KernelParams{eps, p_.mu});
          row.value = std::fabs(s.U.z - speed);
          row.extras = {{"Ux", s.U.x},         {"Uy", s.U.y},         {"Uz", s.U.z},
                        {"Omega_x", s.Omega.x}, {"Omega_y", s.Omega.y}, {"Omega_z", s.Omega.z},
                        {"net_force", norm(mesh_net_force(mesh, s.forces))},
                        {"net_torque", norm(mesh_net_torque(mesh, s.forces, {}))}};
          maybe_sample(mesh, s.forces, eps, fi + 1 == p_.f_values.size() && ei == 0);
        });
      }
    }
    fit_slopes("Uz_error", false);
  }

  /// Sum over the faces lying in the plane x = x_face of int |u . n| with a
  /// collapsed 4 x 4 Gauss rule per triangle.
  double abs_flux(const TriMesh& bodies, const TriMesh& cube, const VertexField& forces, double x_face,
                  const Vec3& normal, double eps) const {
    static constexpr double kNodes[4] = {0.0694318442029737, 0.3300094782075719, 0.6699905217924281,
                                         0.9305681557970263};
    static constexpr double kWeights[4] = {0.1739274225687269, 0.3260725774312731, 0.3260725774312731,
                                           0.1739274225687269};
    const double tol = 1e-9 * p_.cube_half_side;
    std::vector<Vec3> pts;
    std::vector<double> w;
    for (const TriangleFrame& t : cube.frames()) {
      if (std::fabs(t.y0.x - x_face) > tol || std::fabs(t.y1.x - x_face) > tol || std::fabs(t.y2.x - x_face) > tol)
        continue;
      // alpha = u, beta = u v maps the unit square onto 0 <= beta <= alpha <= 1 with Jacobian u.
      for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
          const double u = kNodes[i], v = kNodes[j];
          pts.push_back(t.point(u, u * v));
          w.push_back(kWeights[i] * kWeights[j] * u * t.BH);
        }
      }
    }
    if (pts.empty()) throw InvalidArgument("no cube faces found in the flux plane");
    const auto u = evaluate_velocity(bodies, forces, pts, KernelParams{eps, p_.mu});
    double flux = 0.0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const double bg = pipe_reference(pts[k].y, pts[k].z, p_.pipe_half_width, p_.pipe_half_width, p_.pressure_drop,
                                       p_.mu, p_.n_terms);
      flux += w[k] * std::fabs(dot(u[k] + Vec3{bg, 0, 0}, normal));
    }
    return flux;
  }

  void pipe_leak() {
    const double s = p_.cube_half_side, a = p_.pipe_half_width;
    auto& par = report_.parameters;
    par.erase("f");
    par.erase("eps");
    par["h_cube"] = join(p_.h_cube);
    par["eps_over_h"] = join(p_.eps_over_h);
    par["h_pipe"] = num(p_.h_pipe);
    par["L"] = num(p_.pipe_half_length);
    par["a"] = num(a);
    par["s"] = num(s);
    par["n_terms"] = std::to_string(p_.n_terms);
    const double flux0 = flux_without_cube(s, a, a, p_.pressure_drop, p_.mu, p_.n_terms);
    report_.summary.push_back({"flux_without_cube", flux0});
    const TriMesh pipe = make_pipe_mesh(p_.pipe_half_length, a, a, p_.h_pipe);
    for (double hc : p_.h_cube) {
      const TriMesh cube = make_box_mesh({0, 0, 0}, s, hc);
      const TriMesh parts[2] = {cube, pipe};
      const TriMesh bodies = merge_meshes(parts);
      VertexField bc(bodies.num_vertices(), Vec3{});
      for (std::size_t i = 0; i < cube.num_vertices(); ++i) {
        const Vec3& x = cube.vertex(i);
        bc[i] = {-pipe_reference(x.y, x.z, a, a, p_.pressure_drop, p_.mu, p_.n_terms), 0, 0};
      }
      for (double r : p_.eps_over_h) {
        const double eps = r * hc;
        require_above_floor(eps, bodies.max_side_length());
        ReportRow row = base_row(bodies, eps, "leak");
        row.h = hc;
        run_row(row, [&](ReportRow& rr) {
          const KernelParams kp{eps, p_.mu};
          const VertexField f = solve_resistance(bodies, bc, kp);
          const double front = abs_flux(bodies, cube, f, -s, {-1, 0, 0}, eps);
          const double back = abs_flux(bodies, cube, f, s, {1, 0, 0}, eps);
          rr.value = front / flux0;
          rr.extras = {{"eps_over_h", r},
                       {"leak_scaled", rr.value * std::pow(hc, -1.5)},
                       {"leak_back", back / flux0},
                       {"leak_back_scaled", back / flux0 * std::pow(hc, -1.5)},
                       {"abs_flux_front", front},
                       {"abs_flux_back", back}};
        });
      }
    }
    // Scaled leak against eps / h: per h and pooled.
    std::vector<double> all_x, all_y;
    for (double hc : p_.h_cube) {
      std::vector<double> x, y;
      for (const ReportRow& r : report_.rows) {
        if (r.h == hc && std::isfinite(r.value)) {
          x.push_back(r.extra("eps_over_h"));
          y.push_back(r.extra("leak_scaled"));
        }
      }
      all_x.insert(all_x.end(), x.begin(), x.end());
      all_y.insert(all_y.end(), y.begin(), y.end());
      if (x.size() < 2) continue;
      const PowerLawFit fit = fit_power_law(x, y);
      report_.summary.push_back({"fit_exponent@h=" + label(hc), fit.exponent});
      report_.summary.push_back({"fit_prefactor@h=" + label(hc), fit.prefactor});
    }
    if (all_x.size() >= 2) {
      const PowerLawFit fit = fit_power_law(all_x, all_y);
      report_.summary.push_back({"fit_exponent", fit.exponent});
      report_.summary.push_back({"fit_prefactor", fit.prefactor});
      // Collapse: spread of scaled leak across h at each eps / h.
      double worst = 1.0;
      for (double r : p_.eps_over_h) {
        double lo = INFINITY, hi = 0;
        for (const ReportRow& row : report_.rows) {
          if (std::isfinite(row.value) && row.extra("eps_over_h") == r) {
            lo = std::min(lo, row.extra("leak_scaled"));
            hi = std::max(hi, row.extra("leak_scaled"));
          }
        }
        if (hi > 0) worst = std::max(worst, hi / lo);
      }
      report_.summary.push_back({"collapse_ratio", worst});
    }
  }

  void linear_vs_constant() {
    const Vec3 Omega{0, 0, 1};
    for (int f : p_.f_values) {
      const TriMesh mesh = make_icosphere(f, p_.radius);
      const std::vector<Vec3> pts = vertices(mesh);
      const VertexField forces = rotation_forces(mesh, Omega);
      std::vector<Vec3> face_forces;
      for (const Face& fc : mesh.faces()) face_forces.push_back((forces[fc[0]] + forces[fc[1]] + forces[fc[2]]) / 3.0);
      std::vector<Vec3> target;
      for (const Vec3& x : pts) target.push_back(cross(Omega, x));
      for (double eps : eps_for(mesh)) {
        run_row(base_row(mesh, eps, "linear_l2_error"), [&](ReportRow& row) {
          const KernelParams kp{eps, p_.mu};
          const auto ul = evaluate_velocity(mesh, forces, pts, kp);
          const auto uc = constant_element_velocity(mesh, face_forces, pts, kp);
          std::vector<double> el, ec;
          for (std::size_t i = 0; i < pts.size(); ++i) {
            el.push_back(norm(ul[i] - target[i]));
            ec.push_back(norm(uc[i] - target[i]));
          }
          row.value = l2_error(el);
          row.extras.push_back({"constant_l2_error", l2_error(ec)});
          if (f <= p_.condition_max_f) {
            const double cl = condition_number(assemble_resistance(mesh, kp));
            const double cc = condition_number(assemble_constant_resistance(mesh, kp));
            row.extras.push_back({"cond_linear", cl});
            row.extras.push_back({"cond_constant", cc});
            row.extras.push_back({"cond_ratio", cc / cl});
          }
        });
      }
    }
  }

  void mrs_comparison() {
    const Vec3 U{1, 0, 0};
    for (int f : p_.f_values) {
      const TriMesh mesh = make_icosphere(f, p_.radius);
      const std::vector<Vec3> pts = vertices(mesh);
      VertexField forces;
      std::vector<Vec3> target;
      for (const Vec3& x : pts) {
        const auto ref = sphere_translation_reference(x, p_.radius, U, p_.mu);
        forces.push_back(-1.0 * ref.traction);
        target.push_back(ref.velocity);
      }
      for (double eps : eps_for(mesh, false)) {
        run_row(base_row(mesh, eps, "mrs_l2_error"), [&](ReportRow& row) {
          const KernelParams kp{eps, p_.mu};
          const auto um = baseline_mrs_velocity(mesh, forces, pts, kp);
          std::vector<double> em;
          for (std::size_t i = 0; i < pts.size(); ++i) em.push_back(norm(um[i] - target[i]));
          row.value = l2_error(em);
          if (eps * eps > ulp_spacing(mesh.max_side_length())) {
            const auto us = evaluate_velocity(mesh, forces, pts, kp);
            std::vector<double> es;
            for (std::size_t i = 0; i < pts.size(); ++i) es.push_back(norm(us[i] - target[i]));
            row.extras.push_back({"surface_l2_error", l2_error(es)});
          }
        });
      }
    }
  }
};

}  // namespace

ExperimentReport run_study(const std::string& id, const StudyParams& params) {
  if (std::find(study_ids().begin(), study_ids().end(), id) == study_ids().end())
    throw InvalidArgument("unknown study id '" + id + "'");
  return Study(id, params).run();
}

}  // namespace rss
