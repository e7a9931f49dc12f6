// Command-line front end; talks to the library only through rss/rss.h.

#include <rss/rss.h>

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit { kOk = 0, kUsage = 2, kFloor = 3, kSingular = 4, kIo = 5, kInternal = 1 };

struct Failure {
  int code;
  std::string message;
};

int exit_code(rss_status s) {
  switch (s) {
    case RSS_OK: return kOk;
    case RSS_ERR_INVALID_ARGUMENT:
    case RSS_ERR_DEGENERATE: return kUsage;
    case RSS_ERR_FLOOR: return kFloor;
    case RSS_ERR_SINGULAR: return kSingular;
    case RSS_ERR_IO: return kIo;
    default: return kInternal;
  }
}

void check(rss_status s) {
  if (s != RSS_OK) throw Failure{exit_code(s), rss_last_error()};
}

struct MeshHandle {
  rss_mesh* p = nullptr;
  ~MeshHandle() { rss_mesh_free(p); }
};

struct ReportHandle {
  rss_report* p = nullptr;
  ~ReportHandle() { rss_report_free(p); }
};

struct ParamsHandle {
  rss_study_params* p = nullptr;
  ~ParamsHandle() { rss_study_params_free(p); }
};

struct MeshOptions {
  std::string file;
  std::string shape = "icosphere";
  int f = 4;
  double radius = 1.0;
  double a = 3.0;
  double b = 1.0;
  double grading = 0.0;
  double half_side = 0.25;
  double grid_h = 0.05;
  std::vector<double> center{0, 0, 0};
  double length = 2.5;
  double width = 1.0;

  void add(CLI::App* app) {
    app->add_option("--mesh", file, "Read the mesh from this file instead of generating one");
    app->add_option("--shape", shape, "icosphere | spheroid | box | pipe")
        ->check(CLI::IsMember({"icosphere", "spheroid", "box", "pipe"}));
    app->add_option("--f", f, "Icosahedron subdivision factor")->check(CLI::PositiveNumber);
    app->add_option("--radius", radius, "Sphere radius");
    app->add_option("--a", a, "Spheroid semi-axis along z");
    app->add_option("--b", b, "Spheroid equatorial semi-axis");
    app->add_option("--grading", grading, "Spheroid polar grading, 0 for none");
    app->add_option("--half-side", half_side, "Box half side");
    app->add_option("--grid-h", grid_h, "Grid spacing for box and pipe");
    app->add_option("--center", center, "Box center x,y,z")->delimiter(',')->expected(3);
    app->add_option("--length", length, "Pipe half length");
    app->add_option("--width", width, "Pipe half width (square section)");
  }

  void build(MeshHandle& m) const {
    if (!file.empty()) return check(rss_mesh_read(file.c_str(), &m.p));
    if (shape == "icosphere") return check(rss_mesh_icosphere(f, radius, &m.p));
    if (shape == "spheroid") return check(rss_mesh_spheroid(f, a, b, grading, &m.p));
    if (shape == "box") return check(rss_mesh_box(center.data(), half_side, grid_h, &m.p));
    check(rss_mesh_pipe(length, width, width, grid_h, &m.p));
  }
};

struct KernelOptions {
  double eps = 1e-4;
  double mu = 1.0;

  void add(CLI::App* app) {
    app->add_option("--eps", eps, "Regularization length");
    app->add_option("--mu", mu, "Viscosity");
  }
  rss_kernel_params params() const { return {eps, mu}; }
};

std::vector<double> vertices_of(const rss_mesh* m) {
  std::vector<double> v(3 * rss_mesh_num_vertices(m));
  check(rss_mesh_vertices(m, v.data()));
  return v;
}

/// Whitespace- or comma-separated triples, one per line; a non-numeric first line is a header.
std::vector<double> read_triples(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{kIo, "cannot open " + path};
  std::vector<double> out;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    for (char& c : line)
      if (c == ',') c = ' ';
    std::istringstream ls(line);
    double x, y, z;
    if (ls >> x >> y >> z) {
      out.insert(out.end(), {x, y, z});
    } else if (!first && line.find_first_not_of(" \t\r") != std::string::npos) {
      throw Failure{kIo, "malformed line in " + path + ": " + line};
    }
    first = false;
  }
  return out;
}

void write_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Failure{kIo, "cannot write " + tmp};
    out << text;
    if (!out.flush()) throw Failure{kIo, "write failed for " + tmp};
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw Failure{kIo, "cannot rename " + tmp + " to " + path};
}

std::string triples_csv(const char* header, const std::vector<double>& a, const std::vector<double>* b = nullptr) {
  std::ostringstream os;
  os.precision(17);
  os << header << '\n';
  for (std::size_t i = 0; i + 2 < a.size(); i += 3) {
    os << a[i] << ',' << a[i + 1] << ',' << a[i + 2];
    if (b) os << ',' << (*b)[i] << ',' << (*b)[i + 1] << ',' << (*b)[i + 2];
    os << '\n';
  }
  return os.str();
}

void print_stats(const rss_mesh* m) {
  rss_mesh_stats s;
  check(rss_mesh_get_stats(m, &s));
  double floor = 0;
  check(rss_mesh_epsilon_floor(m, &floor));
  std::printf("faces=%zu vertices=%zu dof=%zu h=%.6g eps_floor=%.3g\n", s.num_faces, s.num_vertices, s.dof, s.h,
              floor);
}

// Force densities on the fluid for the analytic surface tractions.
std::vector<double> analytic_forces(const std::string& kind, const std::vector<double>& v, const MeshOptions& mo,
                                    double mu) {
  std::vector<double> f(v.size());
  const double a = mo.radius;
  for (std::size_t i = 0; i < v.size(); i += 3) {
    const double x = v[i], y = v[i + 1], z = v[i + 2];
    if (kind == "sphere-translate") {
      f[i] = 1.5 * mu / a;
    } else if (kind == "sphere-rotate") {
      // -(3 mu / a) x cross z_hat = (3 mu / a) (-y, x, 0)
      f[i] = -3 * mu / a * y;
      f[i + 1] = 3 * mu / a * x;
    } else {
      const double A = mo.a, B = mo.b;
      const double e = std::sqrt(A * A - B * B) / A;
      const double beta0 = A * A * e * e / (2 * e / (1 - e * e) - std::log((1 + e) / (1 - e)));
      const double M = -(32.0 / 3.0) * M_PI * mu * A * e * beta0;
      double n[3] = {x / (B * B), y / (B * B), z / (A * A)};
      const double nn = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
      const double ndotx = (n[0] * x + n[1] * y + n[2] * z) / nn;
      const double c = 3 * ndotx / (8 * M_PI * A * std::pow(B, 4));
      // traction = c M z_hat x x; the fluid receives its negative
      f[i] = c * M * y;
      f[i + 1] = -c * M * x;
    }
  }
  return f;
}

int cmd_mesh(const MeshOptions& mo, const std::string& out) {
  MeshHandle m;
  mo.build(m);
  if (!out.empty()) check(rss_mesh_write(m.p, out.c_str()));
  print_stats(m.p);
  return kOk;
}

int cmd_eval(const MeshOptions& mo, const KernelOptions& ko, const std::string& traction,
             const std::string& forces_file, const std::vector<std::vector<double>>& point_list,
             const std::string& points_file, const std::string& out) {
  MeshHandle m;
  mo.build(m);
  const std::vector<double> v = vertices_of(m.p);
  std::vector<double> forces = forces_file.empty() ? analytic_forces(traction, v, mo, ko.mu) : read_triples(forces_file);
  if (forces.size() != v.size()) throw Failure{kUsage, "force file needs one triple per mesh vertex"};
  std::vector<double> pts;
  for (const auto& p : point_list) pts.insert(pts.end(), p.begin(), p.end());
  if (!points_file.empty()) {
    const auto more = read_triples(points_file);
    pts.insert(pts.end(), more.begin(), more.end());
  }
  if (pts.empty()) pts = v;
  std::vector<double> u(pts.size());
  check(rss_evaluate_velocity(m.p, forces.data(), pts.data(), pts.size() / 3, ko.params(), u.data()));
  if (!out.empty()) write_atomic(out, triples_csv("x,y,z,ux,uy,uz", pts, &u));
  for (std::size_t i = 0; i < pts.size(); i += 3) {
    std::printf("x=(%.6g,%.6g,%.6g) u=(%.10g,%.10g,%.10g)\n", pts[i], pts[i + 1], pts[i + 2], u[i], u[i + 1],
                u[i + 2]);
    if (point_list.size() > 4 && i >= 9 && out.empty()) {
      std::printf("... %zu points total\n", pts.size() / 3);
      break;
    }
  }
  return kOk;
}

int cmd_solve(const MeshOptions& mo, const KernelOptions& ko, const std::string& problem,
              const std::string& velocity_file, const std::string& forces_out) {
  MeshHandle m;
  mo.build(m);
  const std::vector<double> v = vertices_of(m.p);
  std::vector<double> f(v.size());
  const double center[3] = {0, 0, 0};
  if (problem == "squirmer") {
    std::vector<double> slip(v.size());
    for (std::size_t i = 0; i < v.size(); i += 3) {
      const double r = std::sqrt(v[i] * v[i] + v[i + 1] * v[i + 1] + v[i + 2] * v[i + 2]);
      const double th = std::acos(std::fmax(-1.0, std::fmin(1.0, v[i + 2] / r)));
      const double ph = std::atan2(v[i + 1], v[i]);
      const double s = 1.5 * std::sin(th);
      slip[i] = s * std::cos(th) * std::cos(ph);
      slip[i + 1] = s * std::cos(th) * std::sin(ph);
      slip[i + 2] = -s * std::sin(th);
    }
    double U[3], W[3];
    check(rss_solve_swimmer(m.p, slip.data(), center, ko.params(), f.data(), U, W));
    std::printf("U=(%.10g,%.10g,%.10g) Omega=(%.10g,%.10g,%.10g) Uz_error=%.3e\n", U[0], U[1], U[2], W[0], W[1],
                W[2], std::fabs(U[2] - 1.0));
  } else {
    std::vector<double> bc(v.size());
    if (!velocity_file.empty()) {
      bc = read_triples(velocity_file);
      if (bc.size() != v.size()) throw Failure{kUsage, "velocity file needs one triple per mesh vertex"};
    } else {
      for (std::size_t i = 0; i < v.size(); i += 3) {
        if (problem == "translate") {
          bc[i] = 1.0;
        } else {
          bc[i] = -v[i + 1];
          bc[i + 1] = v[i];
        }
      }
    }
    check(rss_solve_resistance(m.p, bc.data(), ko.params(), f.data()));
    double F[3], M[3];
    check(rss_net_force(m.p, f.data(), F));
    check(rss_net_torque(m.p, f.data(), center, M));
    // Forces on the body are the negatives of those applied to the fluid.
    std::printf("drag=(%.10g,%.10g,%.10g) torque=(%.10g,%.10g,%.10g)\n", -F[0], -F[1], -F[2], -M[0], -M[1], -M[2]);
  }
  if (!forces_out.empty()) write_atomic(forces_out, triples_csv("fx,fy,fz", f));
  return kOk;
}

struct StudyOptions {
  std::string id;
  std::vector<int> f;
  std::vector<double> eps;
  std::vector<double> gradings, h_cube, eps_over_h;
  int condition_max_f = -1;
  double mu = 1.0;
  int n_terms = 50;
  std::string out, json, field_out, field_points;
};

int cmd_study(const StudyOptions& so) {
  ParamsHandle p;
  check(rss_study_params_new(so.id.c_str(), &p.p));
  if (!so.f.empty()) check(rss_study_params_set_f(p.p, so.f.data(), so.f.size()));
  if (!so.eps.empty()) check(rss_study_params_set_eps(p.p, so.eps.data(), so.eps.size()));
  if (!so.gradings.empty()) check(rss_study_params_set_list(p.p, "gradings", so.gradings.data(), so.gradings.size()));
  if (!so.h_cube.empty()) check(rss_study_params_set_list(p.p, "h_cube", so.h_cube.data(), so.h_cube.size()));
  if (!so.eps_over_h.empty())
    check(rss_study_params_set_list(p.p, "eps_over_h", so.eps_over_h.data(), so.eps_over_h.size()));
  if (so.condition_max_f >= 0) check(rss_study_params_set(p.p, "condition_max_f", so.condition_max_f));
  check(rss_study_params_set(p.p, "mu", so.mu));
  check(rss_study_params_set(p.p, "n_terms", so.n_terms));
  if (!so.field_points.empty()) {
    const auto pts = read_triples(so.field_points);
    check(rss_study_params_set_field_points(p.p, pts.data(), pts.size() / 3));
  }
  ReportHandle r;
  check(rss_run_study(so.id.c_str(), p.p, &r.p));
  for (std::size_t i = 0; i < rss_report_num_rows(r.p); ++i) {
    rss_report_row row;
    check(rss_report_get_row(r.p, i, &row));
    std::printf("%s faces=%zu dof=%zu h=%.4g eps=%.3g %s=%.6g", rss_report_experiment(r.p), row.num_faces, row.dof,
                row.h, row.eps, row.metric, row.value);
    for (std::size_t k = 0; k < row.num_extras; ++k) {
      const char* key;
      double val;
      check(rss_report_get_extra(r.p, i, k, &key, &val));
      std::printf(" %s=%.6g", key, val);
    }
    if (row.error) std::printf(" error=\"%s\"", row.error);
    std::printf("\n");
  }
  for (std::size_t k = 0; k < rss_report_num_summary(r.p); ++k) {
    const char* key;
    double val;
    check(rss_report_get_summary(r.p, k, &key, &val));
    std::printf("summary %s=%.6g\n", key, val);
  }
  if (!so.out.empty()) check(rss_report_write_csv(r.p, so.out.c_str()));
  if (!so.json.empty()) check(rss_report_write_json(r.p, so.json.c_str()));
  if (!so.field_out.empty()) check(rss_report_write_field_csv(r.p, so.field_out.c_str()));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regularized Stokeslet surfaces: meshes, kernel evaluation, solves and studies"};
  app.require_subcommand(1);
  int threads = 0;
  if (const char* env = std::getenv("RSS_NUM_THREADS")) threads = std::atoi(env);
  app.add_option("--threads", threads, "Worker threads (default: RSS_NUM_THREADS or all cores)");

  MeshOptions mo;
  KernelOptions ko;
  std::string out;

  auto* mesh = app.add_subcommand("mesh", "Generate a mesh and write it in the indexed text format");
  mo.add(mesh);
  mesh->add_option("--out", out, "Output mesh file");

  auto* eval = app.add_subcommand("eval", "Velocity induced by a surface force density at given points");
  mo.add(eval);
  ko.add(eval);
  std::string traction = "sphere-translate", forces_file, points_file;
  std::vector<std::vector<double>> points;
  eval->add_option("--traction", traction, "sphere-translate | sphere-rotate | spheroid-rotate")
      ->check(CLI::IsMember({"sphere-translate", "sphere-rotate", "spheroid-rotate"}));
  eval->add_option("--forces", forces_file, "Per-vertex force densities on the fluid (x,y,z per line)");
  eval->add_option("--point", points, "Evaluation point x,y,z (repeatable)")->delimiter(',')->expected(3);
  eval->add_option("--points", points_file, "File of evaluation points");
  eval->add_option("--out", out, "Field CSV x,y,z,ux,uy,uz");

  auto* solve = app.add_subcommand("solve", "Resistance or swimmer solve on a mesh");
  mo.add(solve);
  ko.add(solve);
  std::string problem = "translate", velocity_file;
  solve->add_option("--problem", problem, "translate | rotate | squirmer")
      ->check(CLI::IsMember({"translate", "rotate", "squirmer"}));
  solve->add_option("--velocity", velocity_file, "Per-vertex boundary velocity file (overrides --problem)");
  solve->add_option("--forces-out", out, "Write solved force densities as CSV");

  auto* study = app.add_subcommand("study", "Run a validation study and write a CSV report");
  StudyOptions so;
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < rss_study_count(); ++i) ids.push_back(rss_study_id(i));
  study->add_option("--id", so.id, "Study id")->required()->check(CLI::IsMember(ids));
  study->add_option("--f", so.f, "Subdivision factors")->delimiter(',');
  study->add_option("--eps", so.eps, "Regularization values")->delimiter(',');
  study->add_option("--gradings", so.gradings, "Spheroid gradings")->delimiter(',');
  study->add_option("--h-cube", so.h_cube, "Cube grid spacings (pipe-leak)")->delimiter(',');
  study->add_option("--eps-over-h", so.eps_over_h, "eps / h_cube values (pipe-leak)")->delimiter(',');
  study->add_option("--condition-max-f", so.condition_max_f, "Largest f with condition numbers (linear-vs-constant)");
  study->add_option("--mu", so.mu, "Viscosity");
  study->add_option("--n-terms", so.n_terms, "Duct series terms")->check(CLI::PositiveNumber);
  study->add_option("--out", so.out, "CSV report path");
  study->add_option("--json", so.json, "JSON report path with extras and summary");
  study->add_option("--field-points", so.field_points, "Points to sample the velocity at");
  study->add_option("--field-out", so.field_out, "Field CSV path for the sampled points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  rss_set_num_threads(threads);

  try {
    if (*mesh) return cmd_mesh(mo, out);
    if (*eval) return cmd_eval(mo, ko, traction, forces_file, points, points_file, out);
    if (*solve) return cmd_solve(mo, ko, problem, velocity_file, out);
    if (*study) return cmd_study(so);
  } catch (const Failure& f) {
    std::fprintf(stderr, "error: %s\n", f.message.c_str());
    return f.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kInternal;
  }
  return kUsage;
}
