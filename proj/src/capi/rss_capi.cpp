#include <rss/rss.h>

#include <exception>
#include <new>
#include <string>
#include <vector>

#include "rss/error.hpp"
#include "rss/experiments/studies.hpp"
#include "rss/geometry/mesh_io.hpp"
#include "rss/kernel/triangle_velocity.hpp"
#include "rss/solver/parallel.hpp"
#include "rss/solver/solver.hpp"

struct rss_mesh {
  rss::TriMesh mesh;
};

struct rss_report {
  rss::ExperimentReport report;
};

struct rss_study_params {
  std::string id;
  rss::StudyParams params;
};

namespace {

thread_local std::string g_last_error;

template <class F>
rss_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return RSS_OK;
  } catch (const rss::DegenerateTriangleError& e) {
    g_last_error = e.what();
    return RSS_ERR_DEGENERATE;
  } catch (const rss::InvalidArgument& e) {
    g_last_error = e.what();
    return RSS_ERR_INVALID_ARGUMENT;
  } catch (const rss::FloatingFloorError& e) {
    g_last_error = e.what();
    return RSS_ERR_FLOOR;
  } catch (const rss::SingularSystemError& e) {
    g_last_error = e.what();
    return RSS_ERR_SINGULAR;
  } catch (const rss::IoError& e) {
    g_last_error = e.what();
    return RSS_ERR_IO;
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return RSS_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return RSS_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return RSS_ERR_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw rss::InvalidArgument(what);
}

rss::Vec3 v3(const double* p) { return {p[0], p[1], p[2]}; }

void put(const rss::Vec3& v, double* out) {
  out[0] = v.x;
  out[1] = v.y;
  out[2] = v.z;
}

std::vector<rss::Vec3> field(const double* data, std::size_t n) {
  std::vector<rss::Vec3> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = v3(data + 3 * i);
  return out;
}

void put_field(const std::vector<rss::Vec3>& f, double* out) {
  for (std::size_t i = 0; i < f.size(); ++i) put(f[i], out + 3 * i);
}

rss::KernelParams kernel(rss_kernel_params p) {
  rss::KernelParams k{p.eps, p.mu};
  k.validate();
  return k;
}

}  // namespace

extern "C" {

const char* rss_version(void) { return "1.0.0"; }
const char* rss_last_error(void) { return g_last_error.c_str(); }

const char* rss_status_name(rss_status s) {
  switch (s) {
    case RSS_OK: return "ok";
    case RSS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RSS_ERR_DEGENERATE: return "degenerate triangle";
    case RSS_ERR_FLOOR: return "eps below floating-point floor";
    case RSS_ERR_SINGULAR: return "singular system";
    case RSS_ERR_IO: return "i/o error";
    case RSS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void rss_set_num_threads(int n) { rss::set_num_threads(n); }
int rss_get_num_threads(void) { return rss::num_threads(); }

rss_status rss_mesh_icosphere(int f, double radius, rss_mesh** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = new rss_mesh{rss::make_icosphere(f, radius)};
  });
}

rss_status rss_mesh_spheroid(int f, double a, double b, double grading, rss_mesh** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = new rss_mesh{rss::make_spheroid_mesh(f, a, b, grading)};
  });
}

rss_status rss_mesh_box(const double center[3], double half_side, double grid_h, rss_mesh** out) {
  return guarded([&] {
    require(out != nullptr && center != nullptr, "null pointer argument");
    *out = new rss_mesh{rss::make_box_mesh(v3(center), half_side, grid_h)};
  });
}

rss_status rss_mesh_pipe(double half_length, double a, double b, double grid_h, rss_mesh** out) {
  return guarded([&] {
    require(out != nullptr, "output pointer is null");
    *out = new rss_mesh{rss::make_pipe_mesh(half_length, a, b, grid_h)};
  });
}

rss_status rss_mesh_from_arrays(const double* vertices, size_t nv, const int* faces, size_t nf, rss_mesh** out) {
  return guarded([&] {
    require(out != nullptr && vertices != nullptr && faces != nullptr, "null pointer argument");
    std::vector<rss::Face> fs(nf);
    for (size_t i = 0; i < nf; ++i) fs[i] = {faces[3 * i], faces[3 * i + 1], faces[3 * i + 2]};
    *out = new rss_mesh{rss::TriMesh(field(vertices, nv), std::move(fs))};
  });
}

rss_status rss_mesh_read(const char* path, rss_mesh** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "null pointer argument");
    *out = new rss_mesh{rss::read_mesh_file(path)};
  });
}

rss_status rss_mesh_write(const rss_mesh* mesh, const char* path) {
  return guarded([&] {
    require(mesh != nullptr && path != nullptr, "null pointer argument");
    rss::write_mesh_file(path, mesh->mesh);
  });
}

void rss_mesh_free(rss_mesh* mesh) { delete mesh; }

size_t rss_mesh_num_vertices(const rss_mesh* mesh) { return mesh ? mesh->mesh.num_vertices() : 0; }
size_t rss_mesh_num_faces(const rss_mesh* mesh) { return mesh ? mesh->mesh.num_faces() : 0; }

rss_status rss_mesh_vertices(const rss_mesh* mesh, double* out) {
  return guarded([&] {
    require(mesh != nullptr && out != nullptr, "null pointer argument");
    const auto v = mesh->mesh.vertices();
    put_field({v.begin(), v.end()}, out);
  });
}

rss_status rss_mesh_faces(const rss_mesh* mesh, int* out) {
  return guarded([&] {
    require(mesh != nullptr && out != nullptr, "null pointer argument");
    std::size_t k = 0;
    for (const rss::Face& f : mesh->mesh.faces())
      for (int i : f) out[k++] = i;
  });
}

rss_status rss_mesh_get_stats(const rss_mesh* mesh, rss_mesh_stats* out) {
  return guarded([&] {
    require(mesh != nullptr && out != nullptr, "null pointer argument");
    const rss::MeshStats s = rss::mesh_stats(mesh->mesh);
    *out = {s.num_faces, s.num_vertices, s.dof, s.h};
  });
}

rss_status rss_mesh_epsilon_floor(const rss_mesh* mesh, double* out) {
  return guarded([&] {
    require(mesh != nullptr && out != nullptr, "null pointer argument");
    require(!mesh->mesh.empty(), "mesh has no faces");
    *out = rss::epsilon_floor(mesh->mesh);
  });
}

rss_status rss_point_stokeslet(const double x[3], const double y[3], double eps, double out[9]) {
  return guarded([&] {
    require(x != nullptr && y != nullptr && out != nullptr, "null pointer argument");
    require(eps > 0, "eps must be positive");
    const rss::Mat3 S = rss::point_stokeslet(v3(x), v3(y), eps);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) out[3 * i + j] = S[i][j];
  });
}

rss_status rss_triangle_velocity(const double y0[3], const double y1[3], const double y2[3], const double f0[3],
                                 const double f1[3], const double f2[3], const double xf[3], rss_kernel_params params,
                                 double out[3]) {
  return guarded([&] {
    require(y0 && y1 && y2 && f0 && f1 && f2 && xf && out, "null pointer argument");
    const rss::TriangleFrame t = rss::TriangleFrame::from_vertices(v3(y0), v3(y1), v3(y2));
    put(rss::triangle_velocity(v3(xf), t, v3(f0), v3(f1), v3(f2), kernel(params)), out);
  });
}

rss_status rss_evaluate_velocity(const rss_mesh* mesh, const double* forces, const double* points, size_t np,
                                 rss_kernel_params params, double* out) {
  return guarded([&] {
    require(mesh && forces && (points || np == 0) && (out || np == 0), "null pointer argument");
    put_field(rss::evaluate_velocity(mesh->mesh, field(forces, mesh->mesh.num_vertices()), field(points, np),
                                     kernel(params)),
              out);
  });
}

rss_status rss_solve_resistance(const rss_mesh* mesh, const double* velocity, rss_kernel_params params,
                                double* forces_out) {
  return guarded([&] {
    require(mesh && velocity && forces_out, "null pointer argument");
    put_field(rss::solve_resistance(mesh->mesh, field(velocity, mesh->mesh.num_vertices()), kernel(params)),
              forces_out);
  });
}

rss_status rss_solve_swimmer(const rss_mesh* mesh, const double* slip, const double center[3],
                             rss_kernel_params params, double* forces_out, double U_out[3], double Omega_out[3]) {
  return guarded([&] {
    require(mesh && slip && center && forces_out && U_out && Omega_out, "null pointer argument");
    const rss::SwimmerSolution s =
        rss::solve_swimmer(mesh->mesh, field(slip, mesh->mesh.num_vertices()), v3(center), kernel(params));
    put_field(s.forces, forces_out);
    put(s.U, U_out);
    put(s.Omega, Omega_out);
  });
}

rss_status rss_net_force(const rss_mesh* mesh, const double* forces, double out[3]) {
  return guarded([&] {
    require(mesh && forces && out, "null pointer argument");
    put(rss::mesh_net_force(mesh->mesh, field(forces, mesh->mesh.num_vertices())), out);
  });
}

rss_status rss_net_torque(const rss_mesh* mesh, const double* forces, const double center[3], double out[3]) {
  return guarded([&] {
    require(mesh && forces && center && out, "null pointer argument");
    put(rss::mesh_net_torque(mesh->mesh, field(forces, mesh->mesh.num_vertices()), v3(center)), out);
  });
}

rss_status rss_resistance_condition_number(const rss_mesh* mesh, rss_kernel_params params, double* out) {
  return guarded([&] {
    require(mesh && out, "null pointer argument");
    *out = rss::condition_number(rss::assemble_resistance(mesh->mesh, kernel(params)));
  });
}

size_t rss_study_count(void) { return rss::study_ids().size(); }

const char* rss_study_id(size_t index) {
  return index < rss::study_ids().size() ? rss::study_ids()[index].c_str() : nullptr;
}

rss_status rss_study_params_new(const char* id, rss_study_params** out) {
  return guarded([&] {
    require(id && out, "null pointer argument");
    *out = new rss_study_params{id, rss::default_study_params(id)};
  });
}

void rss_study_params_free(rss_study_params* p) { delete p; }

rss_status rss_study_params_set_f(rss_study_params* p, const int* values, size_t n) {
  return guarded([&] {
    require(p && (values || n == 0), "null pointer argument");
    p->params.f_values.assign(values, values + n);
  });
}

rss_status rss_study_params_set_eps(rss_study_params* p, const double* values, size_t n) {
  return guarded([&] {
    require(p && (values || n == 0), "null pointer argument");
    p->params.eps_values.assign(values, values + n);
  });
}

rss_status rss_study_params_set(rss_study_params* p, const char* key, double value) {
  return guarded([&] {
    require(p && key, "null pointer argument");
    rss::StudyParams& s = p->params;
    const std::string k = key;
    if (k == "mu") s.mu = value;
    else if (k == "radius") s.radius = value;
    else if (k == "spheroid_a") s.spheroid_a = value;
    else if (k == "spheroid_b") s.spheroid_b = value;
    else if (k == "B1") s.B1 = value;
    else if (k == "h_pipe") s.h_pipe = value;
    else if (k == "pipe_half_length") s.pipe_half_length = value;
    else if (k == "pipe_half_width") s.pipe_half_width = value;
    else if (k == "cube_half_side") s.cube_half_side = value;
    else if (k == "pressure_drop") s.pressure_drop = value;
    else if (k == "n_terms") s.n_terms = static_cast<int>(value);
    else if (k == "condition_max_f") s.condition_max_f = static_cast<int>(value);
    else throw rss::InvalidArgument("unknown study parameter '" + k + "'");
  });
}

rss_status rss_study_params_set_list(rss_study_params* p, const char* key, const double* values, size_t n) {
  return guarded([&] {
    require(p && key && (values || n == 0), "null pointer argument");
    const std::string k = key;
    std::vector<double> v(values, values + n);
    if (k == "gradings") p->params.gradings = std::move(v);
    else if (k == "h_cube") p->params.h_cube = std::move(v);
    else if (k == "eps_over_h") p->params.eps_over_h = std::move(v);
    else throw rss::InvalidArgument("unknown study list '" + k + "'");
  });
}

rss_status rss_study_params_set_field_points(rss_study_params* p, const double* points, size_t n) {
  return guarded([&] {
    require(p && (points || n == 0), "null pointer argument");
    p->params.field_points = field(points, n);
  });
}

rss_status rss_run_study(const char* id, const rss_study_params* p, rss_report** out) {
  return guarded([&] {
    require(id && out, "null pointer argument");
    const rss::StudyParams params = p ? p->params : rss::default_study_params(id);
    *out = new rss_report{rss::run_study(id, params)};
  });
}

void rss_report_free(rss_report* r) { delete r; }

const char* rss_report_experiment(const rss_report* r) { return r ? r->report.experiment.c_str() : ""; }
size_t rss_report_num_rows(const rss_report* r) { return r ? r->report.rows.size() : 0; }

rss_status rss_report_get_row(const rss_report* r, size_t i, rss_report_row* out) {
  return guarded([&] {
    require(r && out, "null pointer argument");
    require(i < r->report.rows.size(), "row index out of range");
    const rss::ReportRow& row = r->report.rows[i];
    *out = {row.num_faces,    row.dof,   row.h, row.eps, row.metric.c_str(), row.value, row.extras.size(),
            row.error ? row.error->c_str() : nullptr};
  });
}

rss_status rss_report_get_extra(const rss_report* r, size_t row, size_t i, const char** key, double* value) {
  return guarded([&] {
    require(r && key && value, "null pointer argument");
    require(row < r->report.rows.size() && i < r->report.rows[row].extras.size(), "index out of range");
    const auto& kv = r->report.rows[row].extras[i];
    *key = kv.first.c_str();
    *value = kv.second;
  });
}

size_t rss_report_num_summary(const rss_report* r) { return r ? r->report.summary.size() : 0; }

rss_status rss_report_get_summary(const rss_report* r, size_t i, const char** key, double* value) {
  return guarded([&] {
    require(r && key && value, "null pointer argument");
    require(i < r->report.summary.size(), "index out of range");
    *key = r->report.summary[i].first.c_str();
    *value = r->report.summary[i].second;
  });
}

size_t rss_report_num_field(const rss_report* r) { return r ? r->report.field.size() : 0; }

rss_status rss_report_get_field(const rss_report* r, double* points_out, double* velocity_out) {
  return guarded([&] {
    require(r && points_out && velocity_out, "null pointer argument");
    for (std::size_t i = 0; i < r->report.field.size(); ++i) {
      put(r->report.field[i].x, points_out + 3 * i);
      put(r->report.field[i].u, velocity_out + 3 * i);
    }
  });
}

rss_status rss_report_write_csv(const rss_report* r, const char* path) {
  return guarded([&] {
    require(r && path, "null pointer argument");
    rss::write_report_csv(path, r->report);
  });
}

rss_status rss_report_write_json(const rss_report* r, const char* path) {
  return guarded([&] {
    require(r && path, "null pointer argument");
    rss::write_report_json(path, r->report);
  });
}

rss_status rss_report_write_field_csv(const rss_report* r, const char* path) {
  return guarded([&] {
    require(r && path, "null pointer argument");
    rss::write_field_csv(path, r->report.field);
  });
}

}  // extern "C"
