/* C interface to the regularized Stokeslet surface library.
 *
 * Every function that can fail returns an rss_status. On failure a message is
 * available from rss_last_error() on the calling thread until the next call.
 * Vector data is passed as packed xyz triples of doubles; faces as packed
 * 0-based index triples. Force densities are the force per unit area the
 * surface exerts on the fluid.
 */
#ifndef RSS_RSS_H
#define RSS_RSS_H

#include <stddef.h>

#if defined(RSS_BUILDING_LIBRARY)
#define RSS_API __attribute__((visibility("default")))
#else
#define RSS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rss_status {
  RSS_OK = 0,
  RSS_ERR_INVALID_ARGUMENT = 1,
  RSS_ERR_DEGENERATE = 2,
  RSS_ERR_FLOOR = 3,
  RSS_ERR_SINGULAR = 4,
  RSS_ERR_IO = 5,
  RSS_ERR_INTERNAL = 6
} rss_status;

typedef struct rss_mesh rss_mesh;
typedef struct rss_report rss_report;
typedef struct rss_study_params rss_study_params;

typedef struct rss_kernel_params {
  double eps;
  double mu;
} rss_kernel_params;

typedef struct rss_mesh_stats {
  size_t num_faces;
  size_t num_vertices;
  size_t dof;
  double h;
} rss_mesh_stats;

typedef struct rss_report_row {
  size_t num_faces;
  size_t dof;
  double h;
  double eps;
  const char* metric;
  double value;
  size_t num_extras;
  const char* error; /* NULL unless the row's solve failed */
} rss_report_row;

RSS_API const char* rss_version(void);
RSS_API const char* rss_last_error(void);
RSS_API const char* rss_status_name(rss_status status);

RSS_API void rss_set_num_threads(int n);
RSS_API int rss_get_num_threads(void);

/* Meshes */
RSS_API rss_status rss_mesh_icosphere(int f, double radius, rss_mesh** out);
RSS_API rss_status rss_mesh_spheroid(int f, double a, double b, double grading, rss_mesh** out);
RSS_API rss_status rss_mesh_box(const double center[3], double half_side, double grid_h, rss_mesh** out);
RSS_API rss_status rss_mesh_pipe(double half_length, double a, double b, double grid_h, rss_mesh** out);
RSS_API rss_status rss_mesh_from_arrays(const double* vertices, size_t num_vertices, const int* faces,
                                        size_t num_faces, rss_mesh** out);
RSS_API rss_status rss_mesh_read(const char* path, rss_mesh** out);
RSS_API rss_status rss_mesh_write(const rss_mesh* mesh, const char* path);
RSS_API void rss_mesh_free(rss_mesh* mesh);

RSS_API size_t rss_mesh_num_vertices(const rss_mesh* mesh);
RSS_API size_t rss_mesh_num_faces(const rss_mesh* mesh);
RSS_API rss_status rss_mesh_vertices(const rss_mesh* mesh, double* out);
RSS_API rss_status rss_mesh_faces(const rss_mesh* mesh, int* out);
RSS_API rss_status rss_mesh_get_stats(const rss_mesh* mesh, rss_mesh_stats* out);
RSS_API rss_status rss_mesh_epsilon_floor(const rss_mesh* mesh, double* out);

/* Kernel */
RSS_API rss_status rss_point_stokeslet(const double x[3], const double y[3], double eps, double out[9]);
RSS_API rss_status rss_triangle_velocity(const double y0[3], const double y1[3], const double y2[3],
                                         const double f0[3], const double f1[3], const double f2[3],
                                         const double xf[3], rss_kernel_params params, double out[3]);

/* Solvers. `forces` and `velocity` hold one triple per mesh vertex. */
RSS_API rss_status rss_evaluate_velocity(const rss_mesh* mesh, const double* forces, const double* points,
                                         size_t num_points, rss_kernel_params params, double* out);
RSS_API rss_status rss_solve_resistance(const rss_mesh* mesh, const double* velocity, rss_kernel_params params,
                                        double* forces_out);
RSS_API rss_status rss_solve_swimmer(const rss_mesh* mesh, const double* slip, const double center[3],
                                     rss_kernel_params params, double* forces_out, double U_out[3],
                                     double Omega_out[3]);
RSS_API rss_status rss_net_force(const rss_mesh* mesh, const double* forces, double out[3]);
RSS_API rss_status rss_net_torque(const rss_mesh* mesh, const double* forces, const double center[3],
                                  double out[3]);
RSS_API rss_status rss_resistance_condition_number(const rss_mesh* mesh, rss_kernel_params params, double* out);

/* Studies */
RSS_API size_t rss_study_count(void);
RSS_API const char* rss_study_id(size_t index);

/* Defaults for the given study id. */
RSS_API rss_status rss_study_params_new(const char* id, rss_study_params** out);
RSS_API void rss_study_params_free(rss_study_params* params);
RSS_API rss_status rss_study_params_set_f(rss_study_params* params, const int* values, size_t n);
RSS_API rss_status rss_study_params_set_eps(rss_study_params* params, const double* values, size_t n);
/* Scalars: "mu", "radius", "spheroid_a", "spheroid_b", "B1", "h_pipe", "pipe_half_length",
 * "pipe_half_width", "cube_half_side", "pressure_drop", "n_terms", "condition_max_f".
 * Lists: "gradings", "h_cube", "eps_over_h". */
RSS_API rss_status rss_study_params_set(rss_study_params* params, const char* key, double value);
RSS_API rss_status rss_study_params_set_list(rss_study_params* params, const char* key, const double* values,
                                             size_t n);
RSS_API rss_status rss_study_params_set_field_points(rss_study_params* params, const double* points, size_t n);

RSS_API rss_status rss_run_study(const char* id, const rss_study_params* params, rss_report** out);
RSS_API void rss_report_free(rss_report* report);
RSS_API const char* rss_report_experiment(const rss_report* report);
RSS_API size_t rss_report_num_rows(const rss_report* report);
/* Strings in `out` stay valid for the lifetime of the report. */
RSS_API rss_status rss_report_get_row(const rss_report* report, size_t index, rss_report_row* out);
RSS_API rss_status rss_report_get_extra(const rss_report* report, size_t row, size_t index, const char** key,
                                        double* value);
RSS_API size_t rss_report_num_summary(const rss_report* report);
RSS_API rss_status rss_report_get_summary(const rss_report* report, size_t index, const char** key, double* value);
RSS_API size_t rss_report_num_field(const rss_report* report);
RSS_API rss_status rss_report_get_field(const rss_report* report, double* points_out, double* velocity_out);
RSS_API rss_status rss_report_write_csv(const rss_report* report, const char* path);
RSS_API rss_status rss_report_write_json(const rss_report* report, const char* path);
RSS_API rss_status rss_report_write_field_csv(const rss_report* report, const char* path);

#ifdef __cplusplus
}
#endif

#endif
