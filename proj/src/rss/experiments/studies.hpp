#pragma once

#include <string>
#include <vector>

#include "rss/experiments/report.hpp"

namespace rss {

inline const std::vector<std::string>& study_ids() {
  static const std::vector<std::string> ids{"forward-translate", "forward-rotate",     "resistance-drag",
                                            "resistance-torque", "forward-spheroid",   "squirmer",
                                            "pipe-leak",         "linear-vs-constant", "mrs-comparison"};
  return ids;
}

struct StudyParams {
  /// Icosphere subdivision factors. Empty selects the study's default.
  std::vector<int> f_values;
  /// Regularization values. Empty selects the study's default grid, with
  /// values at or below the floating-point floor dropped; explicit values
  /// below the floor raise FloatingFloorError.
  std::vector<double> eps_values;
  double mu = 1.0;
  double radius = 1.0;

  // forward-spheroid
  double spheroid_a = 3.0;
  double spheroid_b = 1.0;
  std::vector<double> gradings{0.0};

  // squirmer
  double B1 = 1.5;

  // pipe-leak. eps = eps_over_h * h_cube.
  std::vector<double> h_cube{0.1, 0.05, 1.0 / 30.0};
  std::vector<double> eps_over_h{1.0, 0.5, 0.2, 0.1, 0.05, 0.02, 0.01};
  double h_pipe = 0.2;
  double pipe_half_length = 2.5;
  double pipe_half_width = 1.0;
  double cube_half_side = 0.25;
  double pressure_drop = 1.0;
  int n_terms = 50;

  // linear-vs-constant: condition numbers for f up to this value.
  int condition_max_f = 4;

  /// When non-empty, the velocity at these points is sampled for the last
  /// mesh and first eps of the study and stored in the report field.
  std::vector<Vec3> field_points;
};

/// Default grids for each study.
StudyParams default_study_params(const std::string& id);

/// Default regularization grid before floor filtering.
std::vector<double> default_eps_grid();
std::vector<double> default_mrs_eps_grid();

/// Runs one study. Per-row solver failures are recorded in the row; invalid
/// parameters and floor violations throw.
ExperimentReport run_study(const std::string& id, const StudyParams& params);

}  // namespace rss
