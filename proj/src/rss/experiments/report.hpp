#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rss/vec3.hpp"

namespace rss {

struct ReportRow {
  std::size_t num_faces = 0;
  std::size_t dof = 0;
  double h = 0.0;
  double eps = 0.0;
  std::string metric;
  double value = 0.0;
  /// Secondary quantities for the same run, in insertion order.
  std::vector<std::pair<std::string, double>> extras;
  /// Set when the solve for this row failed; value is then NaN.
  std::optional<std::string> error;

  double extra(const std::string& key) const;
};

struct FieldSample {
  Vec3 x;
  Vec3 u;
};

struct ExperimentReport {
  std::string experiment;
  std::map<std::string, std::string> parameters;
  std::string timestamp;
  std::vector<ReportRow> rows;
  /// Study-level results such as fitted slopes.
  std::vector<std::pair<std::string, double>> summary;
  std::vector<FieldSample> field;

  double summary_value(const std::string& key) const;
  bool has_summary(const std::string& key) const;
};

/// sqrt(mean(e_i^2)). Throws InvalidArgument on an empty list.
double l2_error(const std::vector<double>& errors);

struct PowerLawFit {
  double exponent = 0.0;
  double prefactor = 0.0;
  std::vector<std::size_t> used;     // indices into the input
  std::vector<std::size_t> plateau;  // excluded indices
};

/// Least-squares line through (log x, log y): y ~ prefactor * x^exponent.
/// With exclude_plateau, points are visited in order of decreasing x and a
/// point whose y changed by less than 5% from the previous one is left out.
PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y, bool exclude_plateau = false);

/// `experiment,num_faces,dof,h,eps,metric,value` rows.
std::string report_csv(const ExperimentReport& report);
/// `x,y,z,ux,uy,uz` rows.
std::string field_csv(const std::vector<FieldSample>& field);
/// Full report including extras, summary and parameters.
std::string report_json(const ExperimentReport& report);

void write_report_csv(const std::string& path, const ExperimentReport& report);
void write_field_csv(const std::string& path, const std::vector<FieldSample>& field);
void write_report_json(const std::string& path, const ExperimentReport& report);

}  // namespace rss
