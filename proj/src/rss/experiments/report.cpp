#include "rss/experiments/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <json.hpp>
#include <numeric>
#include <sstream>

#include "rss/error.hpp"
#include "rss/geometry/mesh_io.hpp"

namespace rss {

double ReportRow::extra(const std::string& key) const {
  for (const auto& [k, v] : extras)
    if (k == key) return v;
  throw InvalidArgument("report row has no value '" + key + "'");
}

double ExperimentReport::summary_value(const std::string& key) const {
  for (const auto& [k, v] : summary)
    if (k == key) return v;
  throw InvalidArgument("report has no summary value '" + key + "'");
}

bool ExperimentReport::has_summary(const std::string& key) const {
  return std::any_of(summary.begin(), summary.end(), [&](const auto& kv) { return kv.first == key; });
}

double l2_error(const std::vector<double>& errors) {
  if (errors.empty()) throw InvalidArgument("l2_error of an empty list");
  double s = 0.0;
  for (double e : errors) s += e * e;
  return std::sqrt(s / static_cast<double>(errors.size()));
}

PowerLawFit fit_power_law(const std::vector<double>& x, const std::vector<double>& y, bool exclude_plateau) {
  if (x.size() != y.size()) throw InvalidArgument("fit inputs differ in length");
  std::vector<std::size_t> order(x.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return x[i] > x[j]; });

  PowerLawFit fit;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t i = order[k];
    if (!(x[i] > 0) || !(y[i] > 0) || !std::isfinite(y[i])) {
      fit.plateau.push_back(i);
      continue;
    }
    if (exclude_plateau && k > 0) {
      const double prev = y[order[k - 1]];
      if (std::fabs(y[i] - prev) < 0.05 * prev) {
        fit.plateau.push_back(i);
        continue;
      }
    }
    fit.used.push_back(i);
  }
  if (fit.used.size() < 2) throw InvalidArgument("power-law fit needs at least two usable points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i : fit.used) {
    const double lx = std::log(x[i]), ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double n = static_cast<double>(fit.used.size());
  const double den = n * sxx - sx * sx;
  if (!(std::fabs(den) > 0)) throw InvalidArgument("power-law fit needs distinct x values");
  fit.exponent = (n * sxy - sx * sy) / den;
  fit.prefactor = std::exp((sy - fit.exponent * sx) / n);
  return fit;
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

std::string report_csv(const ExperimentReport& r) {
  std::ostringstream os;
  os << "experiment,num_faces,dof,h,eps,metric,value\n";
  for (const ReportRow& row : r.rows) {
    os << r.experiment << ',' << row.num_faces << ',' << row.dof << ',' << num(row.h) << ',' << num(row.eps) << ','
       << row.metric << ',' << num(row.value) << '\n';
  }
  return os.str();
}

std::string field_csv(const std::vector<FieldSample>& field) {
  std::ostringstream os;
  os << "x,y,z,ux,uy,uz\n";
  for (const FieldSample& s : field) {
    os << num(s.x.x) << ',' << num(s.x.y) << ',' << num(s.x.z) << ',' << num(s.u.x) << ',' << num(s.u.y) << ','
       << num(s.u.z) << '\n';
  }
  return os.str();
}

std::string report_json(const ExperimentReport& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["experiment"] = r.experiment;
  j["timestamp"] = r.timestamp;
  j["parameters"] = r.parameters;
  auto finite_or_null = [](double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); };
  ordered_json rows = ordered_json::array();
  for (const ReportRow& row : r.rows) {
    ordered_json o;
    o["num_faces"] = row.num_faces;
    o["dof"] = row.dof;
    o["h"] = row.h;
    o["eps"] = row.eps;
    o["metric"] = row.metric;
    o["value"] = finite_or_null(row.value);
    ordered_json ex = ordered_json::object();
    for (const auto& [k, v] : row.extras) ex[k] = finite_or_null(v);
    o["extras"] = ex;
    if (row.error) o["error"] = *row.error;
    rows.push_back(o);
  }
  j["rows"] = rows;
  ordered_json summary = ordered_json::object();
  for (const auto& [k, v] : r.summary) summary[k] = finite_or_null(v);
  j["summary"] = summary;
  return j.dump(2) + "\n";
}

void write_report_csv(const std::string& path, const ExperimentReport& r) { write_file_atomic(path, report_csv(r)); }
void write_field_csv(const std::string& path, const std::vector<FieldSample>& f) {
  write_file_atomic(path, field_csv(f));
}
void write_report_json(const std::string& path, const ExperimentReport& r) { write_file_atomic(path, report_json(r)); }

}  // namespace rss
