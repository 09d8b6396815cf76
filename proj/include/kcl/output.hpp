#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "kcl/curve.hpp"
#include "kcl/metrics.hpp"
#include "kcl/potential.hpp"

namespace kcl::harness {

using nlohmann::json;

// t,statistic,value,stderr,n_replicas
void write_curve_csv(const std::string& path, const DecayCurve& c);
void write_curves_csv(const std::string& path, const std::vector<DecayCurve>& cs);
DecayCurve read_curve_csv(const std::string& path);

json to_json(const metrics::RateFit& f);
json to_json(const potential::CertificateReport& r);
json to_json(const metrics::LinearFit& f);

void write_json(const std::string& path, const json& j);
json read_json(const std::string& path);
void write_text(const std::string& path, const std::string& text);

struct Series {
  std::string label;
  std::vector<double> x, y;
};
// Static SVG line plot; log_y drops nonpositive values.
void write_svg_plot(const std::string& path, const std::string& title, const std::string& xlabel,
                    const std::string& ylabel, const std::vector<Series>& series, bool log_x,
                    bool log_y);

// manifest.json: config echo, code version, seed, command line.
void write_manifest(const std::string& dir, const std::string& config_text, std::uint64_t seed,
                    const std::string& command);

}  // namespace kcl::harness
