// SPDX-License-Identifier: Apache-2.0
#include "cobb/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace cobb {

namespace {

using nlohmann::ordered_json;

ordered_json witness_json(const Witness& w) {
  ordered_json j;
  j["family"] = std::string(family_name(w.family));
  j["box"] = {{"cx", w.box.cx()},
              {"cy", w.box.cy()},
              {"w", w.box.w_side()},
              {"h", w.box.h_side()},
              {"theta", w.box.theta()}};
  j["delta"] = w.delta;
  j["gap"] = w.gap;
  if (!w.direction.empty()) j["direction"] = w.direction;
  return j;
}

ordered_json report_json(const MetricReport& r) {
  ordered_json j;
  j["codec"] = r.codec;
  j["seed"] = r.seed;
  j["norm"] = r.norm;
  ordered_json metrics = ordered_json::array();
  for (const MetricResult& m : r.metrics) {
    ordered_json mj;
    mj["name"] = std::string(metric_name(m.metric));
    ordered_json steps = ordered_json::array();
    for (const StepGap& s : m.steps) steps.push_back({{"delta", s.delta}, {"gap", s.gap}});
    mj["steps"] = steps;
    mj["verdict"] = m.pass ? "pass" : "fail";
    mj["witness"] = m.witness ? witness_json(*m.witness) : ordered_json(nullptr);
    metrics.push_back(mj);
  }
  j["metrics"] = metrics;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string reports_to_json(const std::vector<MetricReport>& reports) {
  if (reports.size() == 1) return report_json(reports.front()).dump(2) + "\n";
  ordered_json arr = ordered_json::array();
  for (const MetricReport& r : reports) arr.push_back(report_json(r));
  return arr.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<MetricReport>& reports) {
  std::ostringstream out;
  out << "codec,seed,metric,delta,gap,verdict,witness_family,witness_cx,witness_cy,witness_w,witness_h,"
         "witness_theta,witness_delta,witness_gap\n";
  for (const MetricReport& r : reports) {
    for (const MetricResult& m : r.metrics) {
      for (const StepGap& s : m.steps) {
        out << r.codec << ',' << r.seed << ',' << metric_name(m.metric) << ',' << format_double(s.delta) << ','
            << format_double(s.gap) << ',' << (m.pass ? "pass" : "fail");
        if (m.witness) {
          const Witness& w = *m.witness;
          out << ',' << family_name(w.family) << ',' << format_double(w.box.cx()) << ','
              << format_double(w.box.cy()) << ',' << format_double(w.box.w_side()) << ','
              << format_double(w.box.h_side()) << ',' << format_double(w.box.theta()) << ','
              << format_double(w.delta) << ',' << format_double(w.gap);
        } else {
          out << ",,,,,,,,";
        }
        out << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace cobb
