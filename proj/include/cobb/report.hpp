// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "cobb/audit.hpp"

namespace cobb {

// Round-trippable decimal form (17 significant digits).
std::string format_double(double v);

// One report object, or an array of them when several codecs ran.
std::string reports_to_json(const std::vector<MetricReport>& reports);
std::string reports_to_csv(const std::vector<MetricReport>& reports);

}  // namespace cobb
