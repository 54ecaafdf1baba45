// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cobb/codecs.hpp"
#include "cobb/geometry.hpp"

namespace cobb {

struct DotaRecord {
  std::array<Point2, 4> quad;  // canonical vertex order
  std::string category;
  int difficulty = 0;
};

// "x1 y1 x2 y2 x3 y3 x4 y4 category difficulty"
DotaRecord parse_dota_line(std::string_view line, std::size_t line_no = 0);

// Header lines such as "imagesource:..." or "gsd:...", and blank lines.
bool is_dota_metadata(std::string_view line);

struct SkippedLine {
  std::size_t line = 0;
  std::string reason;
};

struct ConvertSummary {
  std::size_t rows = 0;
  std::vector<SkippedLine> skipped;
};

ConvertSummary convert_annotations(const std::filesystem::path& input, const Codec& codec,
                                   const std::filesystem::path& output);

}  // namespace cobb
