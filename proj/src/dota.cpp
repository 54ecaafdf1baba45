// SPDX-License-Identifier: Apache-2.0
#include "cobb/dota.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "cobb/errors.hpp"
#include "cobb/report.hpp"

namespace cobb {

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f'; };
  while (i < s.size()) {
    while (i < s.size() && space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_coord(std::string_view tok, std::size_t line_no) {
  double v = 0.0;
  const char* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || p != end || !std::isfinite(v))
    throw ParseError("bad coordinate '" + std::string(tok) + "'", line_no);
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

DotaRecord parse_dota_line(std::string_view line, std::size_t line_no) {
  const std::vector<std::string_view> tok = split_ws(line);
  if (tok.size() != 10)
    throw ParseError("expected 10 fields, found " + std::to_string(tok.size()), line_no);
  std::array<Point2, 4> q;
  for (std::size_t i = 0; i < 4; ++i) q[i] = {parse_coord(tok[2 * i], line_no), parse_coord(tok[2 * i + 1], line_no)};
  DotaRecord r;
  r.quad = canonical_order(q);
  r.category = std::string(tok[8]);
  const char* end = tok[9].data() + tok[9].size();
  auto [p, ec] = std::from_chars(tok[9].data(), end, r.difficulty);
  if (ec != std::errc() || p != end) throw ParseError("bad difficulty '" + std::string(tok[9]) + "'", line_no);
  return r;
}

bool is_dota_metadata(std::string_view line) {
  const std::vector<std::string_view> tok = split_ws(line);
  if (tok.empty()) return true;
  return tok[0].starts_with("imagesource") || tok[0].starts_with("gsd");
}

ConvertSummary convert_annotations(const std::filesystem::path& input, const Codec& codec,
                                   const std::filesystem::path& output) {
  std::ifstream in(input);
  if (!in) throw IoError("cannot read " + input.string());
  std::ostringstream body;
  body << "category,difficulty";
  for (const std::string& c : codec.descriptor().components) body << ',' << c;
  body << '\n';

  ConvertSummary summary;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (is_dota_metadata(line)) continue;
    try {
      const DotaRecord r = parse_dota_line(line, n);
      const Encoding e = codec.encode(min_area_rect(std::span<const Point2>(r.quad)));
      body << csv_field(r.category) << ',' << r.difficulty;
      for (double v : e.values) body << ',' << format_double(v);
      body << '\n';
      ++summary.rows;
    } catch (const std::exception& ex) {
      summary.skipped.push_back({n, ex.what()});
    }
  }
  if (in.bad()) throw IoError("error while reading " + input.string());

  std::ofstream out(output, std::ios::binary);
  if (!out) throw IoError("cannot write " + output.string());
  out << body.str();
  if (!out) throw IoError("error while writing " + output.string());
  return summary;
}

}  // namespace cobb
