// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "cobb/codecs.hpp"

namespace cobb {

enum class Sweep { rotation, aspect };

// Rotation sweeps theta over [lo, hi); aspect sweeps the ratio applied to
// the first side over [lo, hi] inclusive.
struct CurveSpec {
  Sweep sweep = Sweep::rotation;
  double w_side = 4.0;
  double h_side = 2.0;
  double theta = 0.0;
  std::size_t points = 720;
  double lo = 0.0;
  double hi = 2.0 * kPi;

  static CurveSpec rotation(double w, double h, std::size_t points = 720);
  static CurveSpec aspect(double w, double h, double theta, double lo, double hi, std::size_t points);
  void validate() const;
};

struct CurveTable {
  std::vector<std::string> columns;  // sweep variable first
  std::vector<std::vector<double>> rows;

  std::vector<double> column(std::size_t i) const;
  std::vector<double> column(const std::string& name) const;
};

CurveTable compute_curves(const Codec& codec, const CurveSpec& spec);
void emit_curves(const Codec& codec, const CurveSpec& spec, const std::filesystem::path& out);
std::string curves_to_csv(const CurveTable& t);

// Indices i where |y[i+1] - y[i]| exceeds lipschitz * |x[i+1] - x[i]|.
std::vector<std::size_t> find_jumps(std::span<const double> x, std::span<const double> y, double lipschitz);

}  // namespace cobb
