// SPDX-License-Identifier: Apache-2.0
#include "cobb/curves.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cobb/errors.hpp"
#include "cobb/report.hpp"

namespace cobb {

CurveSpec CurveSpec::rotation(double w, double h, std::size_t points) {
  CurveSpec s;
  s.sweep = Sweep::rotation;
  s.w_side = w;
  s.h_side = h;
  s.points = points;
  s.lo = 0.0;
  s.hi = 2.0 * kPi;
  return s;
}

CurveSpec CurveSpec::aspect(double w, double h, double theta, double lo, double hi, std::size_t points) {
  CurveSpec s;
  s.sweep = Sweep::aspect;
  s.w_side = w;
  s.h_side = h;
  s.theta = theta;
  s.lo = lo;
  s.hi = hi;
  s.points = points;
  return s;
}

void CurveSpec::validate() const {
  if (points < 2) throw InvalidArgument("a curve needs at least 2 points");
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(hi > lo)) throw InvalidArgument("sweep range must be increasing");
  if (!(w_side > 0.0) || !(h_side > 0.0) || !std::isfinite(w_side) || !std::isfinite(h_side))
    throw InvalidArgument("box sides must be positive");
  if (!std::isfinite(theta)) throw InvalidArgument("box angle must be finite");
  if (sweep == Sweep::aspect && !(lo > 0.0)) throw InvalidArgument("aspect ratios must be positive");
}

std::vector<double> CurveTable::column(std::size_t i) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.at(i));
  return out;
}

std::vector<double> CurveTable::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return column(i);
  throw InvalidArgument("no column named " + name);
}

CurveTable compute_curves(const Codec& codec, const CurveSpec& spec) {
  spec.validate();
  CurveTable t;
  t.columns.push_back(spec.sweep == Sweep::rotation ? "sweep_theta" : "sweep_ratio");
  for (const std::string& c : codec.descriptor().components) t.columns.push_back(c);
  const double n = static_cast<double>(spec.points);
  for (std::size_t i = 0; i < spec.points; ++i) {
    double x;
    OrientedBox box(0.0, 0.0, spec.w_side, spec.h_side, spec.theta);
    if (spec.sweep == Sweep::rotation) {
      x = spec.lo + (spec.hi - spec.lo) * static_cast<double>(i) / n;
      box = OrientedBox(0.0, 0.0, spec.w_side, spec.h_side, x);
    } else {
      x = spec.lo + (spec.hi - spec.lo) * static_cast<double>(i) / (n - 1.0);
      box = OrientedBox(0.0, 0.0, spec.w_side * x, spec.h_side, spec.theta);
    }
    std::vector<double> row{x};
    const Encoding e = codec.encode(box);
    row.insert(row.end(), e.values.begin(), e.values.end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string curves_to_csv(const CurveTable& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.columns.size(); ++i) out << (i ? "," : "") << t.columns[i];
  out << '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << (i ? "," : "") << format_double(r[i]);
    out << '\n';
  }
  return out.str();
}

void emit_curves(const Codec& codec, const CurveSpec& spec, const std::filesystem::path& path) {
  const std::string csv = curves_to_csv(compute_curves(codec, spec));
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << csv;
  if (!out) throw IoError("error while writing " + path.string());
}

std::vector<std::size_t> find_jumps(std::span<const double> x, std::span<const double> y, double lipschitz) {
  if (x.size() != y.size()) throw InvalidArgument("x and y differ in length");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    if (std::abs(y[i + 1] - y[i]) > lipschitz * std::abs(x[i + 1] - x[i])) out.push_back(i);
  return out;
}

}  // namespace cobb
