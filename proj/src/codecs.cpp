// SPDX-License-Identifier: Apache-2.0
#include "cobb/codecs.hpp"

#include <algorithm>
#include <cmath>

#include "cobb/codec.hpp"
#include "cobb/errors.hpp"

namespace cobb {

namespace {

constexpr double kHalfPi = kPi / 2.0;
constexpr double kQuarterPi = kPi / 4.0;

CodecDescriptor describe(std::string name, bool exact, std::vector<std::string> components) {
  CodecDescriptor d;
  d.name = std::move(name);
  d.dim = components.size();
  d.decodes_exactly = exact;
  d.components = std::move(components);
  return d;
}

struct LongEdge {
  double lng, shrt, theta;
};

LongEdge long_edge_of(const OrientedBox& box) {
  LongEdge e{box.w_side(), box.h_side(), box.theta()};
  if (box.h_side() > box.w_side()) {
    e = {box.h_side(), box.w_side(), box.theta() + kHalfPi};
  }
  while (e.theta >= kHalfPi) e.theta -= kPi;
  return e;
}

void check_finite(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) throw InvalidArgument("encoding has non-finite values");
}

}  // namespace

Codec::Codec(CodecDescriptor d) : desc_(std::make_shared<const CodecDescriptor>(std::move(d))) {}

Encoding Codec::make(std::vector<double> values) const { return Encoding{std::move(values), desc_}; }

void Codec::check_dim(std::span<const double> values) const {
  if (values.size() != desc_->dim)
    throw InvalidArgument(desc_->name + " expects " + std::to_string(desc_->dim) + " values");
  check_finite(values);
}

double Codec::loss(std::span<const double> a, std::span<const double> b) const {
  check_dim(a);
  check_dim(b);
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += smooth_l1(a[i] - b[i], 1.0);
  return sum;
}

CobbCodec::CobbCodec(TargetVariant variant)
    : Codec(describe(variant == TargetVariant::sig ? "cobb" : "cobb-ln", true,
                     {"xc", "yc", "w", "h", "rs", "s0", "s1", "s2", "s3"})),
      variant_(variant) {}

Encoding CobbCodec::encode(const OrientedBox& box) const {
  const CobbVector v = cobb::encode(box);
  return make({v.xc, v.yc, v.w, v.h, v.rs, v.scores[0], v.scores[1], v.scores[2], v.scores[3]});
}

namespace {
CobbVector to_vector(std::span<const double> x) {
  return CobbVector{x[0], x[1], x[2], x[3], x[4], {x[5], x[6], x[7], x[8]}};
}
}  // namespace

OrientedBox CobbCodec::decode(std::span<const double> values) const {
  check_dim(values);
  return cobb::decode(to_vector(values));
}

double CobbCodec::loss(std::span<const double> a, std::span<const double> b) const {
  check_dim(a);
  check_dim(b);
  const double lambda = default_lambda(variant_);
  return cobb_loss(target_from_vector(to_vector(a), variant_, lambda),
                   target_from_vector(to_vector(b), variant_, lambda));
}

AcuteCodec::AcuteCodec() : Codec(describe("acute", true, {"cx", "cy", "w", "h", "theta"})) {}

Encoding AcuteCodec::encode(const OrientedBox& box) const {
  double w = box.w_side();
  double h = box.h_side();
  double t = box.theta();
  int k = static_cast<int>(std::floor((t + kQuarterPi) / kHalfPi));
  t -= k * kHalfPi;
  if (t >= kQuarterPi) {
    t -= kHalfPi;
    ++k;
  }
  if (k % 2 != 0) std::swap(w, h);
  return make({box.cx(), box.cy(), w, h, t});
}

OrientedBox AcuteCodec::decode(std::span<const double> v) const {
  check_dim(v);
  return OrientedBox(v[0], v[1], v[2], v[3], v[4]);
}

LongEdgeCodec::LongEdgeCodec() : Codec(describe("longedge", true, {"cx", "cy", "long", "short", "theta"})) {}

Encoding LongEdgeCodec::encode(const OrientedBox& box) const {
  const LongEdge e = long_edge_of(box);
  return make({box.cx(), box.cy(), e.lng, e.shrt, e.theta});
}

OrientedBox LongEdgeCodec::decode(std::span<const double> v) const {
  check_dim(v);
  return OrientedBox(v[0], v[1], v[2], v[3], v[4]);
}

namespace {
std::vector<std::string> csl_components(std::size_t bins) {
  std::vector<std::string> c{"cx", "cy", "long", "short"};
  for (std::size_t k = 0; k < bins; ++k) c.push_back("bin" + std::to_string(k));
  return c;
}
std::size_t checked_bins(std::size_t bins) {
  if (bins < 4) throw InvalidArgument("CSL needs at least 4 bins");
  return bins;
}
}  // namespace

CslCodec::CslCodec(std::size_t bins, double sigma_bins)
    : Codec(describe("csl", false, csl_components(checked_bins(bins)))), bins_(bins), sigma_bins_(sigma_bins) {
  if (!std::isfinite(sigma_bins) || sigma_bins <= 0.0) throw InvalidArgument("CSL window width must be positive");
}

double CslCodec::bin_width() const { return kPi / static_cast<double>(bins_); }

double CslCodec::bin_center(std::size_t k) const {
  return -kHalfPi + (static_cast<double>(k) + 0.5) * bin_width();
}

std::vector<double> CslCodec::label(double theta_long) const {
  const double sigma = sigma_bins_ * bin_width();
  std::vector<double> out(bins_);
  for (std::size_t k = 0; k < bins_; ++k) {
    const double d = std::remainder(theta_long - bin_center(k), kPi);
    out[k] = std::exp(-d * d / (2.0 * sigma * sigma));
  }
  return out;
}

Encoding CslCodec::encode(const OrientedBox& box) const {
  const LongEdge e = long_edge_of(box);
  std::vector<double> v{box.cx(), box.cy(), e.lng, e.shrt};
  const std::vector<double> lab = label(e.theta);
  v.insert(v.end(), lab.begin(), lab.end());
  return make(std::move(v));
}

OrientedBox CslCodec::decode(std::span<const double> v) const {
  check_dim(v);
  std::size_t best = 0;
  for (std::size_t k = 1; k < bins_; ++k)
    if (v[4 + k] > v[4 + best]) best = k;
  return OrientedBox(v[0], v[1], v[2], v[3], bin_center(best));
}

GlidingVertexCodec::GlidingVertexCodec()
    : Codec(describe("gv", true, {"xc", "yc", "w", "h", "a_top", "a_right", "a_bottom", "a_left"})) {}

Encoding GlidingVertexCodec::encode(const OrientedBox& box) const {
  const auto& p = vertices_of(box).vertices();
  const HorizontalBox hb = outer_hbb(std::span<const Point2>(p));
  const double l = hb.xc - hb.w / 2.0, r = hb.xc + hb.w / 2.0;
  const double t = hb.yc - hb.h / 2.0, b = hb.yc + hb.h / 2.0;

  Point2 top = p[0], right = p[0], bottom = p[0], left = p[0];
  for (const Point2& q : p) {
    if (q.y < top.y || (q.y == top.y && q.x > top.x)) top = q;
    if (q.x > right.x || (q.x == right.x && q.y > right.y)) right = q;
    if (q.y > bottom.y || (q.y == bottom.y && q.x < bottom.x)) bottom = q;
    if (q.x < left.x || (q.x == left.x && q.y < left.y)) left = q;
  }
  auto frac = [](double d, double len) { return std::clamp(d / len, 0.0, 1.0); };
  return make({hb.xc, hb.yc, hb.w, hb.h, frac(r - top.x, hb.w), frac(b - right.y, hb.h),
               frac(bottom.x - l, hb.w), frac(left.y - t, hb.h)});
}

OrientedBox GlidingVertexCodec::decode(std::span<const double> v) const {
  check_dim(v);
  const double w = v[2], h = v[3];
  if (w <= 0.0 || h <= 0.0) throw InvalidArgument("HBB extents must be positive");
  const double l = v[0] - w / 2.0, r = v[0] + w / 2.0;
  const double t = v[1] - h / 2.0, b = v[1] + h / 2.0;
  auto a = [&](std::size_t i) { return std::clamp(v[4 + i], 0.0, 1.0); };
  const std::array<Point2, 4> quad{{{r - a(0) * w, t}, {r, b - a(1) * h}, {l + a(2) * w, b}, {l, t + a(3) * h}}};
  return min_area_rect(std::span<const Point2>(quad));
}

std::unique_ptr<Codec> make_codec(std::string_view name) {
  if (name == "cobb") return std::make_unique<CobbCodec>(TargetVariant::sig);
  if (name == "cobb-ln") return std::make_unique<CobbCodec>(TargetVariant::ln);
  if (name == "acute") return std::make_unique<AcuteCodec>();
  if (name == "longedge") return std::make_unique<LongEdgeCodec>();
  if (name == "csl") return std::make_unique<CslCodec>();
  if (name == "gv") return std::make_unique<GlidingVertexCodec>();
  throw InvalidArgument("unknown codec: " + std::string(name));
}

const std::vector<std::string>& codec_names() {
  static const std::vector<std::string> names{"cobb", "acute", "longedge", "csl", "gv"};
  return names;
}

}  // namespace cobb
