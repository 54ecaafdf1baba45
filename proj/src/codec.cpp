// SPDX-License-Identifier: Apache-2.0
#include "cobb/codec.hpp"

#include <algorithm>
#include <cmath>

#include "cobb/errors.hpp"

namespace cobb {

namespace {

double checked_rs(double rs) {
  if (!std::isfinite(rs) || rs < -1e-12 || rs > 0.5 + 1e-12)
    throw InvalidArgument("sliding ratio must lie in [0, 0.5]");
  return std::clamp(rs, 0.0, 0.5);
}

void check_extents(double w, double h) {
  if (!std::isfinite(w) || !std::isfinite(h) || w <= 0.0 || h <= 0.0)
    throw InvalidArgument("HBB extents must be positive");
}

// sqrt(1 - 4 r^2 rs (1 - rs)) with r = short/long, written without cancellation.
double slide_root(double lo, double hi, double rs) {
  const double r = lo / hi;
  const double u = 1.0 - 2.0 * rs;
  return std::sqrt((hi - lo) * (hi + lo) / (hi * hi) + r * r * u * u);
}

double ratio_from_offsets(std::array<double, 4> xs, std::array<double, 4> ys) {
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const double w = xs[3] - xs[0];
  const double h = ys[3] - ys[0];
  if (!(w > 0.0) || !(h > 0.0)) throw DegenerateGeometry("zero-extent box");
  const double rs = w < h ? (xs[1] - xs[0]) / w : (ys[1] - ys[0]) / h;
  return std::clamp(rs, 0.0, 0.5);
}

}  // namespace

double sliding_ratio(const OrientedBox& box) {
  const double c = std::cos(box.theta());
  const double s = std::sin(box.theta());
  const double hw = box.w_side() / 2.0;
  const double hh = box.h_side() / 2.0;
  std::array<double, 4> xs, ys;
  const double lx[4] = {-hw, hw, hw, -hw};
  const double ly[4] = {-hh, -hh, hh, hh};
  for (int i = 0; i < 4; ++i) {
    xs[i] = c * lx[i] - s * ly[i];
    ys[i] = s * lx[i] + c * ly[i];
  }
  return ratio_from_offsets(xs, ys);
}

double sliding_ratio(const ConvexQuad& quad) {
  std::array<double, 4> xs, ys;
  for (int i = 0; i < 4; ++i) {
    xs[i] = quad[i].x;
    ys[i] = quad[i].y;
  }
  return ratio_from_offsets(xs, ys);
}

double acreage_ratio(const OrientedBox& box) {
  const HorizontalBox b = outer_hbb(box);
  return box.area() / (b.w * b.h);
}

CandidateSet four_candidates(const HorizontalBox& hbb, double rs) {
  check_extents(hbb.w, hbb.h);
  rs = checked_rs(rs);
  const double w = hbb.w;
  const double h = hbb.h;
  double xs, ys;
  if (w >= h) {
    ys = (1.0 - 2.0 * rs) * h / 2.0;
    xs = slide_root(h, w, rs) * w / 2.0;
  } else {
    xs = (1.0 - 2.0 * rs) * w / 2.0;
    ys = slide_root(w, h, rs) * h / 2.0;
  }
  const double x = hbb.xc;
  const double y = hbb.yc;
  auto build = [&](double sx, double sy) {
    return ConvexQuad({{{x + sx * xs, y - h / 2.0},
                        {x + w / 2.0, y + sy * ys},
                        {x - sx * xs, y + h / 2.0},
                        {x - w / 2.0, y - sy * ys}}});
  };
  return {build(-1, 1), build(1, 1), build(-1, -1), build(1, -1)};
}

int classify(const OrientedBox& box) {
  const CandidateSet cand = four_candidates(outer_hbb(box), sliding_ratio(box));
  const ConvexQuad q = vertices_of(box);
  std::array<double, 4> iou;
  for (int i = 0; i < 4; ++i) iou[i] = iou_oracle(q, cand[i]);
  const double best = *std::max_element(iou.begin(), iou.end());
  for (int i = 0; i < 4; ++i)
    if (iou[i] >= best - 1e-12) return i;
  return 0;
}

IoUMatrix iou_matrix(double w, double h, double rs) {
  check_extents(w, h);
  rs = checked_rs(rs);
  const bool swapped = w < h;
  if (swapped) std::swap(w, h);

  const double r = h / w;
  const double u = 1.0 - 2.0 * rs;  // 1 - 2 rsy
  const double s = slide_root(h, w, rs);  // 1 - 2 rsx
  const double rsy = rs;
  const double rsx = 2.0 * r * r * rs * (1.0 - rs) / (1.0 + s);
  const double qx = (1.0 + s) / 2.0;  // 1 - rsx
  const double qy = 1.0 - rsy;

  const double l1 = std::hypot(rsx * w, rsy * h);
  const double l2 = std::hypot(qx * w, qy * h);
  const double l3 = std::hypot(rsx * w, qy * h);
  const double l4 = std::hypot(qx * w, rsy * h);
  const double a03 = l1 * l2;
  const double a12 = l3 * l4;

  auto ratio = [](double inter, double uni) { return uni > 0.0 ? std::clamp(inter / uni, 0.0, 1.0) : 1.0; };

  const double i01 = (1.0 - s * rsx * w * w / (qy * h * h)) * a03;
  const double i02 = (1.0 - u * rsy * h * h / (qx * w * w)) * a03;
  double iou01 = ratio(i01, a03 + a12 - i01);
  double iou02 = ratio(i02, a03 + a12 - i02);

  const double k = rsx + rsy - 2.0 * rsx * rsy;
  const double i03 = k * k / (qx * qy) * w * h / 2.0;
  const double iou03 = i03 == 0.0 ? 0.0 : ratio(i03, 2.0 * a03 - i03);

  const double h1 = w / 2.0 - (u / 2.0) / qy * rsx * w;
  const double h2 = h / 2.0 - (s / 2.0) / qx * rsy * h;
  const double tan_a = ((s / 2.0) / qx * l4) / (l3 / (2.0 * qy));
  const double tan_b = ((u / 2.0) / qy * l3) / (l4 / (2.0 * qx));
  double i12 = 2.0 * h1 * h2;
  if (tan_a * tan_b != 0.0) i12 += 2.0 * tan_a * tan_b / (tan_a + tan_b) * (h1 * h1 + h2 * h2);
  const double iou12 = ratio(i12, 2.0 * a12 - i12);

  if (swapped) std::swap(iou01, iou02);
  IoUMatrix out;
  out.m = {{{1.0, iou01, iou02, iou03},
            {iou01, 1.0, iou12, iou02},
            {iou02, iou12, 1.0, iou01},
            {iou03, iou02, iou01, 1.0}}};
  return out;
}

CobbVector encode(const OrientedBox& box) {
  const HorizontalBox hbb = outer_hbb(box);
  CobbVector v;
  v.xc = hbb.xc;
  v.yc = hbb.yc;
  v.w = hbb.w;
  v.h = hbb.h;
  v.rs = sliding_ratio(box);
  v.scores = iou_matrix(hbb.w, hbb.h, v.rs)[static_cast<std::size_t>(classify(box))];
  return v;
}

OrientedBox decode(const CobbVector& v) {
  if (!std::isfinite(v.w) || !std::isfinite(v.h) || v.w <= 0.0 || v.h <= 0.0)
    throw InvalidArgument("decoded HBB extents must be positive");
  if (!std::isfinite(v.rs)) throw InvalidArgument("sliding ratio must be finite");
  std::size_t best = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (!std::isfinite(v.scores[i])) throw InvalidArgument("scores must be finite");
    if (v.scores[i] > v.scores[best]) best = i;
  }
  const CandidateSet cand = four_candidates({v.xc, v.yc, v.w, v.h}, std::clamp(v.rs, 0.0, 0.5));
  return min_area_rect(cand[best]);
}

double ra_from_rs(double rs, double w, double h, RaBranch branch) {
  check_extents(w, h);
  rs = checked_rs(rs);
  const double lo = std::min(w, h);
  const double hi = std::max(w, h);
  const double t = (1.0 - 2.0 * rs) * slide_root(lo, hi, rs);
  if (branch == RaBranch::above) return (1.0 + t) / 2.0;
  const double r = lo / hi;
  const double q = rs * (1.0 - rs);
  const double prod = q * (1.0 + r * r) - 4.0 * r * r * q * q;  // ra (1 - ra)
  return 2.0 * prod / (1.0 + t);
}

double rs_from_ra(double ra, double w, double h) {
  check_extents(w, h);
  if (!std::isfinite(ra) || ra < -1e-12 || ra > 1.0 + 1e-12)
    throw InvalidArgument("acreage ratio is not attainable");
  ra = std::clamp(ra, 0.0, 1.0);
  const double lo = std::min(w, h);
  const double hi = std::max(w, h);
  const double r = lo / hi;
  const double one_m_r2 = (hi - lo) * (hi + lo) / (hi * hi);
  const double d = ra - 0.5;
  const double sqrt_d = std::sqrt(one_m_r2 * one_m_r2 + 16.0 * r * r * d * d);
  const double q = 2.0 * ra * (1.0 - ra) / ((1.0 + r * r) + sqrt_d);  // rs (1 - rs)
  const double den = sqrt_d + one_m_r2;
  const double t = den > 0.0 ? std::abs(d) * std::sqrt(8.0 / den) : 0.0;  // 1 - 2 rs
  return std::clamp(2.0 * q / (1.0 + t), 0.0, 0.5);
}

std::pair<double, double> attainable_ra(double w, double h) {
  return {ra_from_rs(0.0, w, h, RaBranch::below), ra_from_rs(0.0, w, h, RaBranch::above)};
}

}  // namespace cobb
