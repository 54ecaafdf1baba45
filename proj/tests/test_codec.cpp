// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "cobb/codec.hpp"
#include "cobb/errors.hpp"
#include "helpers.hpp"

using namespace cobb;

namespace {

double max_abs_diff(const CobbVector& a, const CobbVector& b) {
  double m = std::max({std::abs(a.xc - b.xc), std::abs(a.yc - b.yc), std::abs(a.w - b.w), std::abs(a.h - b.h),
                       std::abs(a.rs - b.rs)});
  for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a.scores[i] - b.scores[i]));
  return m;
}

}  // namespace

TEST_CASE("sliding and acreage ratio hand values") {
  const OrientedBox b(0, 0, 4, 2, kPi / 6);
  CHECK(sliding_ratio(b) == doctest::Approx(std::sqrt(3.0) / (2 + std::sqrt(3.0))).epsilon(1e-12));
  CHECK(sliding_ratio(vertices_of(b)) == doctest::Approx(sliding_ratio(b)).epsilon(1e-12));
  const double hbb = (2 * std::sqrt(3.0) + 1) * (2 + std::sqrt(3.0));
  CHECK(acreage_ratio(b) == doctest::Approx(8 / hbb).epsilon(1e-12));
  CHECK(sliding_ratio(OrientedBox(0, 0, 4, 2, 0)) == 0.0);
  CHECK(sliding_ratio(OrientedBox(0, 0, 2, 2, kPi / 4)) == doctest::Approx(0.5));
}

TEST_CASE("candidates share the HBB and the sliding ratio") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> s(0.2, 8), r(0, 0.5);
  for (int i = 0; i < 300; ++i) {
    const HorizontalBox hb{1.5, -2.0, s(rng), s(rng)};
    const double rs = r(rng);
    for (const ConvexQuad& q : four_candidates(hb, rs)) {
      const HorizontalBox o = outer_hbb(std::span<const Point2>(q.vertices()));
      CHECK(o.xc == doctest::Approx(hb.xc));
      CHECK(o.yc == doctest::Approx(hb.yc));
      CHECK(o.w == doctest::Approx(hb.w));
      CHECK(o.h == doctest::Approx(hb.h));
      CHECK(sliding_ratio(q) == doctest::Approx(rs).epsilon(1e-9).scale(1));
      // a rectangle: its minimal enclosing rectangle has the same area
      if (q.area() > 1e-9) CHECK(min_area_rect(q).area() == doctest::Approx(q.area()).epsilon(1e-9));
    }
  }
}

TEST_CASE("each inscribed rectangle is one of the four candidates") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> s(0.3, 6), f(0.01, 0.99);
  for (int i = 0; i < 400; ++i) {
    const double w = s(rng), h = s(rng);
    if (std::abs(w - h) < 1e-3) continue;
    oracle::Inscribed ins = oracle::inscribed(w, h, f(rng), i % 2 == 0);
    std::vector<oracle::P> corners = ins.corners();
    if (i % 3 == 0) {  // mirrored about the vertical axis
      for (oracle::P& p : corners) p.x = w - p.x;
    }
    for (oracle::P& p : corners) {
      p.x -= w / 2;
      p.y -= h / 2;
    }
    const CandidateSet cand = four_candidates({0, 0, w, h}, ins.rs());
    double best = 0;
    for (const ConvexQuad& q : cand) best = std::max(best, oracle::iou(corners, to_oracle(q)));
    CHECK(best > 1 - 1e-9);
  }
}

TEST_CASE("closed-form IoU matrix matches the crossing-point oracle") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> lw(std::log(0.1), std::log(10)), r(1e-7, 0.5);
  double worst = 0;
  for (int n = 0; n < 2000; ++n) {
    const double w = std::exp(lw(rng)), h = std::exp(lw(rng)), rs = r(rng);
    const CandidateSet cand = four_candidates({0, 0, w, h}, rs);
    const IoUMatrix m = iou_matrix(w, h, rs);
    for (int i = 0; i < 4; ++i) {
      CHECK(m[i][i] == 1.0);
      for (int j = 0; j < 4; ++j) {
        CHECK(m[i][j] == m[j][i]);
        if (i != j) worst = std::max(worst, std::abs(m[i][j] - oracle::iou(to_oracle(cand[i]), to_oracle(cand[j]))));
      }
    }
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("IoU matrix limits") {
  const IoUMatrix z = iou_matrix(4, 2, 0.0);
  const double expect[4][4] = {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(z[i][j] == doctest::Approx(expect[i][j]));
  const IoUMatrix half = iou_matrix(4, 2, 0.5);
  CHECK(half[0][2] == doctest::Approx(1));
  CHECK(half[1][3] == doctest::Approx(1));
  // portrait HBB mirrors the landscape one
  const IoUMatrix a = iou_matrix(4, 2, 0.2), b = iou_matrix(2, 4, 0.2);
  CHECK(a[0][1] == doctest::Approx(b[0][2]));
  CHECK(a[0][3] == doctest::Approx(b[0][3]));
  CHECK(a[1][2] == doctest::Approx(b[1][2]));
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(four_candidates({0, 0, 4, 2}, 0.6), InvalidArgument);
  CHECK_THROWS_AS(four_candidates({0, 0, 4, 2}, -0.1), InvalidArgument);
  CHECK_THROWS_AS(four_candidates({0, 0, 0, 2}, 0.2), InvalidArgument);
  CHECK_THROWS_AS(iou_matrix(4, -2, 0.2), InvalidArgument);
  CHECK_THROWS_AS(rs_from_ra(1.5, 4, 2), InvalidArgument);
  CHECK_THROWS_AS(ra_from_rs(0.7, 4, 2, RaBranch::below), InvalidArgument);
  CobbVector v{0, 0, -1, 2, 0.2, {1, 0, 0, 0}};
  CHECK_THROWS_AS(decode(v), InvalidArgument);
}

TEST_CASE("encode and decode") {
  SUBCASE("axis-aligned box") {
    const CobbVector v = encode(OrientedBox(0, 0, 4, 2, 0));
    CHECK(v.w == doctest::Approx(4));
    CHECK(v.h == doctest::Approx(2));
    CHECK(v.rs == 0.0);
    CHECK(classify(OrientedBox(0, 0, 4, 2, 0)) == 1);
    CHECK(v.scores[0] == doctest::Approx(0));
    CHECK(v.scores[1] == doctest::Approx(1));
    CHECK(v.scores[2] == doctest::Approx(1));
    CHECK(v.scores[3] == doctest::Approx(0));
    CHECK(iou_oracle(decode(v), OrientedBox(0, 0, 4, 2, 0)) == doctest::Approx(1));
  }
  SUBCASE("scores are the row of the matching candidate") {
    const OrientedBox b(3, 4, 5, 2, 0.4);
    const CobbVector v = encode(b);
    const int k = classify(b);
    CHECK(v.scores[k] == doctest::Approx(1));
    const CandidateSet cand = four_candidates({v.xc, v.yc, v.w, v.h}, v.rs);
    CHECK(iou_oracle(b, cand[k]) > 1 - 1e-9);
  }
  SUBCASE("roundtrip on random boxes") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> c(-50, 50), s(0.1, 20), t(0, kPi);
    for (int i = 0; i < 2000; ++i) {
      const OrientedBox b(c(rng), c(rng), s(rng), s(rng), t(rng));
      CHECK(iou_oracle(b, decode(encode(b))) > 1 - 1e-9);
    }
  }
  SUBCASE("translation and scale act on the HBB only") {
    const OrientedBox b(1, 2, 5, 2, 0.7);
    const CobbVector v = encode(b), t = encode(OrientedBox(11, -3, 5, 2, 0.7)),
                     s = encode(OrientedBox(3, 6, 15, 6, 0.7));
    CHECK(t.xc == doctest::Approx(v.xc + 10));
    CHECK(t.yc == doctest::Approx(v.yc - 5));
    CHECK(s.w == doctest::Approx(3 * v.w));
    CHECK(t.rs == doctest::Approx(v.rs));
    CHECK(s.rs == doctest::Approx(v.rs));
    for (int i = 0; i < 4; ++i) CHECK(s.scores[i] == doctest::Approx(v.scores[i]));
  }
}

TEST_CASE("encoding is continuous through horizontal and vertical") {
  for (double base : {0.0, kPi / 2}) {
    for (double a : {0.5, 2.0, 3.0}) {
      const OrientedBox l(0, 0, a, 1, base - 1e-8), r(0, 0, a, 1, base + 1e-8);
      CHECK(max_abs_diff(encode(l), encode(r)) < 1e-6);
    }
  }
  // away from the square diamond a small turn moves the encoding a little
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> t(0, kPi), s(1.2, 4);
  for (int i = 0; i < 500; ++i) {
    const OrientedBox b(0, 0, s(rng), 1, t(rng));
    CHECK(max_abs_diff(encode(b), encode(rotate(b, 1e-7))) < 1e-4);
  }
}

TEST_CASE("sliding ratio and acreage ratio on constructed rectangles") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> s(0.3, 6), f(0.0, 1.0);
  for (int i = 0; i < 500; ++i) {
    const double w = s(rng), h = s(rng);
    const oracle::Inscribed ins = oracle::inscribed(w, h, f(rng), i % 2 == 1);
    const double ra = ins.ra(), rs = ins.rs();
    CHECK(rs_from_ra(ra, w, h) == doctest::Approx(rs).epsilon(1e-9).scale(1));
    const RaBranch br = ra < 0.5 ? RaBranch::below : RaBranch::above;
    CHECK(ra_from_rs(rs, w, h, br) == doctest::Approx(ra).epsilon(1e-9).scale(1));
  }
  const auto [lo, hi] = attainable_ra(4, 2);
  CHECK(lo == doctest::Approx(0).scale(1));
  CHECK(hi == doctest::Approx(1));
  CHECK(ra_from_rs(0.5, 4, 2, RaBranch::below) == doctest::Approx(0.5));
  CHECK(ra_from_rs(0.5, 4, 2, RaBranch::above) == doctest::Approx(0.5));
}
