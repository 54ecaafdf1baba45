// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "cobb/errors.hpp"
#include "cobb/geometry.hpp"
#include "helpers.hpp"

using namespace cobb;

TEST_CASE("box construction validates and canonicalizes the angle") {
  CHECK_THROWS_AS(OrientedBox(0, 0, 0, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(OrientedBox(0, 0, 1, -1, 0), InvalidArgument);
  CHECK_THROWS_AS(OrientedBox(0, 0, 1, 1, NAN), InvalidArgument);
  CHECK_THROWS_AS(OrientedBox(INFINITY, 0, 1, 1, 0), InvalidArgument);
  CHECK(OrientedBox(0, 0, 4, 2, -0.1).theta() == doctest::Approx(kPi - 0.1));
  CHECK(OrientedBox(0, 0, 4, 2, kPi + 0.25).theta() == doctest::Approx(0.25));
  CHECK(canonical_angle(2 * kPi) == doctest::Approx(0.0));
  const OrientedBox b(0, 0, 3, 4, 0);
  CHECK(b.area() == 12.0);
  CHECK(b.diagonal() == doctest::Approx(5.0));
}

TEST_CASE("vertices start at the top-most vertex and run counterclockwise on screen") {
  const ConvexQuad q = vertices_of(OrientedBox(0, 0, 4, 2, 0));
  CHECK(q[0].x == doctest::Approx(-2));
  CHECK(q[0].y == doctest::Approx(-1));
  CHECK(q[1].x == doctest::Approx(-2));
  CHECK(q[1].y == doctest::Approx(1));
  CHECK(signed_area(q.vertices()) == doctest::Approx(-8));
  CHECK(q.area() == doctest::Approx(8));

  // any input order gives the same canonical quad
  const ConvexQuad shuffled({{{2, 1}, {2, -1}, {-2, -1}, {-2, 1}}});
  for (int i = 0; i < 4; ++i) {
    CHECK(shuffled[i].x == doctest::Approx(q[i].x));
    CHECK(shuffled[i].y == doctest::Approx(q[i].y));
  }
  CHECK_THROWS_AS(ConvexQuad({{{0, 0}, {4, 0}, {1, 1}, {0, 4}}}), InvalidArgument);
}

TEST_CASE("outer HBB of a turned 4x2 box") {
  const HorizontalBox h = outer_hbb(OrientedBox(1, 2, 4, 2, kPi / 6));
  CHECK(h.xc == doctest::Approx(1));
  CHECK(h.yc == doctest::Approx(2));
  CHECK(h.w == doctest::Approx(2 * std::sqrt(3.0) + 1).epsilon(1e-12));
  CHECK(h.h == doctest::Approx(2 + std::sqrt(3.0)).epsilon(1e-12));
  const ConvexQuad q = vertices_of(OrientedBox(1, 2, 4, 2, kPi / 6));
  const HorizontalBox g = outer_hbb(std::span<const Point2>(q.vertices()));
  CHECK(g.w == doctest::Approx(h.w));
  CHECK(g.h == doctest::Approx(h.h));
}

TEST_CASE("rotation is clockwise on screen") {
  const Point2 p = rotate_point({1, 0}, {0, 0}, kPi / 2);
  CHECK(p.x == doctest::Approx(0).epsilon(1e-15));
  CHECK(p.y == doctest::Approx(1));
  const OrientedBox b = rotate_about(OrientedBox(1, 0, 4, 2, 0.1), {0, 0}, kPi / 2);
  CHECK(b.cx() == doctest::Approx(0).scale(1));
  CHECK(b.cy() == doctest::Approx(1));
  CHECK(b.theta() == doctest::Approx(0.1 + kPi / 2));
  CHECK(rotate(OrientedBox(0, 0, 4, 2, 3.0), 0.5).theta() == doctest::Approx(3.5 - kPi));
}

TEST_CASE("adjust_side scales each side in turn") {
  const auto pair = adjust_side(OrientedBox(0, 0, 4, 2, 0.3), 1.5);
  CHECK(pair[0].w_side() == doctest::Approx(6));
  CHECK(pair[0].h_side() == doctest::Approx(2));
  CHECK(pair[1].w_side() == doctest::Approx(4));
  CHECK(pair[1].h_side() == doctest::Approx(3));
  CHECK_THROWS_AS(adjust_side(OrientedBox(0, 0, 4, 2, 0), 0.0), InvalidArgument);
}

TEST_CASE("IoU hand values") {
  CHECK(iou_oracle(OrientedBox(0, 0, 4, 2, 0), OrientedBox(0, 0, 4, 2, kPi / 2)) == doctest::Approx(1.0 / 3));
  CHECK(iou_oracle(OrientedBox(0, 0, 4, 2, 0), OrientedBox(0, 0, 4, 2, 0)) == doctest::Approx(1.0));
  CHECK(iou_oracle(OrientedBox(0, 0, 2, 2, 0), OrientedBox(1, 0, 2, 2, 0)) == doctest::Approx(1.0 / 3));
  CHECK(iou_oracle(OrientedBox(0, 0, 2, 2, 0), OrientedBox(5, 0, 2, 2, 0)) == 0.0);
  // a square and its 45 degree turn share a regular octagon
  const double oct = 8.0 * (std::sqrt(2.0) - 1.0);
  CHECK(iou_oracle(OrientedBox(0, 0, 2, 2, 0), OrientedBox(0, 0, 2, 2, kPi / 4)) ==
        doctest::Approx(oct / (8.0 - oct)));
}

TEST_CASE("zero-area inputs") {
  const ConvexQuad flat({{{0, 0}, {1, 1}, {2, 2}, {3, 3}}});
  CHECK(flat.area() == doctest::Approx(0.0));
  CHECK(iou_oracle(flat, OrientedBox(0, 0, 2, 2, 0)) == 0.0);
  CHECK_THROWS_AS(iou_oracle(flat, flat), UndefinedIoU);
}

TEST_CASE("IoU matches the crossing-point oracle on random pairs") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> c(-3, 3), s(0.2, 5), t(0, 2 * kPi);
  double worst = 0;
  for (int i = 0; i < 3000; ++i) {
    const OrientedBox a(c(rng), c(rng), s(rng), s(rng), t(rng));
    const OrientedBox b(c(rng), c(rng), s(rng), s(rng), t(rng));
    worst = std::max(worst, std::abs(iou_oracle(a, b) - oracle::iou(to_oracle(a), to_oracle(b))));
    const double ab = intersection_area(vertices_of(a), vertices_of(b));
    const double ba = intersection_area(vertices_of(b), vertices_of(a));
    CHECK(ab == doctest::Approx(ba).epsilon(1e-9).scale(1));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("convex hull drops interior and collinear points") {
  const std::vector<Point2> pts{{0, 0}, {2, 0}, {1, 0}, {2, 2}, {0, 2}, {1, 1}};
  const std::vector<Point2> hull = convex_hull(pts);
  CHECK(hull.size() == 4);
  CHECK(std::abs(signed_area(hull)) == doctest::Approx(4));
}

TEST_CASE("min_area_rect") {
  SUBCASE("recovers random boxes") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> c(-10, 10), s(0.1, 10), t(0, kPi);
    for (int i = 0; i < 500; ++i) {
      const OrientedBox b(c(rng), c(rng), s(rng), s(rng), t(rng));
      const OrientedBox r = min_area_rect(vertices_of(b));
      CHECK(iou_oracle(b, r) > 1 - 1e-9);
      CHECK(r.area() == doctest::Approx(b.area()).epsilon(1e-9));
    }
  }
  SUBCASE("right triangle keeps the first edge on ties") {
    const std::vector<Point2> tri{{0, 0}, {4, 0}, {0, 3}};
    const OrientedBox r = min_area_rect(tri);
    CHECK(r.area() == doctest::Approx(12));
    CHECK(iou_oracle(r, OrientedBox(2, 1.5, 4, 3, 0)) == doctest::Approx(1));
  }
  SUBCASE("degenerate input") {
    const std::vector<Point2> line{{0, 0}, {1, 1}, {2, 2}};
    CHECK_THROWS_AS(min_area_rect(line), DegenerateGeometry);
    const std::vector<Point2> two{{0, 0}, {1, 1}};
    CHECK_THROWS_AS(min_area_rect(two), DegenerateGeometry);
  }
}
