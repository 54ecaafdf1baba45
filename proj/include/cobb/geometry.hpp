// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <span>
#include <vector>

namespace cobb {

inline constexpr double kPi = 3.14159265358979323846;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

// Axis-aligned box given by its center and extents.
struct HorizontalBox {
  double xc = 0.0;
  double yc = 0.0;
  double w = 0.0;
  double h = 0.0;
};

// Rotated rectangle in a y-down image frame. theta turns the first side
// clockwise on screen and is kept in [0, pi). Sides are not sorted.
class OrientedBox {
 public:
  OrientedBox(double cx, double cy, double w_side, double h_side, double theta);

  double cx() const { return cx_; }
  double cy() const { return cy_; }
  double w_side() const { return w_; }
  double h_side() const { return h_; }
  double theta() const { return theta_; }
  double area() const { return w_ * h_; }
  double diagonal() const;

  friend bool operator==(const OrientedBox&, const OrientedBox&) = default;

 private:
  double cx_, cy_, w_, h_, theta_;
};

double canonical_angle(double theta);

// Four vertices starting at the smallest (y, x) vertex and running
// counterclockwise on screen, which is a negative shoelace sum in y-down
// coordinates. Zero-area quads are allowed.
class ConvexQuad {
 public:
  explicit ConvexQuad(const std::array<Point2, 4>& pts);

  const std::array<Point2, 4>& vertices() const { return v_; }
  const Point2& operator[](std::size_t i) const { return v_[i]; }
  double area() const;
  Point2 centroid() const;

 private:
  std::array<Point2, 4> v_;
};

// Reorders without checking convexity.
std::array<Point2, 4> canonical_order(std::array<Point2, 4> pts);

double signed_area(std::span<const Point2> poly);

ConvexQuad vertices_of(const OrientedBox& box);
HorizontalBox outer_hbb(const OrientedBox& box);
HorizontalBox outer_hbb(std::span<const Point2> pts);

OrientedBox rotate(const OrientedBox& box, double dtheta);
// Rotation about an arbitrary pivot, clockwise-positive.
OrientedBox rotate_about(const OrientedBox& box, Point2 pivot, double dtheta);
Point2 rotate_point(Point2 p, Point2 pivot, double dtheta);

std::array<OrientedBox, 2> adjust_side(const OrientedBox& box, double ratio);

double intersection_area(const ConvexQuad& a, const ConvexQuad& b);

double iou_oracle(const ConvexQuad& a, const ConvexQuad& b);
double iou_oracle(const OrientedBox& a, const OrientedBox& b);
double iou_oracle(const OrientedBox& a, const ConvexQuad& b);
double iou_oracle(const ConvexQuad& a, const OrientedBox& b);

// Counterclockwise in y-up terms, collinear points dropped.
std::vector<Point2> convex_hull(std::span<const Point2> pts);

OrientedBox min_area_rect(std::span<const Point2> pts);
OrientedBox min_area_rect(const ConvexQuad& q);

}  // namespace cobb
