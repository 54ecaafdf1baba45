// SPDX-License-Identifier: Apache-2.0
#include "cobb/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cobb/errors.hpp"

namespace cobb {

namespace {

double cross(Point2 o, Point2 a, Point2 b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool finite(double v) { return std::isfinite(v); }

double extent(std::span<const Point2> pts) {
  HorizontalBox b = outer_hbb(pts);
  return std::max(b.w, b.h);
}

}  // namespace

double canonical_angle(double theta) {
  if (!finite(theta)) throw InvalidArgument("angle must be finite");
  double t = std::fmod(theta, kPi);
  if (t < 0.0) t += kPi;
  if (t >= kPi) t = 0.0;
  return t;
}

OrientedBox::OrientedBox(double cx, double cy, double w_side, double h_side, double theta)
    : cx_(cx), cy_(cy), w_(w_side), h_(h_side), theta_(0.0) {
  if (!finite(cx) || !finite(cy)) throw InvalidArgument("box center must be finite");
  if (!finite(w_side) || !finite(h_side) || w_side <= 0.0 || h_side <= 0.0)
    throw InvalidArgument("box sides must be positive and finite");
  theta_ = canonical_angle(theta);
}

double OrientedBox::diagonal() const { return std::hypot(w_, h_); }

double signed_area(std::span<const Point2> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return 0.0;
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = poly[i];
    const Point2& b = poly[(i + 1) % n];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

std::array<Point2, 4> canonical_order(std::array<Point2, 4> pts) {
  for (const Point2& p : pts)
    if (!finite(p.x) || !finite(p.y)) throw InvalidArgument("vertex coordinates must be finite");
  if (signed_area(pts) > 0.0) std::reverse(pts.begin(), pts.end());
  std::size_t start = 0;
  for (std::size_t i = 1; i < 4; ++i) {
    const Point2& p = pts[i];
    const Point2& s = pts[start];
    if (p.y < s.y || (p.y == s.y && p.x < s.x)) start = i;
  }
  std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(start), pts.end());
  return pts;
}

ConvexQuad::ConvexQuad(const std::array<Point2, 4>& pts) : v_(canonical_order(pts)) {
  const double e = extent(v_);
  const double tol = 1e-9 * e * e;
  for (std::size_t i = 0; i < 4; ++i) {
    if (cross(v_[i], v_[(i + 1) % 4], v_[(i + 2) % 4]) > tol)
      throw InvalidArgument("quad is not convex");
  }
}

double ConvexQuad::area() const { return std::abs(signed_area(v_)); }

Point2 ConvexQuad::centroid() const {
  Point2 c;
  for (const Point2& p : v_) {
    c.x += p.x;
    c.y += p.y;
  }
  return {c.x / 4.0, c.y / 4.0};
}

ConvexQuad vertices_of(const OrientedBox& box) {
  const double c = std::cos(box.theta());
  const double s = std::sin(box.theta());
  const double hw = box.w_side() / 2.0;
  const double hh = box.h_side() / 2.0;
  const std::array<Point2, 4> local{{{-hw, -hh}, {hw, -hh}, {hw, hh}, {-hw, hh}}};
  std::array<Point2, 4> pts;
  for (std::size_t i = 0; i < 4; ++i) {
    pts[i] = {box.cx() + c * local[i].x - s * local[i].y, box.cy() + s * local[i].x + c * local[i].y};
  }
  return ConvexQuad(pts);
}

HorizontalBox outer_hbb(const OrientedBox& box) {
  const double c = std::abs(std::cos(box.theta()));
  const double s = std::abs(std::sin(box.theta()));
  return {box.cx(), box.cy(), box.w_side() * c + box.h_side() * s, box.w_side() * s + box.h_side() * c};
}

HorizontalBox outer_hbb(std::span<const Point2> pts) {
  if (pts.empty()) throw InvalidArgument("no points");
  double x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
  for (const Point2& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  return {(x0 + x1) / 2.0, (y0 + y1) / 2.0, x1 - x0, y1 - y0};
}

OrientedBox rotate(const OrientedBox& box, double dtheta) {
  if (!finite(dtheta)) throw InvalidArgument("rotation must be finite");
  return OrientedBox(box.cx(), box.cy(), box.w_side(), box.h_side(), box.theta() + dtheta);
}

Point2 rotate_point(Point2 p, Point2 pivot, double dtheta) {
  const double c = std::cos(dtheta);
  const double s = std::sin(dtheta);
  const double dx = p.x - pivot.x;
  const double dy = p.y - pivot.y;
  return {pivot.x + c * dx - s * dy, pivot.y + s * dx + c * dy};
}

OrientedBox rotate_about(const OrientedBox& box, Point2 pivot, double dtheta) {
  if (!finite(dtheta)) throw InvalidArgument("rotation must be finite");
  const Point2 c = rotate_point({box.cx(), box.cy()}, pivot, dtheta);
  return OrientedBox(c.x, c.y, box.w_side(), box.h_side(), box.theta() + dtheta);
}

std::array<OrientedBox, 2> adjust_side(const OrientedBox& box, double ratio) {
  if (!finite(ratio) || ratio <= 0.0) throw InvalidArgument("side ratio must be positive");
  return {OrientedBox(box.cx(), box.cy(), box.w_side() * ratio, box.h_side(), box.theta()),
          OrientedBox(box.cx(), box.cy(), box.w_side(), box.h_side() * ratio, box.theta())};
}

double intersection_area(const ConvexQuad& a, const ConvexQuad& b) {
  const double area_a = a.area();
  const double area_b = b.area();
  if (area_a == 0.0 || area_b == 0.0) return 0.0;

  const double orient = signed_area(b.vertices()) < 0.0 ? -1.0 : 1.0;
  std::vector<Point2> poly(a.vertices().begin(), a.vertices().end());
  std::vector<Point2> next;
  poly.reserve(8);
  next.reserve(8);
  for (std::size_t e = 0; e < 4; ++e) {
    const Point2 p = b[e];
    const Point2 q = b[(e + 1) % 4];
    if (p == q) continue;
    next.clear();
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point2 cur = poly[i];
      const Point2 nxt = poly[(i + 1) % n];
      const double dc = orient * cross(p, q, cur);
      const double dn = orient * cross(p, q, nxt);
      if (dc >= 0.0) next.push_back(cur);
      if ((dc >= 0.0) != (dn >= 0.0)) {
        const double t = dc / (dc - dn);
        next.push_back({cur.x + t * (nxt.x - cur.x), cur.y + t * (nxt.y - cur.y)});
      }
    }
    poly.swap(next);
    if (poly.size() < 3) return 0.0;
  }
  const double inter = std::abs(signed_area(poly));
  return std::min(inter, std::min(area_a, area_b));
}

double iou_oracle(const ConvexQuad& a, const ConvexQuad& b) {
  const double area_a = a.area();
  const double area_b = b.area();
  if (area_a == 0.0 && area_b == 0.0) throw UndefinedIoU("IoU of two zero-area shapes");
  const double inter = intersection_area(a, b);
  const double uni = area_a + area_b - inter;
  return std::clamp(inter / uni, 0.0, 1.0);
}

double iou_oracle(const OrientedBox& a, const OrientedBox& b) {
  return iou_oracle(vertices_of(a), vertices_of(b));
}

double iou_oracle(const OrientedBox& a, const ConvexQuad& b) { return iou_oracle(vertices_of(a), b); }

double iou_oracle(const ConvexQuad& a, const OrientedBox& b) { return iou_oracle(a, vertices_of(b)); }

std::vector<Point2> convex_hull(std::span<const Point2> pts) {
  std::vector<Point2> p(pts.begin(), pts.end());
  for (const Point2& q : p)
    if (!finite(q.x) || !finite(q.y)) throw InvalidArgument("point coordinates must be finite");
  std::sort(p.begin(), p.end(), [](const Point2& a, const Point2& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  });
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;

  std::vector<Point2> hull(2 * p.size());
  std::size_t k = 0;
  for (const Point2& q : p) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], q) <= 0.0) --k;
    hull[k++] = q;
  }
  for (std::size_t i = p.size() - 1, lo = k + 1; i-- > 0;) {
    while (k >= lo && cross(hull[k - 2], hull[k - 1], p[i]) <= 0.0) --k;
    hull[k++] = p[i];
  }
  hull.resize(k - 1);
  return hull;
}

OrientedBox min_area_rect(std::span<const Point2> pts) {
  if (pts.size() < 3) throw DegenerateGeometry("need at least 3 points");
  std::vector<Point2> hull = convex_hull(pts);
  const double e = extent(pts);
  if (hull.size() < 3 || std::abs(signed_area(hull)) <= 1e-14 * e * e)
    throw DegenerateGeometry("points are collinear");

  Point2 ref;
  for (const Point2& p : hull) {
    ref.x += p.x;
    ref.y += p.y;
  }
  ref.x /= static_cast<double>(hull.size());
  ref.y /= static_cast<double>(hull.size());
  for (Point2& p : hull) p = {p.x - ref.x, p.y - ref.y};

  double best = std::numeric_limits<double>::infinity();
  Point2 best_u;
  double bu0 = 0, bu1 = 0, bn0 = 0, bn1 = 0;
  const std::size_t n = hull.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = hull[i];
    const Point2 b = hull[(i + 1) % n];
    const double len = std::hypot(b.x - a.x, b.y - a.y);
    const Point2 u{(b.x - a.x) / len, (b.y - a.y) / len};
    double u0 = std::numeric_limits<double>::infinity(), u1 = -u0, n0 = u0, n1 = -u0;
    for (const Point2& p : hull) {
      const double pu = p.x * u.x + p.y * u.y;
      const double pn = -p.x * u.y + p.y * u.x;
      u0 = std::min(u0, pu);
      u1 = std::max(u1, pu);
      n0 = std::min(n0, pn);
      n1 = std::max(n1, pn);
    }
    const double area = (u1 - u0) * (n1 - n0);
    if (area < best * (1.0 - 1e-12)) {
      best = area;
      best_u = u;
      bu0 = u0;
      bu1 = u1;
      bn0 = n0;
      bn1 = n1;
    }
  }
  const double mu = (bu0 + bu1) / 2.0;
  const double mn = (bn0 + bn1) / 2.0;
  const double cx = ref.x + mu * best_u.x - mn * best_u.y;
  const double cy = ref.y + mu * best_u.y + mn * best_u.x;
  return OrientedBox(cx, cy, bu1 - bu0, bn1 - bn0, std::atan2(best_u.y, best_u.x));
}

OrientedBox min_area_rect(const ConvexQuad& q) { return min_area_rect(std::span<const Point2>(q.vertices())); }

}  // namespace cobb
