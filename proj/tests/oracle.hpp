// SPDX-License-Identifier: Apache-2.0
// Reference computations for the tests. Nothing here calls into the
// library's geometry so the two paths can disagree.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

namespace oracle {

struct P {
  double x, y;
};

inline double cross(P o, P a, P b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline double shoelace(const std::vector<P>& p) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const P& a = p[i];
    const P& b = p[(i + 1) % p.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return s / 2.0;
}

// Corners of a rectangle turned clockwise on screen (y down) by theta.
inline std::vector<P> rect(double cx, double cy, double w, double h, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  std::vector<P> out;
  const double lx[4] = {-w / 2, w / 2, w / 2, -w / 2};
  const double ly[4] = {-h / 2, -h / 2, h / 2, h / 2};
  for (int i = 0; i < 4; ++i) out.push_back({cx + c * lx[i] - s * ly[i], cy + s * lx[i] + c * ly[i]});
  return out;
}

inline bool inside(const std::vector<P>& poly, P q, double tol) {
  const double sign = shoelace(poly) >= 0 ? 1.0 : -1.0;
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (sign * cross(poly[i], poly[(i + 1) % poly.size()], q) < -tol) return false;
  return true;
}

// Overlap of two convex polygons: gather contained vertices and edge
// crossings, sort them by angle about their mean, take the area.
inline double overlap(const std::vector<P>& a, const std::vector<P>& b) {
  double scale = 0.0;
  for (const P& p : a) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  for (const P& p : b) scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  const double tol = 1e-12 * std::max(1.0, scale * scale);
  std::vector<P> pts;
  for (const P& p : a)
    if (inside(b, p, tol)) pts.push_back(p);
  for (const P& p : b)
    if (inside(a, p, tol)) pts.push_back(p);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const P p1 = a[i], p2 = a[(i + 1) % a.size()];
    for (std::size_t j = 0; j < b.size(); ++j) {
      const P q1 = b[j], q2 = b[(j + 1) % b.size()];
      const double rx = p2.x - p1.x, ry = p2.y - p1.y;
      const double sx = q2.x - q1.x, sy = q2.y - q1.y;
      const double den = rx * sy - ry * sx;
      if (std::abs(den) < 1e-300) continue;
      const double t = ((q1.x - p1.x) * sy - (q1.y - p1.y) * sx) / den;
      const double u = ((q1.x - p1.x) * ry - (q1.y - p1.y) * rx) / den;
      if (t >= 0 && t <= 1 && u >= 0 && u <= 1) pts.push_back({p1.x + t * rx, p1.y + t * ry});
    }
  }
  if (pts.size() < 3) return 0.0;
  P m{0, 0};
  for (const P& p : pts) {
    m.x += p.x / pts.size();
    m.y += p.y / pts.size();
  }
  std::sort(pts.begin(), pts.end(),
            [&](P l, P r) { return std::atan2(l.y - m.y, l.x - m.x) < std::atan2(r.y - m.y, r.x - m.x); });
  return std::abs(shoelace(pts));
}

inline double iou(const std::vector<P>& a, const std::vector<P>& b) {
  const double i = overlap(a, b);
  const double u = std::abs(shoelace(a)) + std::abs(shoelace(b)) - i;
  return u > 0 ? i / u : 1.0;
}

// Rectangle inscribed in the w x h box [0,w] x [0,h] through (a,0), (w,b),
// (w-a,h), (0,h-b). It is a rectangle iff b (h - b) = a (w - a).
struct Inscribed {
  double w, h, a, b;
  std::vector<P> corners() const { return {{a, 0}, {w, b}, {w - a, h}, {0, h - b}}; }
  double area() const { return w * h - a * (h - b) - (w - a) * b; }
  double ra() const { return area() / (w * h); }
  // Normalized second-smallest coordinate along the longer HBB side.
  double rs() const { return w >= h ? std::min(b, h - b) / h : std::min(a, w - a) / w; }
  double side1() const { return std::hypot(w - a, b); }
  double side2() const { return std::hypot(a, h - b); }
};

// Picks a on the long side and solves for b, taking either root.
inline Inscribed inscribed(double w, double h, double frac, bool upper_root) {
  if (w >= h) {
    const double amax = (w - std::sqrt(w * w - h * h)) / 2.0;  // largest a with a real b
    const double a = frac * amax;
    const double disc = std::sqrt(std::max(0.0, h * h - 4.0 * a * (w - a)));
    return {w, h, a, upper_root ? (h + disc) / 2.0 : (h - disc) / 2.0};
  }
  const Inscribed t = inscribed(h, w, frac, upper_root);
  return {w, h, t.b, t.a};
}

}  // namespace oracle
