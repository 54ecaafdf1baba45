// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "cobb/geometry.hpp"
#include "oracle.hpp"

inline std::vector<oracle::P> to_oracle(const cobb::OrientedBox& b) {
  return oracle::rect(b.cx(), b.cy(), b.w_side(), b.h_side(), b.theta());
}

inline std::vector<oracle::P> to_oracle(const cobb::ConvexQuad& q) {
  std::vector<oracle::P> out;
  for (const cobb::Point2& p : q.vertices()) out.push_back({p.x, p.y});
  return out;
}

inline cobb::ConvexQuad to_quad(const std::vector<oracle::P>& p) {
  return cobb::ConvexQuad({{{p[0].x, p[0].y}, {p[1].x, p[1].y}, {p[2].x, p[2].y}, {p[3].x, p[3].y}}});
}
