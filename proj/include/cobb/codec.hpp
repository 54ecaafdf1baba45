// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <utility>

#include "cobb/geometry.hpp"

namespace cobb {

// Outer HBB, sliding ratio and the four IoU scores.
struct CobbVector {
  double xc = 0.0;
  double yc = 0.0;
  double w = 0.0;
  double h = 0.0;
  double rs = 0.0;
  std::array<double, 4> scores{};
};

// Candidate i puts its top vertex at xc + sx*xs and its right vertex at
// yc + sy*ys with (sx, sy) = (-,+), (+,+), (-,-), (+,-) for i = 0..3.
// Candidates 0 and 3 cover at most half of the HBB, 1 and 2 at least half.
using CandidateSet = std::array<ConvexQuad, 4>;

struct IoUMatrix {
  std::array<std::array<double, 4>, 4> m{};
  const std::array<double, 4>& operator[](std::size_t i) const { return m[i]; }
};

enum class RaBranch { below, above };

double sliding_ratio(const OrientedBox& box);
double sliding_ratio(const ConvexQuad& quad);
double acreage_ratio(const OrientedBox& box);

CandidateSet four_candidates(const HorizontalBox& hbb, double rs);
int classify(const OrientedBox& box);
IoUMatrix iou_matrix(double w, double h, double rs);

CobbVector encode(const OrientedBox& box);
OrientedBox decode(const CobbVector& v);

double rs_from_ra(double ra, double w, double h);
double ra_from_rs(double rs, double w, double h, RaBranch branch);
// Smallest and largest acreage ratio reachable inside a w x h HBB.
std::pair<double, double> attainable_ra(double w, double h);

}  // namespace cobb
