// SPDX-License-Identifier: Apache-2.0
#include "cobb/targets.hpp"

#include <algorithm>
#include <cmath>

#include "cobb/errors.hpp"

namespace cobb {

namespace {

std::size_t argmax(const std::array<double, 4>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

RaBranch branch_of(std::size_t cls) { return (cls == 0 || cls == 3) ? RaBranch::below : RaBranch::above; }

void check_lambda(double lambda) {
  if (!std::isfinite(lambda) || lambda <= 0.0) throw InvalidArgument("score power must be positive");
}

}  // namespace

Proposal Proposal::horizontal(double xp, double yp, double wp, double hp) {
  Proposal p{ProposalKind::horizontal, xp, yp, wp, hp, 0.0};
  p.validate();
  return p;
}

Proposal Proposal::oriented(double xp, double yp, double wp, double hp, double theta_p) {
  Proposal p{ProposalKind::oriented, xp, yp, wp, hp, theta_p};
  p.validate();
  return p;
}

void Proposal::validate() const {
  if (!std::isfinite(xp) || !std::isfinite(yp) || !std::isfinite(theta_p))
    throw InvalidArgument("proposal fields must be finite");
  if (!std::isfinite(wp) || !std::isfinite(hp) || wp <= 0.0 || hp <= 0.0)
    throw DegenerateGeometry("proposal extents must be positive");
}

double default_lambda(TargetVariant variant) { return variant == TargetVariant::sig ? 2.0 : 1.0; }

double rt_from_rs(double rs, TargetVariant variant, RaBranch branch) {
  if (variant == TargetVariant::sig) return 2.0 * rs;
  if (branch == RaBranch::below) {
    if (!(rs > 0.0)) throw DegenerateGeometry("sliding ratio 0 has no logarithmic target below one half");
    return 1.0 + std::log2(rs);
  }
  return 1.0 + std::log2(1.0 - rs);
}

double rs_from_rt(double rt, TargetVariant variant) {
  if (std::isnan(rt)) throw InvalidArgument("sliding target must not be NaN");
  if (variant == TargetVariant::sig) return std::clamp(rt, 0.0, 1.0) / 2.0;
  rt = std::min(rt, 1.0);
  return rt < 0.0 ? std::exp2(rt - 1.0) : 1.0 - std::exp2(rt - 1.0);
}

TargetVector target_from_vector(const CobbVector& v, TargetVariant variant, double lambda) {
  check_lambda(lambda);
  if (!(v.w > 0.0) || !(v.h > 0.0)) throw DegenerateGeometry("HBB extents must be positive");
  TargetVector t;
  t.variant = variant;
  t.lambda = lambda;
  t.tx = v.xc;
  t.ty = v.yc;
  t.tw = std::log(v.w);
  t.th = std::log(v.h);
  t.rt = rt_from_rs(v.rs, variant, branch_of(argmax(v.scores)));
  for (std::size_t i = 0; i < 4; ++i) t.st[i] = std::pow(std::clamp(v.scores[i], 0.0, 1.0), lambda);
  return t;
}

TargetVector encode_target(const OrientedBox& gt, const Proposal& proposal, TargetVariant variant,
                           double lambda) {
  proposal.validate();
  check_lambda(lambda);
  OrientedBox g = gt;
  if (proposal.kind == ProposalKind::oriented)
    g = rotate_about(gt, {proposal.xp, proposal.yp}, -proposal.theta_p);
  const CobbVector v = encode(g);
  TargetVector t;
  t.variant = variant;
  t.lambda = lambda;
  t.tx = (v.xc - proposal.xp) / proposal.wp;
  t.ty = (v.yc - proposal.yp) / proposal.hp;
  t.tw = std::log(v.w / proposal.wp);
  t.th = std::log(v.h / proposal.hp);
  t.rt = rt_from_rs(v.rs, variant, branch_of(argmax(v.scores)));
  for (std::size_t i = 0; i < 4; ++i) t.st[i] = std::pow(v.scores[i], lambda);
  return t;
}

TargetVector encode_target(const OrientedBox& gt, const Proposal& proposal, TargetVariant variant) {
  return encode_target(gt, proposal, variant, default_lambda(variant));
}

OrientedBox decode_target(const TargetVector& t, const Proposal& proposal) {
  proposal.validate();
  const double w = proposal.wp * std::exp(t.tw);
  const double h = proposal.hp * std::exp(t.th);
  if (!std::isfinite(w) || !std::isfinite(h) || w <= 0.0 || h <= 0.0)
    throw InvalidArgument("recovered HBB extents must be positive");
  const double xc = proposal.xp + t.tx * proposal.wp;
  const double yc = proposal.yp + t.ty * proposal.hp;
  for (double s : t.st)
    if (!std::isfinite(s)) throw InvalidArgument("scores must be finite");
  const double rs = rs_from_rt(t.rt, t.variant);
  const CandidateSet cand = four_candidates({xc, yc, w, h}, rs);
  const OrientedBox box = min_area_rect(cand[argmax(t.st)]);
  if (proposal.kind == ProposalKind::oriented)
    return rotate_about(box, {proposal.xp, proposal.yp}, proposal.theta_p);
  return box;
}

double smooth_l1(double d, double beta) {
  const double a = std::abs(d);
  if (beta <= 0.0) return a;
  return a < beta ? 0.5 * a * a / beta : a - 0.5 * beta;
}

double cobb_loss(const TargetVector& pred, const TargetVector& target, const LossWeights& weights) {
  if (pred.variant != target.variant || pred.lambda != target.lambda)
    throw InvalidArgument("loss needs matching target variants");
  if (weights.w2 < 0.0 || weights.w3 < 0.0 || weights.w4 < 0.0 || weights.smooth_l1_beta < 0.0)
    throw InvalidArgument("loss weights must be nonnegative");
  const double b = weights.smooth_l1_beta;
  const double box = smooth_l1(pred.tx - target.tx, b) + smooth_l1(pred.ty - target.ty, b) +
                     smooth_l1(pred.tw - target.tw, b) + smooth_l1(pred.th - target.th, b);
  double score = 0.0;
  for (std::size_t i = 0; i < 4; ++i) score += smooth_l1(pred.st[i] - target.st[i], b);
  return weights.w2 * box + weights.w3 * smooth_l1(pred.rt - target.rt, b) + weights.w4 * score;
}

double sensitivity_probe(SensitivityVariant variant, double r, double eps, const HorizontalBox& hbb) {
  if (!std::isfinite(eps) || eps <= 0.0) throw InvalidArgument("eps must be positive");
  if (!std::isfinite(r) || r > 1.0 || r + eps > 1.0) throw InvalidArgument("parameter outside the variant domain");
  auto shape = [&](double x) {
    double rs;
    std::size_t cls;
    if (variant == SensitivityVariant::r_ln) {
      rs = rs_from_rt(x, TargetVariant::ln);
      cls = x < 0.0 ? 0 : 1;
    } else {
      const double ra = std::exp2(x - 1.0);
      rs = rs_from_ra(ra, hbb.w, hbb.h);
      cls = ra < 0.5 ? 0 : 1;
    }
    return four_candidates(hbb, rs)[cls];
  };
  return (1.0 - iou_oracle(shape(r), shape(r + eps))) / eps;
}

}  // namespace cobb
