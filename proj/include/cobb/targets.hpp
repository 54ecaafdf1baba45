// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "cobb/codec.hpp"
#include "cobb/geometry.hpp"

namespace cobb {

enum class TargetVariant { sig, ln };
enum class ProposalKind { horizontal, oriented };

// theta_p is kept as given so that rotating a proposal by phi adds phi.
struct Proposal {
  ProposalKind kind = ProposalKind::horizontal;
  double xp = 0.0;
  double yp = 0.0;
  double wp = 1.0;
  double hp = 1.0;
  double theta_p = 0.0;

  static Proposal horizontal(double xp, double yp, double wp, double hp);
  static Proposal oriented(double xp, double yp, double wp, double hp, double theta_p);
  void validate() const;
};

struct TargetVector {
  double tx = 0.0;
  double ty = 0.0;
  double tw = 0.0;
  double th = 0.0;
  double rt = 0.0;
  std::array<double, 4> st{};
  TargetVariant variant = TargetVariant::sig;
  double lambda = 2.0;
};

struct LossWeights {
  double w2 = 1.0;  // box
  double w3 = 1.0;  // sliding ratio
  double w4 = 1.0;  // scores
  double smooth_l1_beta = 1.0;
};

double default_lambda(TargetVariant variant);

TargetVector encode_target(const OrientedBox& gt, const Proposal& proposal, TargetVariant variant,
                           double lambda);
TargetVector encode_target(const OrientedBox& gt, const Proposal& proposal,
                           TargetVariant variant = TargetVariant::sig);
OrientedBox decode_target(const TargetVector& t, const Proposal& proposal);

// Target for a CobbVector read against a unit proposal centered at the origin.
TargetVector target_from_vector(const CobbVector& v, TargetVariant variant, double lambda);

double rt_from_rs(double rs, TargetVariant variant, RaBranch branch);
double rs_from_rt(double rt, TargetVariant variant);

double smooth_l1(double d, double beta);
double cobb_loss(const TargetVector& pred, const TargetVector& target, const LossWeights& weights = {});

enum class SensitivityVariant { r_ln, f_ln_of_ra };

// (1 - IoU(dec(r), dec(r + eps))) / eps with decoding inside hbb.
double sensitivity_probe(SensitivityVariant variant, double r, double eps, const HorizontalBox& hbb);

}  // namespace cobb
