// SPDX-License-Identifier: Apache-2.0
#include "cobb/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cobb/codec.hpp"
#include "cobb/errors.hpp"

namespace cobb {

namespace {

constexpr double kAnchorOffset = 1e-9;

double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

// Box with the given side ratio w/h and angle, unit diagonal, at the origin.
OrientedBox shaped(double aspect, double theta) {
  const double s = std::sqrt(aspect);
  return normalize_box(OrientedBox(0.0, 0.0, s, 1.0 / s, theta));
}

OrientedBox raw_box(std::mt19937_64& rng, double aspect, double theta) {
  const double cx = uniform(rng, -50.0, 50.0);
  const double cy = uniform(rng, -50.0, 50.0);
  const double size = log_uniform(rng, 0.5, 50.0);
  const double s = std::sqrt(aspect);
  return OrientedBox(cx, cy, size * s, size / s, theta);
}

double inf_norm_diff(std::span<const double> a, std::span<const double> b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

bool non_increasing(const std::vector<StepGap>& s) {
  for (std::size_t i = 1; i < s.size(); ++i)
    if (!(s[i].gap <= s[i - 1].gap * (1.0 + 1e-9) + 1e-15)) return false;
  return true;
}

std::vector<double> unit_direction(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> n(0.0, 1.0);
  std::vector<double> d(dim);
  double norm = 0.0;
  while (norm == 0.0) {
    for (double& x : d) x = n(rng);
    norm = 0.0;
    for (double x : d) norm += x * x;
  }
  norm = std::sqrt(norm);
  for (double& x : d) x /= norm;
  return d;
}

std::uint64_t direction_seed(std::uint64_t seed) { return seed ^ 0x9e3779b97f4a7c15ULL; }

template <typename GapFn>
MetricResult sweep(Metric m, const ProbeConfig& cfg, double threshold, GapFn gap_of) {
  cfg.validate();
  const std::vector<Sample> samples = make_samples(cfg);
  MetricResult r;
  r.metric = m;
  for (double delta : cfg.steps) {
    double worst = -1.0;
    Witness w;
    for (const Sample& s : samples) {
      const double g = gap_of(s.box, delta);
      if (g > worst) {
        worst = g;
        w = Witness{s.family, s.box, delta, g, {}};
      }
    }
    r.steps.push_back({delta, worst});
    r.witness = w;
  }
  r.pass = non_increasing(r.steps) && r.steps.back().gap <= threshold;
  return r;
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::near_horizontal: return "near-horizontal";
    case Family::near_square: return "near-square";
    case Family::near_diagonal: return "near-diagonal";
    case Family::random: return "random";
  }
  return "random";
}

Family parse_family(std::string_view name) {
  for (Family f : {Family::near_horizontal, Family::near_square, Family::near_diagonal, Family::random})
    if (family_name(f) == name) return f;
  throw InvalidArgument("unknown family: " + std::string(name));
}

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::target_rotation: return "target_rotation";
    case Metric::target_aspect: return "target_aspect";
    case Metric::loss_rotation: return "loss_rotation";
    case Metric::loss_aspect: return "loss_aspect";
    case Metric::completeness: return "decoding_completeness";
    case Metric::robustness: return "decoding_robustness";
  }
  return "";
}

void ProbeConfig::validate() const {
  if (steps.empty()) throw InvalidArgument("at least one step is required");
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (!std::isfinite(steps[i]) || steps[i] <= 0.0) throw InvalidArgument("steps must be positive");
    if (i > 0 && !(steps[i] < steps[i - 1])) throw InvalidArgument("steps must be strictly decreasing");
  }
  if (samples < 1) throw InvalidArgument("samples must be at least 1");
  if (families.empty()) throw InvalidArgument("at least one family is required");
  if (directions < 1) throw InvalidArgument("directions must be at least 1");
}

const MetricResult& MetricReport::at(Metric m) const {
  for (const MetricResult& r : metrics)
    if (r.metric == m) return r;
  throw InvalidArgument("metric not in report");
}

bool MetricReport::all_pass() const {
  return std::all_of(metrics.begin(), metrics.end(), [](const MetricResult& r) { return r.pass; });
}

OrientedBox normalize_box(const OrientedBox& box) {
  const double d = box.diagonal();
  return OrientedBox(0.0, 0.0, box.w_side() / d, box.h_side() / d, box.theta());
}

OrientedBox random_box(std::mt19937_64& rng) {
  const double theta = uniform(rng, 0.0, kPi);
  const double aspect = log_uniform(rng, 1.0 / 8.0, 8.0);
  const double size = log_uniform(rng, 1.0, 100.0);
  const double cx = uniform(rng, -100.0, 100.0);
  const double cy = uniform(rng, -100.0, 100.0);
  const double s = std::sqrt(aspect);
  return OrientedBox(cx, cy, size * s, size / s, theta);
}

std::vector<Sample> make_samples(const ProbeConfig& cfg) {
  cfg.validate();
  std::mt19937_64 rng(cfg.seed);
  std::vector<Sample> out;
  for (Family f : cfg.families) {
    switch (f) {
      case Family::near_horizontal:
        for (double a : {2.0, 0.5})
          for (double t : {kAnchorOffset, -kAnchorOffset}) out.push_back({f, shaped(a, t)});
        break;
      case Family::near_square:
        for (double a : {1.0 - kAnchorOffset, 1.0 + kAnchorOffset}) out.push_back({f, shaped(a, kPi / 6.0)});
        break;
      case Family::near_diagonal:
        for (double a : {1.0, 2.0})
          for (double t : {kAnchorOffset, -kAnchorOffset}) out.push_back({f, shaped(a, std::atan(1.0 / a) + t)});
        break;
      case Family::random: break;
    }
    for (std::size_t i = 0; i < cfg.samples; ++i) {
      double aspect = 1.0, theta = 0.0;
      switch (f) {
        case Family::near_horizontal:
          aspect = log_uniform(rng, 1.0 / 6.0, 6.0);
          theta = uniform(rng, -1e-3, 1e-3);
          break;
        case Family::near_square:
          aspect = uniform(rng, 1.0 - 1e-3, 1.0 + 1e-3);
          theta = uniform(rng, 0.0, kPi);
          break;
        case Family::near_diagonal: {
          aspect = log_uniform(rng, 1.0, 6.0);
          const double sign = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
          theta = sign * std::atan(1.0 / aspect) + uniform(rng, -1e-3, 1e-3);
          break;
        }
        case Family::random:
          aspect = log_uniform(rng, 1.0 / 6.0, 6.0);
          theta = uniform(rng, 0.0, kPi);
          break;
      }
      out.push_back({f, normalize_box(raw_box(rng, aspect, theta))});
    }
  }
  return out;
}

double target_gap(const Codec& codec, Transform t, const OrientedBox& x, double delta) {
  const Encoding e0 = codec.encode(x);
  if (t == Transform::rotation) return inf_norm_diff(e0.values, codec.encode(rotate(x, delta)).values);
  double sum = 0.0;
  for (const OrientedBox& y : adjust_side(x, 1.0 + delta)) sum += inf_norm_diff(e0.values, codec.encode(y).values);
  return sum;
}

double loss_gap(const Codec& codec, Transform t, const OrientedBox& x, double delta) {
  const Encoding e0 = codec.encode(x);
  if (t == Transform::rotation) return codec.loss(e0.values, codec.encode(rotate(x, delta)).values);
  double sum = 0.0;
  for (const OrientedBox& y : adjust_side(x, 1.0 + delta)) sum += codec.loss(e0.values, codec.encode(y).values);
  return sum;
}

double decode_error(const Codec& codec, const OrientedBox& x, std::span<const double> direction, double magnitude) {
  std::vector<double> v = codec.encode(x).values;
  if (direction.size() != v.size()) throw InvalidArgument("direction has the wrong length");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += magnitude * direction[i];
  try {
    return 1.0 - iou_oracle(x, codec.decode(std::span<const double>(v)));
  } catch (const std::exception&) {
    return 1.0;
  }
}

MetricResult probe_target_continuity(const Codec& codec, Transform t, const ProbeConfig& cfg) {
  const Metric m = t == Transform::rotation ? Metric::target_rotation : Metric::target_aspect;
  return sweep(m, cfg, cfg.target_threshold,
               [&](const OrientedBox& x, double d) { return target_gap(codec, t, x, d); });
}

MetricResult probe_loss_continuity(const Codec& codec, Transform t, const ProbeConfig& cfg) {
  const Metric m = t == Transform::rotation ? Metric::loss_rotation : Metric::loss_aspect;
  return sweep(m, cfg, cfg.loss_threshold, [&](const OrientedBox& x, double d) { return loss_gap(codec, t, x, d); });
}

MetricResult check_decoding_completeness(const Codec& codec, const ProbeConfig& cfg) {
  const std::vector<Sample> samples = make_samples(cfg);
  MetricResult r;
  r.metric = Metric::completeness;
  double worst_iou = 2.0;
  Witness w;
  for (const Sample& s : samples) {
    double iou = 0.0;
    try {
      iou = iou_oracle(s.box, codec.decode(codec.encode(s.box)));
    } catch (const std::exception&) {
      iou = 0.0;
    }
    if (iou < worst_iou) {
      worst_iou = iou;
      w = Witness{s.family, s.box, 0.0, 1.0 - iou, {}};
    }
  }
  r.steps.push_back({0.0, 1.0 - worst_iou});
  r.witness = w;
  r.pass = worst_iou >= 1.0 - cfg.completeness_threshold;
  return r;
}

namespace {

struct Directions {
  std::vector<Sample> samples;
  std::vector<std::vector<std::vector<double>>> dirs;  // per sample, per direction
};

Directions directions_for(const Codec& codec, const ProbeConfig& cfg) {
  Directions d;
  d.samples = make_samples(cfg);
  std::mt19937_64 rng(direction_seed(cfg.seed));
  for (std::size_t i = 0; i < d.samples.size(); ++i) {
    std::vector<std::vector<double>> per;
    for (std::size_t k = 0; k < cfg.directions; ++k) per.push_back(unit_direction(rng, codec.dim()));
    d.dirs.push_back(std::move(per));
  }
  return d;
}

RobustnessProbe worst_at(const Codec& codec, const Directions& d, double magnitude) {
  RobustnessProbe p;
  p.worst = -1.0;
  for (std::size_t i = 0; i < d.samples.size(); ++i) {
    for (const std::vector<double>& dir : d.dirs[i]) {
      const double e = decode_error(codec, d.samples[i].box, dir, magnitude);
      if (e > p.worst) {
        p.worst = e;
        p.witness = Witness{d.samples[i].family, d.samples[i].box, magnitude, e, dir};
      }
    }
  }
  return p;
}

}  // namespace

MetricResult probe_decoding_robustness(const Codec& codec, const ProbeConfig& cfg) {
  cfg.validate();
  const Directions d = directions_for(codec, cfg);
  MetricResult r;
  r.metric = Metric::robustness;
  for (double xi : cfg.steps) {
    const RobustnessProbe p = worst_at(codec, d, xi);
    r.steps.push_back({xi, p.worst});
    r.witness = p.witness;
  }
  const double first = r.steps.front().gap;
  const double last = r.steps.back().gap;
  r.pass = non_increasing(r.steps) &&
           (last <= cfg.robustness_floor || (r.steps.size() > 1 && last <= cfg.robustness_contraction * first));
  return r;
}

RobustnessProbe worst_decoding_error(const Codec& codec, const ProbeConfig& cfg, double perturbation) {
  if (!std::isfinite(perturbation) || perturbation < 0.0) throw InvalidArgument("perturbation must be nonnegative");
  cfg.validate();
  return worst_at(codec, directions_for(codec, cfg), perturbation);
}

double replay(const Codec& codec, Metric m, const Witness& w) {
  switch (m) {
    case Metric::target_rotation: return target_gap(codec, Transform::rotation, w.box, w.delta);
    case Metric::target_aspect: return target_gap(codec, Transform::aspect, w.box, w.delta);
    case Metric::loss_rotation: return loss_gap(codec, Transform::rotation, w.box, w.delta);
    case Metric::loss_aspect: return loss_gap(codec, Transform::aspect, w.box, w.delta);
    case Metric::completeness: return 1.0 - iou_oracle(w.box, codec.decode(codec.encode(w.box)));
    case Metric::robustness: return decode_error(codec, w.box, w.direction, w.delta);
  }
  return 0.0;
}

double nae(std::span<const double> predictions, std::span<const double> truths) {
  if (truths.empty() || predictions.size() != truths.size())
    throw InvalidArgument("predictions and truths must be non-empty and of equal length");
  const auto [lo, hi] = std::minmax_element(truths.begin(), truths.end());
  const double range = *hi - *lo;
  if (!(range > 0.0)) throw UndefinedNormalization("truths are constant");
  double sum = 0.0;
  for (std::size_t i = 0; i < truths.size(); ++i) {
    const double d = predictions[i] - truths[i];
    sum += d * d;
  }
  return sum / static_cast<double>(truths.size()) / (range * range);
}

MetricReport audit_codec(const Codec& codec, const ProbeConfig& cfg) {
  MetricReport rep;
  rep.codec = codec.name();
  rep.seed = cfg.seed;
  rep.metrics.push_back(probe_target_continuity(codec, Transform::rotation, cfg));
  rep.metrics.push_back(probe_target_continuity(codec, Transform::aspect, cfg));
  rep.metrics.push_back(probe_loss_continuity(codec, Transform::rotation, cfg));
  rep.metrics.push_back(probe_loss_continuity(codec, Transform::aspect, cfg));
  rep.metrics.push_back(check_decoding_completeness(codec, cfg));
  rep.metrics.push_back(probe_decoding_robustness(codec, cfg));
  if (codec.name() == "longedge") {
    const OrientedBox sq(0.0, 0.0, 1.0, 1.0, kPi / 6.0);
    const OrientedBox turned = rotate(sq, kPi / 2.0);
    const double a = codec.encode(sq).values[4];
    const double b = codec.encode(turned).values[4];
    rep.notes.push_back("square tie: the first side sets the angle, so one square encodes to theta " +
                        std::to_string(a) + " or " + std::to_string(b) +
                        " depending on side labels; both decode to the same square");
  }
  return rep;
}

std::vector<MetricReport> run_audit(const std::vector<const Codec*>& codecs, const ProbeConfig& cfg) {
  cfg.validate();
  std::vector<MetricReport> out;
  for (const Codec* c : codecs) out.push_back(audit_codec(*c, cfg));
  return out;
}

IoUCheck iou_matrix_check(std::size_t samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  IoUCheck out;
  for (std::size_t n = 0; n < samples; ++n) {
    const double w = log_uniform(rng, 0.1, 10.0);
    const double h = log_uniform(rng, 0.1, 10.0);
    const double rs = n % 2 == 0 ? log_uniform(rng, 1e-7, 0.5) : uniform(rng, 1e-7, 0.5);
    const CandidateSet cand = four_candidates({0.0, 0.0, w, h}, rs);
    const IoUMatrix m = iou_matrix(w, h, rs);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = i + 1; j < 4; ++j) {
        const double err = std::abs(m[i][j] - iou_oracle(cand[i], cand[j]));
        if (err > out.max_error) out = IoUCheck{err, w, h, rs};
      }
    }
  }
  return out;
}

}  // namespace cobb
