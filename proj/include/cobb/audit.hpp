// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cobb/codecs.hpp"
#include "cobb/geometry.hpp"

namespace cobb {

enum class Family { near_horizontal, near_square, near_diagonal, random };
enum class Transform { rotation, aspect };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

struct ProbeConfig {
  std::vector<double> steps{1e-3, 1e-4, 1e-5};
  std::vector<Family> families{Family::near_horizontal, Family::near_square, Family::near_diagonal,
                               Family::random};
  std::size_t samples = 64;  // random draws per family, on top of its anchor boxes
  std::uint64_t seed = 7;
  std::size_t directions = 16;  // perturbation directions per box for robustness

  double target_threshold = 1e-3;
  double loss_threshold = 1e-6;
  double completeness_threshold = 1e-6;
  // Robustness passes when the worst error shrinks by this factor across
  // the step sweep, or is already below the floor.
  double robustness_contraction = 0.5;
  double robustness_floor = 1e-9;

  void validate() const;
};

struct Sample {
  Family family;
  OrientedBox box;  // centered at the origin with unit diagonal
};

struct Witness {
  Family family = Family::random;
  OrientedBox box{0, 0, 1, 1, 0};
  double delta = 0.0;
  double gap = 0.0;
  std::vector<double> direction;  // unit perturbation, robustness only
};

struct StepGap {
  double delta = 0.0;
  double gap = 0.0;
};

enum class Metric { target_rotation, target_aspect, loss_rotation, loss_aspect, completeness, robustness };
inline constexpr Metric kAllMetrics[] = {Metric::target_rotation, Metric::target_aspect, Metric::loss_rotation,
                                         Metric::loss_aspect,     Metric::completeness,  Metric::robustness};

std::string_view metric_name(Metric m);

struct MetricResult {
  Metric metric = Metric::target_rotation;
  std::vector<StepGap> steps;
  bool pass = false;
  std::optional<Witness> witness;
};

struct MetricReport {
  std::string codec;
  std::uint64_t seed = 0;
  std::string norm = "inf";
  std::vector<MetricResult> metrics;
  std::vector<std::string> notes;

  const MetricResult& at(Metric m) const;
  bool all_pass() const;
};

OrientedBox normalize_box(const OrientedBox& box);
OrientedBox random_box(std::mt19937_64& rng);
std::vector<Sample> make_samples(const ProbeConfig& cfg);

// Gap of one box at one step; used by the probes and for witness replay.
double target_gap(const Codec& codec, Transform t, const OrientedBox& x, double delta);
double loss_gap(const Codec& codec, Transform t, const OrientedBox& x, double delta);
double decode_error(const Codec& codec, const OrientedBox& x, std::span<const double> direction, double magnitude);

MetricResult probe_target_continuity(const Codec& codec, Transform t, const ProbeConfig& cfg);
MetricResult probe_loss_continuity(const Codec& codec, Transform t, const ProbeConfig& cfg);
MetricResult check_decoding_completeness(const Codec& codec, const ProbeConfig& cfg);
MetricResult probe_decoding_robustness(const Codec& codec, const ProbeConfig& cfg);

struct RobustnessProbe {
  double worst = 0.0;
  std::optional<Witness> witness;
};
// Worst 1 - IoU at one perturbation magnitude over the configured families.
RobustnessProbe worst_decoding_error(const Codec& codec, const ProbeConfig& cfg, double perturbation);

double replay(const Codec& codec, Metric m, const Witness& w);

double nae(std::span<const double> predictions, std::span<const double> truths);

MetricReport audit_codec(const Codec& codec, const ProbeConfig& cfg);
std::vector<MetricReport> run_audit(const std::vector<const Codec*>& codecs, const ProbeConfig& cfg);

struct IoUCheck {
  double max_error = 0.0;
  double w = 0.0, h = 0.0, rs = 0.0;
};
// Closed-form IoU matrix against the polygon oracle on random (w, h, rs).
IoUCheck iou_matrix_check(std::size_t samples, std::uint64_t seed);

}  // namespace cobb
