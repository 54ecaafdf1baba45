// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cobb/geometry.hpp"
#include "cobb/targets.hpp"

namespace cobb {

struct CodecDescriptor {
  std::string name;
  std::size_t dim = 0;
  bool decodes_exactly = true;
  std::vector<std::string> components;
};

struct Encoding {
  std::vector<double> values;
  std::shared_ptr<const CodecDescriptor> codec;
};

class Codec {
 public:
  virtual ~Codec() = default;

  const CodecDescriptor& descriptor() const { return *desc_; }
  const std::string& name() const { return desc_->name; }
  std::size_t dim() const { return desc_->dim; }

  virtual Encoding encode(const OrientedBox& box) const = 0;
  virtual OrientedBox decode(std::span<const double> values) const = 0;
  OrientedBox decode(const Encoding& e) const { return decode(std::span<const double>(e.values)); }
  // Componentwise smooth L1 (beta 1) unless a codec brings its own.
  virtual double loss(std::span<const double> a, std::span<const double> b) const;

 protected:
  explicit Codec(CodecDescriptor d);
  Encoding make(std::vector<double> values) const;
  void check_dim(std::span<const double> values) const;

 private:
  std::shared_ptr<const CodecDescriptor> desc_;
};

// (xc, yc, w, h, rs, s0..s3)
class CobbCodec : public Codec {
 public:
  explicit CobbCodec(TargetVariant variant = TargetVariant::sig);
  Encoding encode(const OrientedBox& box) const override;
  OrientedBox decode(std::span<const double> values) const override;
  using Codec::decode;
  double loss(std::span<const double> a, std::span<const double> b) const override;

 private:
  TargetVariant variant_;
};

// (cx, cy, w, h, theta) with theta in [-pi/4, pi/4)
class AcuteCodec : public Codec {
 public:
  AcuteCodec();
  Encoding encode(const OrientedBox& box) const override;
  OrientedBox decode(std::span<const double> values) const override;
  using Codec::decode;
};

// (cx, cy, long, short, theta) with theta of the long side in [-pi/2, pi/2);
// a square keeps the angle of its first side.
class LongEdgeCodec : public Codec {
 public:
  LongEdgeCodec();
  Encoding encode(const OrientedBox& box) const override;
  OrientedBox decode(std::span<const double> values) const override;
  using Codec::decode;
};

// Long-edge extents plus a periodic Gaussian label over angle bins.
class CslCodec : public Codec {
 public:
  explicit CslCodec(std::size_t bins = 90, double sigma_bins = 2.0);
  Encoding encode(const OrientedBox& box) const override;
  OrientedBox decode(std::span<const double> values) const override;
  using Codec::decode;

  std::size_t bins() const { return bins_; }
  double bin_width() const;
  double bin_center(std::size_t k) const;
  std::vector<double> label(double theta_long) const;

 private:
  std::size_t bins_;
  double sigma_bins_;
};

// (xc, yc, w, h, a_top, a_right, a_bottom, a_left). Each offset is the
// vertex position along its HBB side, measured from the corner met first
// when walking the HBB counterclockwise on screen: top from the top-right
// corner, left from top-left, bottom from bottom-left, right from
// bottom-right.
class GlidingVertexCodec : public Codec {
 public:
  GlidingVertexCodec();
  Encoding encode(const OrientedBox& box) const override;
  OrientedBox decode(std::span<const double> values) const override;
  using Codec::decode;
};

std::unique_ptr<Codec> make_codec(std::string_view name);
const std::vector<std::string>& codec_names();

}  // namespace cobb
