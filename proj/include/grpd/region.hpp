#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "grpd/manifold.hpp"

namespace grpd {

/// An open subset of the base manifold, given by a membership predicate, a
/// lower bound on the distance to the complement (clearance, 0 outside), a
/// bounding box and a uniform rejection sampler of interior points.
class Region {
 public:
  Region() = default;

  static Region whole(const Manifold& m);
  static Region ball(const Manifold& m, const Vec& center, double radius);
  static Region box(const Manifold& m, const Vec& lo, const Vec& hi);
  static Region complement_of_points(const Manifold& m, std::vector<Vec> pts);

  /// Arbitrary region from callables; bbox given as a sampling window.
  static Region custom(const Manifold& m, std::function<bool(const Vec&)> contains,
                       std::function<double(const Vec&)> clearance, Vec bbox_lo,
                       Vec bbox_hi);

  bool contains(const Vec& p) const { return contains_(p); }
  double clearance(const Vec& p) const { return clearance_(p); }
  const Vec& bbox_lo() const { return bbox_lo_; }
  const Vec& bbox_hi() const { return bbox_hi_; }
  const Manifold& manifold() const { return manifold_; }

  /// Rejection sampling of interior points from the bbox. Throws ParamError
  /// after a large fixed budget (region of negligible measure).
  Vec sample(std::mt19937_64& rng) const;

  bool is_whole() const { return whole_; }

 private:
  Manifold manifold_;
  std::function<bool(const Vec&)> contains_;
  std::function<double(const Vec&)> clearance_;
  Vec bbox_lo_, bbox_hi_;
  bool whole_ = false;
};

}  // namespace grpd
