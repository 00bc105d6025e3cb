#pragma once

#include <memory>
#include <vector>

#include "grpd/manifold.hpp"

namespace grpd {

/// Piecewise-cubic (Hermite, finite-difference tangents) curve through an
/// ordered sample list with parameters in [0,1]. Samples are stored as a
/// continuous lift: on the torus consecutive samples are unwrapped by minimal
/// image, so evaluation is smooth across the period boundary. Evaluations
/// return lifted coordinates; wrap with the manifold when comparing to base
/// points.
class Curve {
 public:
  Curve() = default;

  /// Uniform parameters 0..1 over the samples.
  Curve(Manifold m, std::vector<Vec> samples);
  Curve(Manifold m, std::vector<Vec> samples, std::vector<double> params);

  int sample_count() const { return static_cast<int>(pts_.size()); }
  const std::vector<Vec>& samples() const { return pts_; }
  const std::vector<double>& params() const { return params_; }
  const Manifold& manifold() const { return manifold_; }

  Vec at(double t) const;
  Vec velocity(double t) const;
  Vec start() const { return pts_.front(); }
  Vec end() const { return pts_.back(); }

  /// Polyline length of a dense resampling.
  double length() const;

  /// New curve with the same image whose samples are spaced uniformly in arc
  /// length (parameter becomes arc length / total length).
  Curve arclength_reparam(int n_samples) const;

  /// Slice by sample indices [i0, i1], parameters renormalized to [0,1].
  Curve subcurve(int i0, int i1) const;

  struct Nearest {
    double t = 0;
    double dist = 0;
    Vec point;     // lifted coordinates local to the query
    Vec velocity;  // curve velocity at t
  };
  /// Nearest curve point to p (torus: minimal image per local segment),
  /// Newton-refined on the cubic after a dense polyline scan.
  Nearest nearest(const Vec& p) const;

  /// Conservative validity check for a tube of radius rho around this curve:
  /// sampled curvature radius >= rho and any two points separated by more
  /// than max(pi*rho, 3 mean spacings) of arc length are >= 2*rho apart.
  /// Returns an empty string when valid, otherwise a failure description
  /// starting with "self-intersection" or "reach".
  std::string tube_validity(double rho) const;

  /// Lifted bbox of the dense polyline.
  void dense_bbox(Vec& lo, Vec& hi) const;

 private:
  void build();
  const std::vector<Vec>& dense_points() const;
  const std::vector<double>& dense_params() const;

  Manifold manifold_;
  std::vector<double> params_;
  std::vector<Vec> pts_;       // lifted
  std::vector<Vec> tangents_;  // dp/dt at nodes

  struct DenseCache;
  std::shared_ptr<const DenseCache> dense_;  // built on construction
};

/// Ordered arcs whose sample lists concatenate to the input curve, each arc
/// injective and passing the tube validity check at radius eps. At most
/// sample_count arcs.
std::vector<Curve> split_injective(const Curve& curve, double eps);

}  // namespace grpd
