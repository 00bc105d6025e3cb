#pragma once

#include <memory>
#include <optional>

#include "grpd/bump.hpp"
#include "grpd/curve.hpp"
#include "grpd/region.hpp"

namespace grpd {

/// Compactly supported vector field on the base manifold. Evaluation is the
/// exact zero vector whenever the support region does not contain the query.
class CompactVectorField {
 public:
  CompactVectorField() = default;

  /// chi(dist to curve) * curve velocity at the nearest parameter; equals the
  /// curve velocity on the curve itself. chi is the bump profile with
  /// r_out = rho, r_in = rho/2.
  static CompactVectorField tube(Curve curve, double rho);

  /// chi_{center,r_in,r_out} * direction (constant direction bump field).
  static CompactVectorField bump(const Manifold& m, Vec center, double r_in,
                                 double r_out, Vec direction);

  Vec operator()(const Vec& p) const;
  const Region& support() const { return support_; }
  const Manifold& manifold() const { return manifold_; }

  /// Sampled Lipschitz estimate on the support (seeded, cached).
  double lipschitz() const;

  bool is_tube() const { return tube_ != nullptr; }
  const Curve& tube_curve() const;
  double tube_rho() const;

  bool is_bump() const { return bump_.has_value(); }
  const BumpScalar& bump_profile() const { return *bump_; }
  const Vec& bump_direction() const { return bump_dir_; }

 private:
  struct TubeData {
    Curve curve;
    double rho;
    BumpScalar profile;
    Vec bbox_lo, bbox_hi;  // lifted curve bbox inflated by rho
  };

  Manifold manifold_;
  Region support_;
  std::shared_ptr<const TubeData> tube_;
  std::optional<BumpScalar> bump_;
  Vec bump_dir_;
  mutable double lipschitz_ = -1.0;
};

/// Constructs the tube field after validating injectivity and reach at rho.
/// Throws InjectivityError ("curve not injective") or ReachError ("tube
/// radius too large").
CompactVectorField tube_field(const Curve& curve, double rho);

/// Classical fixed-step RK4 integration of x' = X(x) for time t (last
/// partial step shortened, negative t integrates backwards). Points outside
/// the support are returned unchanged without integration.
Vec flow(const CompactVectorField& X, double t, const Vec& x,
         double h = kDefaultStep);

/// One RK4 step decomposed into stage points and stage derivatives, so that
/// transported quantities can integrate along the identical base schedule.
struct Rk4Stages {
  Vec k1, k2, k3, k4;  // stage derivatives
  Vec y2, y3, y4;      // stage points (y1 is the step start)
};
Rk4Stages rk4_stages(const CompactVectorField& X, const Vec& y, double dt);

/// Step count schedule shared by all transported integrations: full steps of
/// h plus one shortened final step.
struct StepSchedule {
  int n_full;
  double h_signed;
  double h_last;
};
StepSchedule step_schedule(double t, double h);

}  // namespace grpd
