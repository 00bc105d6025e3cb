#pragma once

#include "grpd/manifold.hpp"

namespace grpd {

/// Smooth cutoff profile built from f(t) = exp(-1/t):
///   smoothstep(t) = f(t) / (f(t) + f(1-t)),
/// which is exactly 0 for t <= 0 and exactly 1 for t >= 1.
double mollifier_step(double t);

/// Maximum slope of mollifier_step over [0,1] (attained at t = 1/2).
inline constexpr double kMollifierMaxSlope = 2.0;

/// Radial bump: 1 on the closed ball of radius r_in around center, 0 outside
/// the open ball of radius r_out, smooth and monotone in the radius between.
class BumpScalar {
 public:
  BumpScalar(Manifold m, Vec center, double r_in, double r_out);

  double operator()(const Vec& p) const;
  double profile(double dist) const;

  const Vec& center() const { return center_; }
  double r_in() const { return r_in_; }
  double r_out() const { return r_out_; }

 private:
  Manifold manifold_;
  Vec center_;
  double r_in_, r_out_;
};

/// Free-function form matching the radial profile alone.
BumpScalar bump_scalar(const Manifold& m, const Vec& center, double r_in,
                       double r_out);

}  // namespace grpd
