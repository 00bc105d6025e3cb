#include "grpd/bump.hpp"

#include <cmath>

namespace grpd {

double mollifier_step(double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  const double a = std::exp(-1.0 / t);
  const double b = std::exp(-1.0 / (1.0 - t));
  return a / (a + b);
}

BumpScalar::BumpScalar(Manifold m, Vec center, double r_in, double r_out)
    : manifold_(std::move(m)), center_(manifold_.wrap(std::move(center))),
      r_in_(r_in), r_out_(r_out) {
  if (!(0.0 < r_in && r_in < r_out))
    throw ParamError("bump_scalar: need 0 < r_in < r_out");
  if (manifold_.is_torus()) {
    for (int i = 0; i < manifold_.dim; ++i)
      if (!(r_out < 0.5 * manifold_.hi[i]))
        throw ParamError("bump_scalar: r_out must be < half the smallest period");
  }
  if (center_.size() != manifold_.dim)
    throw ParamError("bump_scalar: center dim mismatch");
}

double BumpScalar::profile(double dist) const {
  return mollifier_step((r_out_ - dist) / (r_out_ - r_in_));
}

double BumpScalar::operator()(const Vec& p) const {
  return profile(manifold_.distance(center_, p));
}

BumpScalar bump_scalar(const Manifold& m, const Vec& center, double r_in,
                       double r_out) {
  return BumpScalar(m, center, r_in, r_out);
}

}  // namespace grpd
