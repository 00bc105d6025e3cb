#include "grpd/region.hpp"

#include <algorithm>
#include <cmath>

namespace grpd {

Region Region::whole(const Manifold& m) {
  Region r;
  r.manifold_ = m;
  r.contains_ = [](const Vec&) { return true; };
  r.clearance_ = [](const Vec&) { return std::numeric_limits<double>::infinity(); };
  r.bbox_lo_ = m.lo;
  r.bbox_hi_ = m.hi;
  r.whole_ = true;
  return r;
}

Region Region::ball(const Manifold& m, const Vec& center, double radius) {
  if (!(radius > 0)) throw ParamError("ball region: radius must be > 0");
  if (center.size() != m.dim) throw ParamError("ball region: center dim mismatch");
  if (m.is_torus()) {
    for (int i = 0; i < m.dim; ++i)
      if (!(radius < 0.5 * m.hi[i]))
        throw ParamError("ball region: radius must be < half the smallest period");
  }
  Region r;
  r.manifold_ = m;
  const Vec c = m.wrap(center);
  r.contains_ = [m, c, radius](const Vec& p) { return m.distance(c, p) < radius; };
  r.clearance_ = [m, c, radius](const Vec& p) {
    return std::max(0.0, radius - m.distance(c, p));
  };
  if (m.is_torus()) {
    r.bbox_lo_ = m.lo;
    r.bbox_hi_ = m.hi;
  } else {
    r.bbox_lo_ = c.array() - radius;
    r.bbox_hi_ = c.array() + radius;
  }
  return r;
}

Region Region::box(const Manifold& m, const Vec& lo, const Vec& hi) {
  if (lo.size() != m.dim || hi.size() != m.dim)
    throw ParamError("box region: bounds dim mismatch");
  for (int i = 0; i < m.dim; ++i) {
    if (!(lo[i] < hi[i])) throw ParamError("box region: empty bounds");
    if (m.is_torus() && !(hi[i] - lo[i] <= m.hi[i]))
      throw ParamError("box region: width exceeds period");
  }
  Region r;
  r.manifold_ = m;
  // On the torus the box is anchored at lo; membership tested on the
  // representative wrapped into [lo, lo + period).
  r.contains_ = [m, lo, hi](const Vec& p) {
    for (int i = 0; i < m.dim; ++i) {
      double x = p[i];
      if (m.is_torus()) {
        const double P = m.hi[i];
        x = lo[i] + (x - lo[i]) - P * std::floor((x - lo[i]) / P);
      }
      if (!(x > lo[i] && x < hi[i])) return false;
    }
    return true;
  };
  auto contains_copy = r.contains_;
  r.clearance_ = [m, lo, hi, contains_copy](const Vec& p) {
    if (!contains_copy(p)) return 0.0;
    double c = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m.dim; ++i) {
      double x = p[i];
      if (m.is_torus()) {
        const double P = m.hi[i];
        x = lo[i] + (x - lo[i]) - P * std::floor((x - lo[i]) / P);
      }
      c = std::min(c, std::min(x - lo[i], hi[i] - x));
    }
    return c;
  };
  r.bbox_lo_ = lo;
  r.bbox_hi_ = hi;
  return r;
}

Region Region::complement_of_points(const Manifold& m, std::vector<Vec> pts) {
  Region r;
  r.manifold_ = m;
  auto dist_to_set = [m, pts](const Vec& p) {
    double d = std::numeric_limits<double>::infinity();
    for (const Vec& q : pts) d = std::min(d, m.distance(p, q));
    return d;
  };
  r.contains_ = [dist_to_set](const Vec& p) { return dist_to_set(p) > 0.0; };
  r.clearance_ = dist_to_set;
  r.bbox_lo_ = m.lo;
  r.bbox_hi_ = m.hi;
  return r;
}

Region Region::custom(const Manifold& m, std::function<bool(const Vec&)> contains,
                      std::function<double(const Vec&)> clearance, Vec bbox_lo,
                      Vec bbox_hi) {
  Region r;
  r.manifold_ = m;
  r.contains_ = std::move(contains);
  r.clearance_ = std::move(clearance);
  r.bbox_lo_ = std::move(bbox_lo);
  r.bbox_hi_ = std::move(bbox_hi);
  return r;
}

Vec Region::sample(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Vec p(bbox_lo_.size());
    for (int i = 0; i < p.size(); ++i)
      p[i] = bbox_lo_[i] + (bbox_hi_[i] - bbox_lo_[i]) * u(rng);
    p = manifold_.wrap(p);
    if (contains_(p)) return p;
  }
  throw ParamError("region sampling failed: interior has negligible measure");
}

}  // namespace grpd
