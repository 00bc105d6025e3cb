#include "grpd/planner.hpp"

#include <algorithm>
#include <cmath>

namespace grpd {

namespace {

// Unit-sphere interpolation between unit vectors a and b (angle < pi).
std::vector<Vec> slerp_arc(const Vec& a, const Vec& b, double max_step_angle) {
  const double c = std::clamp(a.dot(b), -1.0, 1.0);
  const double theta = std::acos(c);
  std::vector<Vec> out;
  if (theta < 1e-12) return out;
  const int n = std::max(1, static_cast<int>(std::ceil(theta / max_step_angle)));
  const double s = std::sin(theta);
  for (int i = 1; i < n; ++i) {
    const double u = double(i) / double(n);
    out.push_back((std::sin((1.0 - u) * theta) * a + std::sin(u * theta) * b) / s);
  }
  return out;
}

Vec any_perpendicular(const Vec& a) {
  Vec w = Vec::Zero(a.size());
  int k = 0;
  for (int i = 1; i < a.size(); ++i)
    if (std::abs(a[i]) < std::abs(a[k])) k = i;
  w[k] = 1.0;
  w -= w.dot(a) * a;
  return w.normalized();
}

std::vector<Vec> densify(const std::vector<Vec>& wp, double max_spacing) {
  std::vector<Vec> out;
  out.push_back(wp.front());
  for (size_t i = 0; i + 1 < wp.size(); ++i) {
    const Vec d = wp[i + 1] - wp[i];
    const int n = std::max(1, static_cast<int>(std::ceil(d.norm() / max_spacing)));
    for (int k = 1; k <= n; ++k) out.push_back(wp[i] + (double(k) / n) * d);
  }
  return out;
}

}  // namespace

Curve plan_path(const Vec& x, const Vec& y, const std::vector<Vec>& avoid,
                double delta, const Region& U, const PlanOptions& opt) {
  const Manifold& m = U.manifold();
  if (x.size() != m.dim || y.size() != m.dim)
    throw ParamError("plan_path: point dim mismatch");
  if (!avoid.empty() && m.dim < 2)
    throw ParamError("dimension too low: avoidance needs dim >= 2");
  if (!avoid.empty() && !(delta > 0))
    throw ParamError("plan_path: delta must be > 0 with avoided points");
  if (!U.contains(x) || !U.contains(y))
    throw PlanError("no path found: endpoint outside region");
  for (const Vec& p : avoid) {
    if (m.distance(p, x) < delta || m.distance(p, y) < delta)
      throw ParamError("plan_path: avoided point within delta of an endpoint");
  }

  // Work in lifted coordinates anchored at x; obstacles are re-lifted next to
  // whichever waypoint is being tested.
  std::vector<Vec> wp = {x, x + m.signed_delta(x, y)};
  const double R = 2.0 * delta;

  for (int round = 0; round <= opt.retry_budget; ++round) {
    const double seg_len = avoid.empty() ? (wp[1] - wp[0]).norm() / 8.0 + 1e-9
                                         : delta / 4.0;
    std::vector<Vec> line = densify(wp, seg_len);

    // Worst obstacle violation on the dense polyline.
    int bad = -1;
    double bad_dist = delta;
    int bad_at = 0;
    for (size_t a = 0; a < avoid.size(); ++a) {
      for (size_t i = 0; i < line.size(); ++i) {
        const double d = m.distance(avoid[a], line[i]);
        if (d < bad_dist) {
          bad_dist = d;
          bad = static_cast<int>(a);
          bad_at = static_cast<int>(i);
        }
      }
    }
    if (bad < 0) {
      wp = std::move(line);
      break;
    }
    if (round == opt.retry_budget)
      throw PlanError("no path found: detour budget exhausted");

    // Detour around the violated obstacle along an arc of radius 2*delta.
    const Vec p_obs = line[bad_at] + m.signed_delta(line[bad_at], avoid[bad]);
    int i_in = bad_at, i_out = bad_at;
    while (i_in > 0 && (line[i_in - 1] - p_obs).norm() < R) --i_in;
    while (i_out + 1 < static_cast<int>(line.size()) &&
           (line[i_out + 1] - p_obs).norm() < R)
      ++i_out;

    std::vector<Vec> rebuilt(line.begin(), line.begin() + i_in + 1);
    Vec e = line[i_in] - p_obs;
    Vec f = line[i_out] - p_obs;
    if (e.norm() < 1e-12) e = -f;
    if (f.norm() < 1e-12) f = -e;
    Vec eh = e.normalized(), fh = f.normalized();
    // endpoints inside the ball climb radially to the detour sphere first
    if (e.norm() < R * (1.0 - 1e-9)) rebuilt.push_back(p_obs + R * eh);
    // side selection: steer through the perpendicular closest to where the
    // polyline already passed
    Vec side = line[bad_at] - p_obs;
    side -= side.dot(eh) * eh;
    std::vector<Vec> mids;
    if (eh.dot(fh) < -0.97) {
      Vec w = side.norm() > 1e-9 * delta ? Vec(side.normalized())
                                         : any_perpendicular(eh);
      for (const Vec& v : slerp_arc(eh, w, 0.26)) rebuilt.push_back(p_obs + R * v);
      rebuilt.push_back(p_obs + R * w);
      for (const Vec& v : slerp_arc(w, fh, 0.26)) rebuilt.push_back(p_obs + R * v);
    } else {
      for (const Vec& v : slerp_arc(eh, fh, 0.26)) rebuilt.push_back(p_obs + R * v);
    }
    if (f.norm() < R * (1.0 - 1e-9)) rebuilt.push_back(p_obs + R * fh);
    rebuilt.insert(rebuilt.end(), line.begin() + i_out, line.end());
    wp = std::move(rebuilt);
  }

  // Drop coincident consecutive points, then resample evenly.
  std::vector<Vec> clean;
  for (const Vec& p : wp)
    if (clean.empty() || (p - clean.back()).norm() > 1e-12) clean.push_back(p);
  if (clean.size() < 2) clean.push_back(wp.back());
  Curve rough(m, clean);
  const int n = std::clamp(
      static_cast<int>(std::ceil(rough.length() * opt.samples_per_unit)),
      opt.min_samples, opt.max_samples);
  Curve path = rough.arclength_reparam(n);

  // Final audit on the smooth resampled curve.
  for (int i = 0; i < 256; ++i) {
    const Vec c = path.at(double(i) / 255.0);
    if (!U.contains(m.wrap(c)))
      throw PlanError("no path found: region too tight for the planned path");
    for (const Vec& p : avoid)
      if (m.distance(p, c) < delta * (1.0 - 1e-6))
        throw PlanError("no path found: obstacle clearance not attained");
  }
  return path;
}

}  // namespace grpd
