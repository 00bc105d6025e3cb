#include "grpd/curve.hpp"

#include <algorithm>
#include <cmath>

namespace grpd {

namespace {

// Distance between segments [a0,a1] and [b0,b1] (Euclidean, any dim).
double segment_segment_dist(const Vec& a0, const Vec& a1, const Vec& b0,
                            const Vec& b1) {
  const Vec d1 = a1 - a0, d2 = b1 - b0, r = a0 - b0;
  const double A = d1.squaredNorm(), E = d2.squaredNorm(), F = d2.dot(r);
  double s = 0, t = 0;
  const double tiny = 1e-30;
  if (A <= tiny && E <= tiny) return r.norm();
  if (A <= tiny) {
    t = std::clamp(F / E, 0.0, 1.0);
  } else {
    const double C = d1.dot(r);
    if (E <= tiny) {
      s = std::clamp(-C / A, 0.0, 1.0);
    } else {
      const double B = d1.dot(d2);
      const double denom = A * E - B * B;
      if (denom > tiny)
        s = std::clamp((B * F - C * E) / denom, 0.0, 1.0);
      t = (B * s + F) / E;
      if (t < 0) {
        t = 0;
        s = std::clamp(-C / A, 0.0, 1.0);
      } else if (t > 1) {
        t = 1;
        s = std::clamp((B - C) / A, 0.0, 1.0);
      }
    }
  }
  return (a0 + s * d1 - (b0 + t * d2)).norm();
}

// Circumradius of three points; infinity when collinear.
double circumradius(const Vec& a, const Vec& b, const Vec& c) {
  const Vec ab = b - a, ac = c - a, bc = c - b;
  const double la = ab.norm(), lb = bc.norm(), lc = ac.norm();
  const double cross2 = ab.squaredNorm() * ac.squaredNorm() -
                        ab.dot(ac) * ab.dot(ac);
  if (cross2 <= 0) return std::numeric_limits<double>::infinity();
  const double area = 0.5 * std::sqrt(cross2);
  if (area < 1e-300) return std::numeric_limits<double>::infinity();
  return la * lb * lc / (4.0 * area);
}

}  // namespace

struct Curve::DenseCache {
  std::vector<double> params;
  std::vector<Vec> points;
  std::vector<double> cumlen;  // cumulative polyline length
};

Curve::Curve(Manifold m, std::vector<Vec> samples)
    : Curve(std::move(m), std::move(samples), {}) {}

Curve::Curve(Manifold m, std::vector<Vec> samples, std::vector<double> params)
    : manifold_(std::move(m)), params_(std::move(params)), pts_(std::move(samples)) {
  if (pts_.size() < 2) throw ParamError("curve: need at least 2 samples");
  for (const Vec& p : pts_)
    if (p.size() != manifold_.dim) throw ParamError("curve: sample dim mismatch");
  const int n = static_cast<int>(pts_.size());
  if (params_.empty()) {
    params_.resize(n);
    for (int i = 0; i < n; ++i) params_[i] = double(i) / double(n - 1);
  }
  if (static_cast<int>(params_.size()) != n)
    throw ParamError("curve: params/samples size mismatch");
  for (int i = 1; i < n; ++i)
    if (!(params_[i] > params_[i - 1]))
      throw ParamError("curve: params must be strictly increasing");
  // normalize parameters to [0,1]
  const double t0 = params_.front(), t1 = params_.back();
  if (t0 != 0.0 || t1 != 1.0)
    for (double& t : params_) t = (t - t0) / (t1 - t0);
  params_.front() = 0.0;
  params_.back() = 1.0;
  // lift to a continuous representative on the torus
  if (manifold_.is_torus())
    for (int i = 1; i < n; ++i)
      pts_[i] = pts_[i - 1] + manifold_.signed_delta(pts_[i - 1], pts_[i]);
  build();
}

void Curve::build() {
  const int n = static_cast<int>(pts_.size());
  tangents_.resize(n);
  auto h = [&](int i) { return params_[i + 1] - params_[i]; };
  auto slope = [&](int i) { return Vec((pts_[i + 1] - pts_[i]) / h(i)); };
  if (n == 2) {
    tangents_[0] = tangents_[1] = slope(0);
  } else {
    tangents_[0] = ((2 * h(0) + h(1)) * slope(0) - h(0) * slope(1)) / (h(0) + h(1));
    tangents_[n - 1] = ((2 * h(n - 2) + h(n - 3)) * slope(n - 2) -
                        h(n - 2) * slope(n - 3)) /
                       (h(n - 2) + h(n - 3));
    for (int i = 1; i < n - 1; ++i)
      tangents_[i] = (h(i) * slope(i - 1) + h(i - 1) * slope(i)) / (h(i - 1) + h(i));
  }

  auto cache = std::make_shared<DenseCache>();
  const int m = std::clamp(3 * n, 96, 1536);
  cache->params.resize(m);
  cache->points.resize(m);
  cache->cumlen.resize(m);
  for (int i = 0; i < m; ++i) {
    const double t = double(i) / double(m - 1);
    cache->params[i] = t;
    cache->points[i] = at(t);
    cache->cumlen[i] =
        i == 0 ? 0.0
               : cache->cumlen[i - 1] + (cache->points[i] - cache->points[i - 1]).norm();
  }
  dense_ = cache;
}

Vec Curve::at(double t) const {
  if (t <= 0.0) return pts_.front();
  if (t >= 1.0) return pts_.back();
  const auto it = std::upper_bound(params_.begin(), params_.end(), t);
  const int i = std::clamp(int(it - params_.begin()) - 1, 0,
                           int(params_.size()) - 2);
  const double h = params_[i + 1] - params_[i];
  const double s = (t - params_[i]) / h;
  const double s2 = s * s, s3 = s2 * s;
  return (2 * s3 - 3 * s2 + 1) * pts_[i] + (s3 - 2 * s2 + s) * h * tangents_[i] +
         (-2 * s3 + 3 * s2) * pts_[i + 1] + (s3 - s2) * h * tangents_[i + 1];
}

Vec Curve::velocity(double t) const {
  t = std::clamp(t, 0.0, 1.0);
  const auto it = std::upper_bound(params_.begin(), params_.end(), t);
  const int i = std::clamp(int(it - params_.begin()) - 1, 0,
                           int(params_.size()) - 2);
  const double h = params_[i + 1] - params_[i];
  const double s = (t - params_[i]) / h;
  const double s2 = s * s;
  return ((6 * s2 - 6 * s) * pts_[i] + (3 * s2 - 4 * s + 1) * h * tangents_[i] +
          (-6 * s2 + 6 * s) * pts_[i + 1] + (3 * s2 - 2 * s) * h * tangents_[i + 1]) /
         h;
}

double Curve::length() const { return dense_->cumlen.back(); }

const std::vector<Vec>& Curve::dense_points() const { return dense_->points; }
const std::vector<double>& Curve::dense_params() const { return dense_->params; }

void Curve::dense_bbox(Vec& lo, Vec& hi) const {
  lo = dense_->points.front();
  hi = dense_->points.front();
  for (const Vec& p : dense_->points) {
    lo = lo.cwiseMin(p);
    hi = hi.cwiseMax(p);
  }
}

Curve Curve::arclength_reparam(int n_samples) const {
  if (n_samples < 2) throw ParamError("arclength_reparam: need >= 2 samples");
  const auto& cl = dense_->cumlen;
  const auto& tp = dense_->params;
  const double L = cl.back();
  std::vector<Vec> samples(n_samples);
  samples[0] = pts_.front();
  samples[n_samples - 1] = pts_.back();
  for (int j = 1; j < n_samples - 1; ++j) {
    const double target = L * double(j) / double(n_samples - 1);
    const auto it = std::lower_bound(cl.begin(), cl.end(), target);
    const int k = std::clamp(int(it - cl.begin()), 1, int(cl.size()) - 1);
    const double seg = cl[k] - cl[k - 1];
    const double u = seg > 0 ? (target - cl[k - 1]) / seg : 0.0;
    samples[j] = at(tp[k - 1] + u * (tp[k] - tp[k - 1]));
  }
  return Curve(manifold_, std::move(samples));
}

Curve Curve::subcurve(int i0, int i1) const {
  if (!(0 <= i0 && i0 < i1 && i1 < sample_count()))
    throw ParamError("subcurve: bad index range");
  std::vector<Vec> s(pts_.begin() + i0, pts_.begin() + i1 + 1);
  std::vector<double> t(params_.begin() + i0, params_.begin() + i1 + 1);
  return Curve(manifold_, std::move(s), std::move(t));
}

Curve::Nearest Curve::nearest(const Vec& p) const {
  const auto& D = dense_->points;
  const auto& T = dense_->params;
  const int m = static_cast<int>(D.size());
  double best_d2 = std::numeric_limits<double>::infinity();
  double best_t = 0;
  for (int i = 0; i + 1 < m; ++i) {
    const Vec p_loc = D[i] + manifold_.signed_delta(D[i], p);
    const Vec seg = D[i + 1] - D[i];
    const double sq = seg.squaredNorm();
    const double u = sq > 0 ? std::clamp((p_loc - D[i]).dot(seg) / sq, 0.0, 1.0) : 0.0;
    const double d2 = (p_loc - D[i] - u * seg).squaredNorm();
    if (d2 < best_d2) {
      best_d2 = d2;
      best_t = T[i] + u * (T[i + 1] - T[i]);
    }
  }
  // Newton refinement on the cubic, query point lifted once near the bracket.
  const int ib = std::clamp(int(best_t * (m - 1)), 0, m - 1);
  const Vec anchor = D[ib];
  const Vec p_loc = anchor + manifold_.signed_delta(anchor, p);
  const double t_lo = T[std::max(0, ib - 2)];
  const double t_hi = T[std::min(m - 1, ib + 2)];
  double t = best_t;
  for (int iter = 0; iter < 8; ++iter) {
    const Vec c = at(t), v = velocity(t);
    const double dt = 1e-6;
    const Vec acc = (velocity(std::min(t + dt, 1.0)) - velocity(std::max(t - dt, 0.0))) /
                    (std::min(t + dt, 1.0) - std::max(t - dt, 0.0));
    const double g = (c - p_loc).dot(v);
    const double H = v.squaredNorm() + (c - p_loc).dot(acc);
    if (!(std::abs(H) > 1e-30)) break;
    const double step = g / H;
    t = std::clamp(t - step, t_lo, t_hi);
    if (std::abs(step) < 1e-15) break;
  }
  Nearest out;
  const Vec c = at(t);
  double d_ref = (c - p_loc).norm();
  // keep the polyline answer if refinement drifted to a worse point
  if (d_ref > std::sqrt(best_d2) + 1e-12) {
    t = best_t;
    d_ref = (at(t) - p_loc).norm();
  }
  out.t = t;
  out.dist = d_ref;
  out.point = at(t);
  out.velocity = velocity(t);
  return out;
}

std::string Curve::tube_validity(double rho) const {
  if (!(rho > 0)) throw ParamError("tube_validity: rho must be > 0");
  // Arc-length-uniform resampling for stable pairwise/curvature estimates.
  const auto& cl = dense_->cumlen;
  const auto& tp = dense_->params;
  const double L = cl.back();
  const int M = std::clamp(sample_count() * 4, 128, 768);
  std::vector<Vec> q(M);
  for (int j = 0; j < M; ++j) {
    const double target = L * double(j) / double(M - 1);
    const auto it = std::lower_bound(cl.begin(), cl.end(), target);
    const int k = std::clamp(int(it - cl.begin()), 1, int(cl.size()) - 1);
    const double seg = cl[k] - cl[k - 1];
    const double u = seg > 0 ? (target - cl[k - 1]) / seg : 0.0;
    q[j] = at(tp[k - 1] + u * (tp[k] - tp[k - 1]));
  }
  const double spacing = L / double(M - 1);
  const double coincident = std::max(1e-9, 1e-12 * std::max(L, 1.0));

  // Local curvature: osculating radius must not drop below the tube radius.
  for (int j = 1; j + 1 < M; ++j) {
    const double R = circumradius(q[j - 1], q[j], q[j + 1]);
    if (R < rho * 0.999)
      return "reach: curvature radius " + std::to_string(R) +
             " below tube radius";
  }

  // Far pairs: beyond the turn-around scale the curve must stay a tube
  // diameter away from itself.
  const double arc_thr = std::max(M_PI * rho, 3.0 * spacing);
  for (int i = 0; i < M; ++i) {
    for (int j = i + 1; j < M; ++j) {
      const double arc = (j - i) * spacing;
      if (arc <= arc_thr) continue;
      const double d = manifold_.distance(q[i], q[j]);
      if (d < coincident)
        return "self-intersection: parameters " + std::to_string(double(i) / (M - 1)) +
               " and " + std::to_string(double(j) / (M - 1)) + " coincide";
      if (d < 2.0 * rho * 0.999)
        return "reach: points at arc distance " + std::to_string(arc) +
               " only " + std::to_string(d) + " apart";
    }
  }

  // Close segment pairs crossing each other (catches intersections between
  // consecutive-sample segments that the point check can step over).
  for (int i = 0; i + 1 < M; ++i) {
    for (int j = i + 4; j + 1 < M; ++j) {
      const Vec shift = q[i] + manifold_.signed_delta(q[i], q[j]) - q[j];
      const double d =
          segment_segment_dist(q[i], q[i + 1], q[j] + shift, q[j + 1] + shift);
      if (d < coincident && (j - i) * spacing > arc_thr)
        return "self-intersection: segments " + std::to_string(i) + " and " +
               std::to_string(j) + " cross";
    }
  }
  return "";
}

std::vector<Curve> split_injective(const Curve& curve, double eps) {
  if (!(eps > 0)) throw ParamError("split_injective: eps must be > 0");
  std::vector<std::pair<int, int>> queue = {{0, curve.sample_count() - 1}};
  std::vector<std::pair<int, int>> done;
  while (!queue.empty()) {
    auto [i0, i1] = queue.back();
    queue.pop_back();
    const Curve piece = (i0 == 0 && i1 == curve.sample_count() - 1)
                            ? curve
                            : curve.subcurve(i0, i1);
    const bool splittable = (i1 - i0) >= 2;
    if (splittable && !piece.tube_validity(eps).empty()) {
      const int mid = (i0 + i1) / 2;
      queue.push_back({mid, i1});
      queue.push_back({i0, mid});
      continue;
    }
    done.push_back({i0, i1});
  }
  std::sort(done.begin(), done.end());
  std::vector<Curve> arcs;
  arcs.reserve(done.size());
  for (auto [i0, i1] : done) arcs.push_back(curve.subcurve(i0, i1));
  return arcs;
}

}  // namespace grpd
