#include "grpd/vector_field.hpp"

#include <cmath>

namespace grpd {

CompactVectorField CompactVectorField::tube(Curve curve, double rho) {
  CompactVectorField f;
  f.manifold_ = curve.manifold();
  const Manifold m = curve.manifold();
  Vec lo, hi;
  curve.dense_bbox(lo, hi);
  auto data = std::make_shared<TubeData>(TubeData{
      std::move(curve), rho,
      BumpScalar(m, Vec::Zero(m.dim), rho / 2.0, rho),
      lo.array() - rho, hi.array() + rho});
  f.tube_ = data;
  // Region sampling bbox stays within the manifold window.
  Vec blo = data->bbox_lo.cwiseMax(m.lo), bhi = data->bbox_hi.cwiseMin(m.hi);
  for (int i = 0; i < m.dim; ++i)
    if (!(blo[i] < bhi[i])) {
      blo[i] = m.lo[i];
      bhi[i] = m.hi[i];
    }
  f.support_ = Region::custom(
      m,
      [data, m](const Vec& p) {
        return data->curve.nearest(p).dist < data->rho;
      },
      [data, m](const Vec& p) {
        return std::max(0.0, data->rho - data->curve.nearest(p).dist);
      },
      blo, bhi);
  return f;
}

CompactVectorField CompactVectorField::bump(const Manifold& m, Vec center,
                                            double r_in, double r_out,
                                            Vec direction) {
  if (direction.size() != m.dim) throw ParamError("bump field: direction dim mismatch");
  CompactVectorField f;
  f.manifold_ = m;
  f.bump_ = BumpScalar(m, std::move(center), r_in, r_out);
  f.bump_dir_ = std::move(direction);
  f.support_ = Region::ball(m, f.bump_->center(), r_out);
  return f;
}

const Curve& CompactVectorField::tube_curve() const {
  if (!tube_) throw ParamError("not a tube field");
  return tube_->curve;
}

double CompactVectorField::tube_rho() const {
  if (!tube_) throw ParamError("not a tube field");
  return tube_->rho;
}

Vec CompactVectorField::operator()(const Vec& p) const {
  if (tube_) {
    // cheap bbox reject before the nearest-point search
    const Vec p_loc =
        tube_->curve.samples().front() +
        manifold_.signed_delta(tube_->curve.samples().front(), p);
    bool outside = false;
    for (int i = 0; i < p.size() && !outside; ++i)
      outside = p_loc[i] < tube_->bbox_lo[i] || p_loc[i] > tube_->bbox_hi[i];
    if (outside && !manifold_.is_torus()) return Vec::Zero(p.size());
    const auto near = tube_->curve.nearest(p);
    if (near.dist >= tube_->rho) return Vec::Zero(p.size());
    const double chi = tube_->profile.profile(near.dist);
    if (chi == 0.0) return Vec::Zero(p.size());
    return chi * near.velocity;
  }
  if (bump_) {
    const double chi = (*bump_)(p);
    if (chi == 0.0) return Vec::Zero(p.size());
    return chi * bump_dir_;
  }
  return Vec::Zero(p.size());
}

double CompactVectorField::lipschitz() const {
  if (lipschitz_ >= 0.0) return lipschitz_;
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  double worst = 0.0;
  for (int i = 0; i < 256; ++i) {
    Vec a;
    try {
      a = support_.sample(rng);
    } catch (const Error&) {
      break;
    }
    std::normal_distribution<double> g(0.0, 1.0);
    Vec step(a.size());
    for (int k = 0; k < step.size(); ++k) step[k] = g(rng);
    step *= 1e-3 / std::max(step.norm(), 1e-12);
    const Vec b = a + step;
    const double num = ((*this)(a) - (*this)(b)).norm();
    worst = std::max(worst, num / step.norm());
  }
  lipschitz_ = worst;
  return lipschitz_;
}

CompactVectorField tube_field(const Curve& curve, double rho) {
  if (!(rho > 0)) throw ParamError("tube_field: rho must be > 0");
  const std::string why = curve.tube_validity(rho);
  if (!why.empty()) {
    if (why.rfind("self-intersection", 0) == 0)
      throw InjectivityError("curve not injective: " + why);
    throw ReachError("tube radius too large: " + why);
  }
  return CompactVectorField::tube(curve, rho);
}

StepSchedule step_schedule(double t, double h) {
  if (!(h > 0)) throw ParamError("flow: step h must be > 0");
  const double sign = t >= 0 ? 1.0 : -1.0;
  const double T = std::abs(t);
  int n_full = static_cast<int>(std::floor(T / h + 1e-12));
  double last = T - n_full * h;
  if (last < 1e-15) last = 0.0;
  return {n_full, sign * h, sign * last};
}

Rk4Stages rk4_stages(const CompactVectorField& X, const Vec& y, double dt) {
  Rk4Stages s;
  s.k1 = X(y);
  s.y2 = y + (dt / 2.0) * s.k1;
  s.k2 = X(s.y2);
  s.y3 = y + (dt / 2.0) * s.k2;
  s.k3 = X(s.y3);
  s.y4 = y + dt * s.k3;
  s.k4 = X(s.y4);
  return s;
}

Vec flow(const CompactVectorField& X, double t, const Vec& x, double h) {
  if (t == 0.0) return x;
  if (!X.support().contains(x)) return x;
  const StepSchedule sched = step_schedule(t, h);
  Vec y = x;
  auto step = [&](double dt) {
    const Rk4Stages s = rk4_stages(X, y, dt);
    y += (dt / 6.0) * (s.k1 + 2.0 * s.k2 + 2.0 * s.k3 + s.k4);
  };
  for (int i = 0; i < sched.n_full; ++i) step(sched.h_signed);
  if (sched.h_last != 0.0) step(sched.h_last);
  return X.manifold().wrap(y);
}

}  // namespace grpd
