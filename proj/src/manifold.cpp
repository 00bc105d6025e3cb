#include "grpd/manifold.hpp"

#include <cmath>

namespace grpd {

std::string to_string(Family f) {
  switch (f) {
    case Family::pair:
      return "pair";
    case Family::frame:
      return "frame";
    case Family::action:
      return "action";
  }
  return "?";
}

Family family_from_string(const std::string& s) {
  if (s == "pair") return Family::pair;
  if (s == "frame") return Family::frame;
  if (s == "action") return Family::action;
  throw ParamError("unknown family: " + s);
}

Manifold Manifold::box(const Vec& lo, const Vec& hi) {
  if (lo.size() == 0 || lo.size() != hi.size())
    throw ParamError("box manifold: bounds must be nonempty and same size");
  for (int i = 0; i < lo.size(); ++i)
    if (!(lo[i] < hi[i])) throw ParamError("box manifold: empty bounds");
  Manifold m;
  m.kind = Kind::box;
  m.dim = static_cast<int>(lo.size());
  m.lo = lo;
  m.hi = hi;
  return m;
}

Manifold Manifold::torus(const Vec& periods) {
  if (periods.size() == 0) throw ParamError("torus manifold: dim must be >= 1");
  for (int i = 0; i < periods.size(); ++i)
    if (!(periods[i] > 0.0)) throw ParamError("torus manifold: periods must be > 0");
  Manifold m;
  m.kind = Kind::torus;
  m.dim = static_cast<int>(periods.size());
  m.lo = Vec::Zero(periods.size());
  m.hi = periods;
  return m;
}

Vec Manifold::wrap(Vec p) const {
  if (kind == Kind::box) return p;
  for (int i = 0; i < dim; ++i) {
    const double P = hi[i];
    p[i] -= P * std::floor(p[i] / P);
    if (p[i] >= P) p[i] -= P;  // guard against floor rounding at P-epsilon
  }
  return p;
}

Vec Manifold::signed_delta(const Vec& from, const Vec& to) const {
  Vec d = to - from;
  if (kind == Kind::box) return d;
  for (int i = 0; i < dim; ++i) {
    const double P = hi[i];
    d[i] -= P * std::floor(d[i] / P + 0.5);
  }
  return d;
}

double Manifold::distance(const Vec& a, const Vec& b) const {
  return signed_delta(a, b).norm();
}

Vec Manifold::uniform(std::mt19937_64& rng) const {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec p(dim);
  for (int i = 0; i < dim; ++i) p[i] = lo[i] + (hi[i] - lo[i]) * u(rng);
  return p;
}

bool Manifold::same(const Manifold& other) const {
  return kind == other.kind && dim == other.dim && lo == other.lo && hi == other.hi;
}

}  // namespace grpd
