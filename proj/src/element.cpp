#include "grpd/element.hpp"

#include <Eigen/Dense>

namespace grpd {

GroupoidElement GroupoidElement::pair(const Manifold& m, Vec x, Vec y) {
  if (x.size() != m.dim || y.size() != m.dim)
    throw ParamError("pair element: dim mismatch");
  GroupoidElement e;
  e.family = Family::pair;
  e.x = m.wrap(std::move(x));
  e.y = m.wrap(std::move(y));
  return e;
}

GroupoidElement GroupoidElement::frame(const Manifold& m, Vec x, Vec y, Mat A) {
  if (A.rows() != A.cols() || A.rows() < 1)
    throw ParamError("frame element: A must be square");
  if (std::abs(A.determinant()) == 0.0)
    throw ParamError("frame element: A must be invertible");
  GroupoidElement e;
  e.family = Family::frame;
  e.x = m.wrap(std::move(x));
  e.y = m.wrap(std::move(y));
  e.A = std::move(A);
  return e;
}

GroupoidElement GroupoidElement::action(const Manifold& m, Vec x, Vec g) {
  if (!m.is_torus()) throw ParamError("action element: base must be a torus");
  GroupoidElement e;
  e.family = Family::action;
  e.x = m.wrap(std::move(x));
  e.g = m.signed_delta(Vec::Zero(m.dim), std::move(g));  // minimal representative
  e.y = m.wrap(e.x + e.g);
  return e;
}

GroupoidElement GroupoidElement::unit(Family f, const Manifold& m, const Vec& x,
                                      int fiber_rank) {
  switch (f) {
    case Family::pair:
      return pair(m, x, x);
    case Family::frame: {
      if (fiber_rank < 1) throw ParamError("unit: fiber_rank required for frame");
      return frame(m, x, x, Mat::Identity(fiber_rank, fiber_rank));
    }
    case Family::action:
      return action(m, x, Vec::Zero(m.dim));
  }
  throw ParamError("unit: bad family");
}

GroupoidElement compose(const Manifold& m, const GroupoidElement& g,
                        const GroupoidElement& h, double eps) {
  if (g.family != h.family) throw ComposeError("compose: family mismatch");
  if (m.distance(g.y, h.x) > eps)
    throw ComposeError("compose: target of first differs from source of second");
  switch (g.family) {
    case Family::pair:
      return GroupoidElement::pair(m, g.x, h.y);
    case Family::frame:
      return GroupoidElement::frame(m, g.x, h.y, h.A * g.A);
    case Family::action:
      return GroupoidElement::action(m, g.x, g.g + h.g);
  }
  throw ComposeError("compose: bad family");
}

double condition_number(const Mat& A) {
  Eigen::JacobiSVD<Mat> svd(A);
  const auto& s = svd.singularValues();
  if (s[s.size() - 1] <= 0.0) return std::numeric_limits<double>::infinity();
  return s[0] / s[s.size() - 1];
}

GroupoidElement invert(const Manifold& m, const GroupoidElement& g) {
  switch (g.family) {
    case Family::pair:
      return GroupoidElement::pair(m, g.y, g.x);
    case Family::frame: {
      if (condition_number(g.A) > 1e12)
        throw GaugeError("ill-conditioned fiber map");
      return GroupoidElement::frame(m, g.y, g.x, g.A.inverse());
    }
    case Family::action:
      return GroupoidElement::action(m, g.y, -g.g);
  }
  throw ParamError("invert: bad family");
}

bool is_unit(const Manifold& m, const GroupoidElement& g, double eps) {
  if (m.distance(g.x, g.y) > eps) return false;
  if (g.family == Family::frame)
    return (g.A - Mat::Identity(g.A.rows(), g.A.cols())).cwiseAbs().maxCoeff() <= eps;
  if (g.family == Family::action) return g.g.cwiseAbs().maxCoeff() <= eps;
  return true;
}

}  // namespace grpd
