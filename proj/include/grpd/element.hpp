#pragma once

#include "grpd/manifold.hpp"

namespace grpd {

/// Family-tagged groupoid element over a flat base:
///   pair:   (x, y)            source x, target y
///   frame:  (x, y, A)         A an invertible k x k fiber map E_x -> E_y
///   action: (x, g)            torus translation, y = x + g
struct GroupoidElement {
  Family family = Family::pair;
  Vec x, y;
  Mat A;  // frame only
  Vec g;  // action only (minimal representative)

  static GroupoidElement pair(const Manifold& m, Vec x, Vec y);
  static GroupoidElement frame(const Manifold& m, Vec x, Vec y, Mat A);
  static GroupoidElement action(const Manifold& m, Vec x, Vec g);
  static GroupoidElement unit(Family f, const Manifold& m, const Vec& x,
                              int fiber_rank = 0);

  const Vec& source() const { return x; }
  const Vec& target() const { return y; }
};

/// Partial multiplication "first g then h"; requires beta(g) = alpha(h)
/// within eps. Frame fiber map of gh is A_h * A_g.
GroupoidElement compose(const Manifold& m, const GroupoidElement& g,
                        const GroupoidElement& h, double eps = kEpsMatch);

/// Two-sided inverse: swaps source and target; frame A -> A^-1 (throws
/// GaugeError beyond condition 1e12); action g -> -g.
GroupoidElement invert(const Manifold& m, const GroupoidElement& g);

/// True when g is the unit over its source within eps (and exactly on the
/// fiber/group part when exact = true).
bool is_unit(const Manifold& m, const GroupoidElement& g, double eps = kEpsMatch);

/// Condition number estimate via SVD (k is small).
double condition_number(const Mat& A);

}  // namespace grpd
