#pragma once

#include <random>

#include "grpd/types.hpp"

namespace grpd {

/// Flat base manifolds: an axis-aligned box in R^d (Euclidean metric) or a
/// flat torus R^d / (period lattice) (quotient metric). The box bounds are a
/// chart window for sampling and grids; points are not clamped to it.
struct Manifold {
  enum class Kind { box, torus };

  Kind kind = Kind::box;
  int dim = 0;
  Vec lo;  // box: lower corner; torus: zero vector
  Vec hi;  // box: upper corner; torus: periods

  static Manifold box(const Vec& lo, const Vec& hi);
  static Manifold torus(const Vec& periods);

  bool is_torus() const { return kind == Kind::torus; }
  Vec periods() const { return hi; }

  /// Canonical representative: componentwise reduction into [0, period) on
  /// the torus; identity on the box.
  Vec wrap(Vec p) const;

  /// Minimal-image displacement `to - from` (componentwise signed residue in
  /// [-period/2, period/2) on the torus; plain difference on the box).
  Vec signed_delta(const Vec& from, const Vec& to) const;

  double distance(const Vec& a, const Vec& b) const;

  /// Uniform point in the bounds (torus: in the fundamental domain).
  Vec uniform(std::mt19937_64& rng) const;

  bool same(const Manifold& other) const;
};

}  // namespace grpd
