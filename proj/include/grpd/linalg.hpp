#pragma once

#include "grpd/types.hpp"

namespace grpd {

/// General matrix exponential (scaling and squaring).
Mat expm(const Mat& M);

/// Log of a symmetric positive definite matrix via eigendecomposition.
Mat logm_spd(const Mat& P);

/// Log of a special-orthogonal matrix via the real Schur form. Pairs of -1
/// eigenvalues become pi-rotation blocks, so rotations by exactly pi work.
Mat logm_rotation(const Mat& R);

/// Polar-based factorization A = D * exp(S_rot) * exp(S_stretch), where D is
/// the identity or diag(-1,1,...,1) matching sign(det A), S_rot is skew and
/// S_stretch symmetric.
struct GaugeFactors {
  Mat D;        // component correction (involutive)
  Mat S_rot;    // skew
  Mat S_stretch;  // symmetric; zero when A is orthogonal
  bool needs_component_correction() const;
};
GaugeFactors factor_invertible(const Mat& A, bool orthogonal_only,
                               double cond_limit = 1e12);

}  // namespace grpd
