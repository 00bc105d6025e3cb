#pragma once

#include <vector>

#include "grpd/curve.hpp"
#include "grpd/region.hpp"

namespace grpd {

struct PlanOptions {
  int retry_budget = 64;
  int samples_per_unit = 64;  // curve resampling density (per unit length)
  int min_samples = 48;
  int max_samples = 512;
};

/// Injective curve from x to y inside U keeping distance >= delta from every
/// avoided point. Straight segment first, then iterative detours around any
/// violated obstacle along a circular arc of radius 2*delta. Throws PlanError
/// ("no path found") when the retry budget is exhausted or U is too tight,
/// and ParamError ("dimension too low") for nonempty avoid in dim 1.
Curve plan_path(const Vec& x, const Vec& y, const std::vector<Vec>& avoid,
                double delta, const Region& U, const PlanOptions& opt = {});

}  // namespace grpd
