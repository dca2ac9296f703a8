//------------------------------------------------------------------------------
//
//   Copyright 2026 The contracert Authors
//
//   Licensed under the Apache License, Version 2.0 (the "License");
//   you may not use this file except in compliance with the License.
//   You may obtain a copy of the License at
//
//       http://www.apache.org/licenses/LICENSE-2.0
//
//   Unless required by applicable law or agreed to in writing, software
//   distributed under the License is distributed on an "AS IS" BASIS,
//   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//   See the License for the specific language governing permissions and
//   limitations under the License.
//
//------------------------------------------------------------------------------

#pragma once

#include "contracert/metric.hpp"

#include <functional>
#include <string>
#include <vector>

namespace contracert {

/// A 1-D real function on a closed interval, used for the continuous demos.
struct RealMap
{
  std::string                   name;
  std::function<double(double)> fn;
  double                        lo{0.0};
  double                        hi{1.0};
};

/// "halving" (x -> x/2, needs lo = 0) or "mobius" (x -> x/(1+x), needs lo >= 0).
RealMap builtin_real_map(std::string const &name, double lo, double hi);

/// A builtin sampled onto a finite grid: the grid becomes a euclidean space and
/// each image is snapped to the nearest grid point (ties to the smaller value).
struct SampledMap
{
  std::vector<double> grid;
  FiniteMetricSpace   space;
  SelfMap             map;
};

/// halving uses the dyadic grid {hi, hi/2, ..., hi*2^-(points-2), 0};
/// mobius uses `points` equally spaced values from hi down to lo.
SampledMap sample_builtin(std::string const &name, double lo, double hi, std::size_t points);

}  // namespace contracert
