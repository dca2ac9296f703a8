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

#include "contracert/real_maps.hpp"

#include "contracert/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace contracert {

RealMap builtin_real_map(std::string const &name, double lo, double hi)
{
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi))
  {
    throw InputError("domain must be a finite interval [a, b] with a < b");
  }
  if (name == "halving")
  {
    if (lo != 0.0)
    {
      throw InputError("builtin 'halving' needs domain [0, b]");
    }
    return {name, [](double x) { return x / 2.0; }, lo, hi};
  }
  if (name == "mobius")
  {
    if (lo < 0.0)
    {
      throw InputError("builtin 'mobius' needs a domain inside [0, inf)");
    }
    return {name, [](double x) { return x / (1.0 + x); }, lo, hi};
  }
  throw InputError("unknown builtin map '" + name + "' (expected halving or mobius)");
}

namespace {

std::size_t snap(std::vector<double> const &grid, double x)
{
  std::size_t best  = 0;
  double      bestd = std::abs(grid[0] - x);
  for (std::size_t i = 1; i < grid.size(); ++i)
  {
    double const d = std::abs(grid[i] - x);
    if (d < bestd || (d == bestd && grid[i] < grid[best]))
    {
      best  = i;
      bestd = d;
    }
  }
  return best;
}

}  // namespace

SampledMap sample_builtin(std::string const &name, double lo, double hi, std::size_t points)
{
  RealMap const f = builtin_real_map(name, lo, hi);
  if (points < 2)
  {
    throw InputError("grid must have at least 2 points");
  }

  std::vector<double> grid;
  grid.reserve(points);
  if (name == "halving")
  {
    for (std::size_t k = 0; k + 1 < points; ++k)
    {
      grid.push_back(std::ldexp(hi, -static_cast<int>(k)));
    }
    grid.push_back(0.0);
  }
  else
  {
    for (std::size_t k = 0; k < points; ++k)
    {
      double const t = static_cast<double>(k) / static_cast<double>(points - 1);
      grid.push_back(hi - (hi - lo) * t);
    }
    grid.back() = lo;
  }

  std::vector<std::vector<double>> coords;
  std::vector<std::string>         labels;
  for (double g : grid)
  {
    coords.push_back({g});
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", g);
    labels.emplace_back(buf);
  }
  auto space = FiniteMetricSpace::from_points(coords, PointMetric::Euclidean, std::move(labels));

  std::vector<std::size_t> table;
  table.reserve(points);
  for (double g : grid)
  {
    table.push_back(snap(grid, f.fn(g)));
  }
  auto map = SelfMap::from_table(std::move(table), points);
  return {std::move(grid), std::move(space), std::move(map)};
}

}  // namespace contracert
