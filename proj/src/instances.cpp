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

#include "contracert/instances.hpp"

#include "contracert/error.hpp"

#include <algorithm>
#include <numeric>

namespace contracert {

std::uint64_t mix_seed(std::uint64_t x) noexcept
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

namespace {

FiniteMetricSpace line_space(Rng &rng, std::size_t n)
{
  std::vector<std::vector<double>> pts;
  while (pts.size() < n)
  {
    double const v = rng.uniform();
    bool const   dup =
        std::any_of(pts.begin(), pts.end(), [v](std::vector<double> const &p) { return p[0] == v; });
    if (!dup)
    {
      pts.push_back({v});
    }
  }
  return FiniteMetricSpace::from_points(pts, PointMetric::Euclidean);
}

FiniteMetricSpace plane_space(Rng &rng, std::size_t n)
{
  static constexpr PointMetric kinds[] = {PointMetric::Euclidean, PointMetric::Manhattan, PointMetric::Chebyshev};
  PointMetric const kind = kinds[rng.index(3)];
  std::vector<std::vector<double>> pts;
  while (pts.size() < n)
  {
    std::vector<double> p{rng.uniform(), rng.uniform()};
    if (std::find(pts.begin(), pts.end(), p) == pts.end())
    {
      pts.push_back(std::move(p));
    }
  }
  return FiniteMetricSpace::from_points(pts, kind);
}

FiniteMetricSpace integer_space(Rng &rng, std::size_t n)
{
  // Distinct integers in [0, 2n + 2) on the line: small values, many ties.
  std::vector<int> pool(2 * n + 2);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
  {
    std::swap(pool[i], pool[i + rng.index(pool.size() - i)]);
  }
  std::vector<std::vector<double>> pts;
  for (std::size_t i = 0; i < n; ++i)
  {
    pts.push_back({static_cast<double>(pool[i])});
  }
  return FiniteMetricSpace::from_points(pts, PointMetric::Euclidean);
}

FiniteMetricSpace band_matrix_space(Rng &rng, std::size_t n)
{
  // Any symmetric matrix with off-diagonal entries in [1, 2] is a metric.
  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = i + 1; j < n; ++j)
    {
      double const v = rng.uniform(1.0, 2.0);
      m(i, j)        = v;
      m(j, i)        = v;
    }
  }
  return FiniteMetricSpace::from_matrix(std::move(m));
}

}  // namespace

FiniteMetricSpace random_space(Rng &rng, std::size_t n)
{
  if (n == 0)
  {
    throw InputError("random_space: n must be positive");
  }
  switch (rng.index(4))
  {
  case 0:
    return line_space(rng, n);
  case 1:
    return plane_space(rng, n);
  case 2:
    return integer_space(rng, n);
  default:
    return band_matrix_space(rng, n);
  }
}

SelfMap random_map(Rng &rng, FiniteMetricSpace const &space)
{
  std::size_t const        n = space.size();
  std::vector<std::size_t> table(n);
  switch (rng.index(3))
  {
  case 0:
    for (auto &t : table)
    {
      t = rng.index(n);
    }
    break;
  case 1: {
    std::size_t const a = rng.index(n);
    std::size_t const b = rng.index(n);
    for (auto &t : table)
    {
      t = rng.index(2) == 0 ? a : b;
    }
    break;
  }
  default: {
    std::size_t const centre = rng.index(n);
    for (std::size_t i = 0; i < n; ++i)
    {
      std::vector<std::size_t> closer;
      for (std::size_t j = 0; j < n; ++j)
      {
        if (space.distance(j, centre) < space.distance(i, centre))
        {
          closer.push_back(j);
        }
      }
      table[i] = closer.empty() ? centre : closer[rng.index(closer.size())];
    }
    break;
  }
  }
  return SelfMap::from_table(std::move(table), n);
}

InstanceGenerator::InstanceGenerator(InstanceSpec spec)
  : spec_(spec)
{
  if (spec_.min_points == 0 || spec_.min_points > spec_.max_points)
  {
    throw InputError("instance generator needs 1 <= min_points <= max_points");
  }
}

Instance InstanceGenerator::operator()(std::size_t index) const
{
  Rng               rng(spec_.seed ^ mix_seed(index));
  std::size_t const span = spec_.max_points - spec_.min_points + 1;
  std::size_t const n    = spec_.min_points + index % span;
  auto              space = random_space(rng, n);
  auto              map   = random_map(rng, space);
  return {std::move(space), std::move(map)};
}

}  // namespace contracert
