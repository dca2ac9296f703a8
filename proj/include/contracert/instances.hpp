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

#include <cstddef>
#include <cstdint>
#include <random>

namespace contracert {

/// splitmix64 step; used to derive independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t x) noexcept;

/// Thin wrapper over mt19937_64 with distribution code that does not depend on
/// the standard library implementation, so seeded runs are portable.
class Rng
{
public:
  explicit Rng(std::uint64_t seed)
    : engine_(mix_seed(seed))
  {}

  std::uint64_t next()
  {
    return engine_();
  }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform()
  {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi)
  {
    return lo + (hi - lo) * uniform();
  }
  /// Uniform in [0, n).
  std::size_t index(std::size_t n)
  {
    return static_cast<std::size_t>(next() % n);
  }

private:
  std::mt19937_64 engine_;
};

/// Random metric space on n points. Cycles through several families: points on
/// a line, points in the plane under the three point metrics, integer points
/// (many distance ties) and random matrices with entries in [1, 2].
FiniteMetricSpace random_space(Rng &rng, std::size_t n);

/// Random self-map: uniform tables, maps with at most two image points, and
/// maps that move every point strictly closer to a chosen centre.
SelfMap random_map(Rng &rng, FiniteMetricSpace const &space);

struct InstanceSpec
{
  std::size_t   min_points{2};
  std::size_t   max_points{5};
  std::uint64_t seed{42};
};

struct Instance
{
  FiniteMetricSpace space;
  SelfMap           map;
};

/// Instance i depends only on (spec.seed, i), so campaigns can be split across
/// threads and still reproduce sequential results.
class InstanceGenerator
{
public:
  explicit InstanceGenerator(InstanceSpec spec);

  Instance operator()(std::size_t index) const;
  InstanceSpec const &spec() const noexcept
  {
    return spec_;
  }

private:
  InstanceSpec spec_;
};

}  // namespace contracert
