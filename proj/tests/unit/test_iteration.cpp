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

#include "contracert/certifiers.hpp"
#include "contracert/error.hpp"
#include "contracert/instances.hpp"
#include "contracert/iteration.hpp"
#include "contracert/real_maps.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace contracert;

namespace {

FiniteMetricSpace two_points()
{
  return FiniteMetricSpace::from_points({{0.0}, {1.0}}, PointMetric::Euclidean);
}

SampledMap halving_grid()
{
  return sample_builtin("halving", 0.0, 1.0, 22);
}

// Calls fn(space, map) for every self-map of `spaces` seeded spaces on n points.
template <class Fn>
void for_all_maps(std::size_t n, std::uint64_t seed, std::size_t spaces, Fn &&fn)
{
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k)
  {
    total *= n;
  }
  for (std::size_t s = 0; s < spaces; ++s)
  {
    Rng        rng(seed + s);
    auto const space = random_space(rng, n);
    std::vector<std::size_t> table(n);
    for (std::size_t code = 0; code < total; ++code)
    {
      for (std::size_t k = 0, v = code; k < n; ++k, v /= n)
      {
        table[k] = v % n;
      }
      fn(space, SelfMap::from_table(table, n));
    }
  }
}

}  // namespace

TEST(Picard, FixedAtStart)
{
  auto const t = picard(two_points(), SelfMap::from_table({0, 0}, 2), 0, 10);
  EXPECT_EQ(t.status, OrbitStatus::Fixed);
  EXPECT_EQ(t.fixed_step, 0U);
  EXPECT_EQ(t.points, (std::vector<std::size_t>{0}));
  EXPECT_EQ(t.step_dists, (std::vector<double>{0.0}));
}

TEST(Picard, TwoCycle)
{
  for (std::size_t start : {0U, 1U})
  {
    auto const t = picard(two_points(), SelfMap::from_table({1, 0}, 2), start, 10);
    EXPECT_EQ(t.status, OrbitStatus::Cycle);
    EXPECT_EQ(t.cycle_entry, 0U);
    EXPECT_EQ(t.cycle_length, 2U);
    EXPECT_EQ(t.step_dists, (std::vector<double>{1.0, 1.0}));
    EXPECT_EQ(t.point_at(5), 1 - start);
  }
}

TEST(Picard, HalvingGridClosedForm)
{
  auto const h = halving_grid();
  ASSERT_EQ(h.grid.size(), 22U);
  auto const t = picard(h.space, h.map, 0, 1000);
  ASSERT_EQ(t.status, OrbitStatus::Fixed);
  EXPECT_EQ(t.fixed_step, 21U);
  ASSERT_EQ(t.points.size(), 22U);
  for (std::size_t n = 0; n <= 20; ++n)
  {
    EXPECT_EQ(h.grid[t.points[n]], std::ldexp(1.0, -static_cast<int>(n)));
  }
  EXPECT_EQ(h.grid[t.points[21]], 0.0);
  for (std::size_t n = 0; n < 20; ++n)
  {
    EXPECT_EQ(t.step_dists[n], std::ldexp(1.0, -static_cast<int>(n + 1)));
  }
  // 2^-21 snaps to 0, so the last step repeats 2^-20.
  EXPECT_EQ(t.step_dists[20], std::ldexp(1.0, -20));
  EXPECT_EQ(t.step_dists[21], 0.0);
}

TEST(Picard, InputErrors)
{
  auto const m = SelfMap::from_table({0, 0}, 2);
  EXPECT_THROW(picard(two_points(), m, 2, 10), InputError);
  EXPECT_THROW(picard(two_points(), m, 0, 0), InputError);
}

TEST(Picard, FiniteTerminationAndRecordInvariant)
{
  InstanceGenerator const gen({2, 7, 31});
  for (std::size_t i = 0; i < 400; ++i)
  {
    auto const inst = gen(i);
    std::size_t const n = inst.space.size();
    for (std::size_t x = 0; x < n; ++x)
    {
      auto const t = picard(inst.space, inst.map, x, n + 1);
      ASSERT_NE(t.status, OrbitStatus::MaxIterReached);
      for (std::size_t k = 0; k + 1 < t.points.size(); ++k)
      {
        EXPECT_EQ(t.points[k + 1], inst.map(t.points[k]));
        EXPECT_EQ(t.step_dists[k], inst.space.distance(t.points[k], t.points[k + 1]));
      }
      if (t.status == OrbitStatus::Fixed)
      {
        for (std::size_t k = 0; k < t.fixed_step; ++k)
        {
          EXPECT_GT(t.step_dists[k], 0.0);
        }
        EXPECT_EQ(t.step_dists[t.fixed_step], 0.0);
      }
    }
  }
}

TEST(Picard, MaxIterOnRealMap)
{
  auto const t = picard(builtin_real_map("mobius", 0.0, 10.0), 1.0, 5);
  EXPECT_EQ(t.status, OrbitStatus::MaxIterReached);
  EXPECT_EQ(t.points.size(), 6U);
  EXPECT_DOUBLE_EQ(t.points[1], 0.5);
  EXPECT_DOUBLE_EQ(t.points[2], 1.0 / 3.0);
}

TEST(FixedPoints, Enumeration)
{
  EXPECT_EQ(fixed_points(SelfMap::from_table({0, 1, 2}, 3)), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(fixed_points(SelfMap::from_table({1, 2, 0}, 3)).empty());
  EXPECT_EQ(fixed_points(SelfMap::from_table({1, 1, 0}, 3)), (std::vector<std::size_t>{1}));
}

TEST(StrictDecrease, Examples)
{
  auto const cycle = picard(two_points(), SelfMap::from_table({1, 0}, 2), 0, 10);
  auto const sd    = check_strict_decrease(cycle);
  EXPECT_FALSE(sd.ok);
  EXPECT_EQ(sd.first_violation, 0U);

  auto const real = picard(builtin_real_map("halving", 0.0, 1.0), 1.0, 1000);
  EXPECT_EQ(real.status, OrbitStatus::Fixed);
  EXPECT_TRUE(check_strict_decrease(real).ok);
  EXPECT_TRUE(real.strict_decrease_ok);

  auto const h    = halving_grid();
  auto const grid = check_strict_decrease(picard(h.space, h.map, 0, 1000));
  EXPECT_FALSE(grid.ok);
  EXPECT_EQ(grid.first_violation, 19U);
}

TEST(StrictDecrease, HoldsForGeneralizedPhiContractions)
{
  auto const phi     = parse_phi("phi_linear:0.5");
  std::size_t passing = 0;
  for (std::size_t n = 2; n <= 4; ++n)
  {
    for_all_maps(n, 100 * n, 5, [&](FiniteMetricSpace const &space, SelfMap const &map) {
      if (!check_generalized_phi(space, map, phi).passed)
      {
        return;
      }
      ++passing;
      for (std::size_t x = 0; x < n; ++x)
      {
        auto const t = picard(space, map, x, n + 1);
        ASSERT_EQ(t.status, OrbitStatus::Fixed);
        ASSERT_TRUE(check_strict_decrease(t).ok);
      }
    });
  }
  EXPECT_GT(passing, 0U);
}

TEST(Cauchy, FixedAtStartHolds)
{
  auto const t = picard(two_points(), SelfMap::from_table({0, 0}, 2), 0, 10);
  for (double eps : {1e-6, 0.5, 10.0})
  {
    EXPECT_TRUE(cauchy_claim_check(two_points(), t, eps).holds());
  }
}

TEST(Cauchy, HalvingRecipeIndex)
{
  auto const h = halving_grid();
  auto const t = picard(h.space, h.map, 0, 1000);
  // delta = eps/4; N is the first n with 2^-(n+1) < delta.
  for (auto [eps, n_expected] : {std::pair{0.5, 3U}, std::pair{0.1, 5U}, std::pair{0.01, 8U}})
  {
    auto const c = cauchy_claim_check(h.space, t, eps);
    EXPECT_TRUE(c.holds()) << eps;
    EXPECT_TRUE(c.n_from_recipe);
    EXPECT_EQ(c.s_value, eps / 2);
    EXPECT_EQ(c.delta_used, eps / 4);
    EXPECT_EQ(c.n_used, n_expected) << eps;
    // closed form: d(x_n, x_{n+m}) = 2^-n - 2^-(n+m) < 2^-n <= 2^-N
    EXPECT_LT(std::ldexp(1.0, -static_cast<int>(c.n_used)), c.delta_used + c.s_value);
    for (std::size_t n = c.n_used; n <= 20; ++n)
    {
      for (std::size_t m = 1; n + m <= 20; ++m)
      {
        EXPECT_EQ(h.space.distance(t.points[n], t.points[n + m]),
                  std::ldexp(1.0, -static_cast<int>(n)) - std::ldexp(1.0, -static_cast<int>(n + m)));
      }
    }
  }
}

TEST(Cauchy, TwoCycleViolates)
{
  auto const t = picard(two_points(), SelfMap::from_table({1, 0}, 2), 0, 10);
  auto const c = cauchy_claim_check(two_points(), t, 0.5);
  EXPECT_EQ(c.status, CauchyStatus::Violated);
  ASSERT_TRUE(c.first_violation.has_value());
  EXPECT_FALSE(c.n_from_recipe);
  EXPECT_TRUE(cauchy_claim_check(two_points(), t, 4.1).holds());
}

TEST(Cauchy, TruncatedTraceIsInconclusive)
{
  auto const t = picard(builtin_real_map("mobius", 0.0, 10.0), 1.0, 3);
  auto const c = cauchy_claim_check(t, 0.01);
  EXPECT_EQ(c.status, CauchyStatus::Inconclusive);
}

TEST(Cauchy, HoldsAlongGeneralizedPhiOrbits)
{
  auto const phi = parse_phi("phi_linear:0.5");
  for_all_maps(4, 7, 3, [&](FiniteMetricSpace const &space, SelfMap const &map) {
    if (!check_generalized_phi(space, map, phi).passed)
    {
      return;
    }
    for (std::size_t x = 0; x < 4; ++x)
    {
      auto const t = picard(space, map, x, 5);
      for (double eps : {0.01, 0.3, 3.0})
      {
        ASSERT_TRUE(cauchy_claim_check(space, t, eps).holds());
      }
    }
  });
}

TEST(EitherOr, HalvingFirstDisjunct)
{
  auto const h   = halving_grid();
  auto const t   = picard(h.space, h.map, 0, 1000);
  auto const rep = either_or_diagnostic(h.space, h.map, parse_alpha("alpha_reciprocal"), t, t.points.back());
  EXPECT_TRUE(rep.holds);
  EXPECT_TRUE(rep.failed.empty());
  EXPECT_EQ(rep.n_used, 0U);
  for (auto const &s : rep.steps)
  {
    EXPECT_TRUE(s.first || s.vacuous) << s.n;
  }
  // At d = 1 the halving step equals alpha(1) * 1, so main fails and the
  // consequence is not checked.
  EXPECT_FALSE(check_main(h.space, h.map, parse_alpha("alpha_reciprocal")).passed);
  EXPECT_FALSE(rep.consequence_checked);

}

TEST(EitherOr, DegenerateFixedTrace)
{
  auto const t   = picard(two_points(), SelfMap::from_table({0, 0}, 2), 0, 10);
  auto const rep = either_or_diagnostic(two_points(), SelfMap::from_table({0, 0}, 2), parse_alpha("alpha_reciprocal"),
                                        t, 0);
  EXPECT_TRUE(rep.holds);
  ASSERT_FALSE(rep.steps.empty());
  EXPECT_TRUE(rep.steps.front().vacuous);
}

TEST(EitherOr, NeverFailsWhenMainPasses)
{
  auto const  rec     = parse_alpha("alpha_reciprocal");
  std::size_t passing = 0;
  for_all_maps(4, 300, 10, [&](FiniteMetricSpace const &space, SelfMap const &map) {
    if (!check_main(space, map, rec).passed)
    {
      return;
    }
    ++passing;
    for (std::size_t x = 0; x < 4; ++x)
    {
      auto const t   = picard(space, map, x, 5);
      auto const rep = either_or_diagnostic(space, map, rec, t, t.points.back());
      ASSERT_TRUE(rep.holds);
      ASSERT_TRUE(rep.consequence_holds);
    }
  });
  EXPECT_GT(passing, 0U);
}

TEST(EitherOr, ReportsFailuresWithoutThrowing)
{
  // -1 <-> 1 with z = 0 fixed: d(x_n, Tx_n) / 2 = 1 = d(x_n, z) for every n.
  auto const line = FiniteMetricSpace::from_points({{-1.0}, {0.0}, {1.0}}, PointMetric::Euclidean);
  auto const swap = SelfMap::from_table({2, 1, 0}, 3);
  auto const t    = picard(line, swap, 0, 10);
  EXPECT_FALSE(check_main(line, swap, parse_alpha("alpha_const:1")).passed);
  // Steps of 2 never drop below delta, so the recipe N lies past the record.
  auto const by_recipe = either_or_diagnostic(line, swap, parse_alpha("alpha_const:1"), t, 1);
  EXPECT_TRUE(by_recipe.steps.empty());
  auto const rep = either_or_diagnostic(line, swap, parse_alpha("alpha_const:1"), t, 1, 0);
  EXPECT_FALSE(rep.failed.empty());
  EXPECT_FALSE(rep.holds);
}

TEST(Admissibility, LFunctionsFindNothing)
{
  InstanceSpec const spec{2, 5, 42};
  for (auto const *name : {"phi_linear:0.5", "phi_saturating"})
  {
    auto const r = admissibility_falsify(parse_phi(name), spec, 3000, 2);
    EXPECT_FALSE(r.counterexample.has_value()) << name;
    EXPECT_EQ(r.instances_tried, 3000U);
    EXPECT_GT(r.instances_passing, 0U);
    EXPECT_EQ(r.strict_decrease_violations, 0U);
  }
}

TEST(Admissibility, ShiftedGaugeCycles)
{
  auto const phi = parse_phi("phi_shifted:1");
  auto const r   = admissibility_falsify(phi, {2, 5, 42}, 1000, 1);
  ASSERT_TRUE(r.counterexample.has_value());
  auto const &cx = *r.counterexample;
  EXPECT_TRUE(check_generalized_phi(cx.space, cx.map, phi).passed);
  auto const again = picard(cx.space, cx.map, cx.start, cx.space.size() + 1);
  EXPECT_EQ(again.status, OrbitStatus::Cycle);
  EXPECT_EQ(again.points, cx.trace.points);

  for (unsigned threads : {2U, 4U})
  {
    auto const other = admissibility_falsify(phi, {2, 5, 42}, 1000, threads);
    ASSERT_TRUE(other.counterexample.has_value());
    EXPECT_EQ(other.counterexample->instance_index, cx.instance_index);
    EXPECT_EQ(other.counterexample->start, cx.start);
    EXPECT_EQ(other.instances_tried, r.instances_tried);
  }
}

TEST(Subsequence, Examples)
{
  auto const cycle = subsequence_falsify(two_points(), SelfMap::from_table({1, 0}, 2), 0);
  EXPECT_TRUE(cycle.flagged);
  ASSERT_TRUE(cycle.witness.has_value());
  EXPECT_EQ(cycle.witness->tail_max_ratio_gap, 0.0);
  EXPECT_EQ(cycle.witness->tail_min_delta, 1.0);

  auto const fixed = subsequence_falsify(two_points(), SelfMap::from_table({0, 0}, 2), 0);
  EXPECT_TRUE(fixed.vacuous);
  EXPECT_FALSE(fixed.flagged);

  auto const h       = halving_grid();
  auto const halving = subsequence_falsify(h.space, h.map, 0);
  EXPECT_FALSE(halving.flagged);

  auto const line = FiniteMetricSpace::from_points({{0}, {1}, {2}, {3}}, PointMetric::Euclidean);
  auto const walk = subsequence_falsify(line, SelfMap::from_table({0, 0, 1, 2}, 4), 3);
  EXPECT_FALSE(walk.vacuous);
  EXPECT_FALSE(walk.flagged);
}
