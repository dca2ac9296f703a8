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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>

using namespace contracert;

namespace {

FiniteMetricSpace line(std::vector<double> const &xs)
{
  std::vector<std::vector<double>> pts;
  for (double x : xs)
  {
    pts.push_back({x});
  }
  return FiniteMetricSpace::from_points(pts, PointMetric::Euclidean);
}

FiniteMetricSpace two_points()
{
  return line({0.0, 1.0});
}

double oracle_modulus(FiniteMetricSpace const &s, SelfMap const &t)
{
  double r = 0.0;
  for (std::size_t x = 0; x < s.size(); ++x)
  {
    for (std::size_t y = 0; y < s.size(); ++y)
    {
      if (x != y)
      {
        r = std::max(r, s.distance(t(x), t(y)) / s.distance(x, y));
      }
    }
  }
  return r;
}

bool oracle_contractive(FiniteMetricSpace const &s, SelfMap const &t)
{
  for (std::size_t x = 0; x < s.size(); ++x)
  {
    for (std::size_t y = 0; y < s.size(); ++y)
    {
      if (x != y && !(s.distance(t(x), t(y)) < s.distance(x, y)))
      {
        return false;
      }
    }
  }
  return true;
}

// phi(s) = (s + m(s)) / 2 with m(s) the largest image distance over pairs at
// distance <= s; dominates T exactly when T is contractive.
ComparisonPhi dominating_phi(FiniteMetricSpace const &s, SelfMap const &t)
{
  std::vector<std::pair<double, double>> pairs;
  for (std::size_t x = 0; x < s.size(); ++x)
  {
    for (std::size_t y = 0; y < s.size(); ++y)
    {
      pairs.emplace_back(s.distance(x, y), s.distance(t(x), t(y)));
    }
  }
  return ComparisonPhi(
      "dominating",
      [pairs](double d) {
        double m = 0.0;
        for (auto const &[dxy, dimg] : pairs)
        {
          if (dxy <= d)
          {
            m = std::max(m, dimg);
          }
        }
        return (d + m) / 2.0;
      },
      PhiClass::Custom);
}

void expect_witnesses_reproduce(Certificate const &cert, FiniteMetricSpace const &s, SelfMap const &t)
{
  EXPECT_EQ(cert.passed, cert.witnesses.empty());
  for (auto const &w : cert.witnesses)
  {
    auto const again = evaluate_pair(cert.condition, s, t, cert.params, w.x, w.y);
    EXPECT_EQ(again, w);
    EXPECT_TRUE(again.violated());
  }
  EXPECT_TRUE(std::is_sorted(cert.witnesses.begin(), cert.witnesses.end(), [](auto const &a, auto const &b) {
    return std::pair(a.x, a.y) < std::pair(b.x, b.y);
  }));
}

}  // namespace

TEST(Banach, Examples)
{
  auto const l = line({0, 1, 3});
  auto const constant = SelfMap::from_table({2, 2, 2}, 3);
  EXPECT_EQ(banach_modulus(l, constant).r_star, 0.0);
  EXPECT_TRUE(banach_modulus(l, constant).certificate.passed);

  auto const id = banach_modulus(two_points(), SelfMap::from_table({0, 1}, 2));
  EXPECT_EQ(id.r_star, 1.0);
  EXPECT_FALSE(id.certificate.passed);

  // 0->0, 1->0, 3->1: ratios 0/1, 1/3 and 1/2.
  auto const m = SelfMap::from_table({0, 0, 1}, 3);
  EXPECT_EQ(banach_modulus(l, m).r_star, 0.5);
  EXPECT_EQ(banach_modulus(l, m).r_star, oracle_modulus(l, m));
}

TEST(Banach, MatchesOracleOnRandomInstances)
{
  InstanceGenerator const gen({2, 6, 11});
  for (std::size_t i = 0; i < 300; ++i)
  {
    auto const inst = gen(i);
    auto const res  = banach_modulus(inst.space, inst.map);
    EXPECT_EQ(res.r_star, oracle_modulus(inst.space, inst.map));
    EXPECT_EQ(res.certificate.passed, res.r_star < 1.0);
    EXPECT_EQ(check_contractive(inst.space, inst.map).passed, oracle_contractive(inst.space, inst.map));
    expect_witnesses_reproduce(res.certificate, inst.space, inst.map);
  }
}

TEST(Certifiers, TrivialMaps)
{
  auto const l        = line({0, 1, 3, 7});
  auto const constant = SelfMap::from_table({1, 1, 1, 1}, 4);
  auto const id       = SelfMap::from_table({0, 1, 2, 3}, 4);
  auto const half     = parse_phi("phi_linear:0.5");
  auto const rec      = parse_alpha("alpha_reciprocal");

  EXPECT_TRUE(check_contractive(l, constant).passed);
  EXPECT_TRUE(check_boyd_wong(l, constant, parse_phi("phi_linear:0")).passed);
  EXPECT_TRUE(check_lim(l, constant, half).passed);
  EXPECT_TRUE(check_suzuki_2008(l, constant, 0.0).passed);
  EXPECT_TRUE(check_half_condition(l, constant).passed);
  EXPECT_TRUE(check_main(l, constant, rec).passed);
  EXPECT_TRUE(check_eta_alpha(l, constant, 1.0, rec).passed);

  EXPECT_FALSE(check_contractive(l, id).passed);
  EXPECT_FALSE(check_boyd_wong(l, id, parse_phi("phi_linear:0")).passed);
  EXPECT_FALSE(check_lim(l, id, half).passed);
  EXPECT_FALSE(check_suzuki_2008(l, id, 0.9).passed);
  EXPECT_FALSE(check_half_condition(l, id).passed);
  EXPECT_FALSE(check_eta_alpha(two_points(), SelfMap::from_table({0, 1}, 2), 0.5, rec).passed);

  auto const main_id = check_main(two_points(), SelfMap::from_table({0, 1}, 2), rec);
  ASSERT_EQ(main_id.witnesses.size(), 2U);
  EXPECT_EQ(main_id.witnesses[0].x, 0U);
  EXPECT_EQ(main_id.witnesses[1].x, 1U);
}

TEST(Certifiers, ModulusGaugePassesBoydWong)
{
  InstanceGenerator const gen({2, 5, 3});
  for (std::size_t i = 0; i < 200; ++i)
  {
    auto const inst = gen(i);
    double const r  = banach_modulus(inst.space, inst.map).r_star;
    ComparisonPhi const phi("modulus", [r](double s) { return r * s; }, PhiClass::Custom);
    // r_star * d can round one ulp below d(Tx,Ty); anything larger is a bug.
    for (auto const &w : check_boyd_wong(inst.space, inst.map, phi).witnesses)
    {
      EXPECT_LE(w.lhs - w.rhs, 4 * std::numeric_limits<double>::epsilon() * w.lhs) << i;
    }
    ComparisonPhi const padded("padded", [r](double s) { return r * s * (1.0 + 1e-15); }, PhiClass::Custom);
    EXPECT_TRUE(check_boyd_wong(inst.space, inst.map, padded).passed) << i;
  }
}

TEST(Certifiers, DominatingGaugeDecidesContractivity)
{
  InstanceGenerator const gen({2, 5, 5});
  std::size_t             contractive = 0;
  for (std::size_t i = 0; i < 300; ++i)
  {
    auto const inst = gen(i);
    bool const want = oracle_contractive(inst.space, inst.map);
    contractive += want ? 1 : 0;
    auto const cert = check_lim(inst.space, inst.map, dominating_phi(inst.space, inst.map));
    EXPECT_EQ(cert.passed, want) << i;
    expect_witnesses_reproduce(cert, inst.space, inst.map);
  }
  EXPECT_GT(contractive, 0U);
  EXPECT_LT(contractive, 300U);
}

TEST(GeneralizedPhi, SwapAndFixedPoint)
{
  auto const swap = SelfMap::from_table({1, 0}, 2);
  auto const half = parse_phi("phi_linear:0.5");
  auto const cert = check_generalized_phi(two_points(), swap, half);
  EXPECT_FALSE(cert.passed);
  EXPECT_EQ(cert.margins.premise_active, 2U);
  EXPECT_TRUE(check_generalized_phi(two_points(), swap, parse_phi("phi_shifted:1")).passed);

  // a fixed, b -> a: premise 0 <= d(a,b) is active at a.
  auto const to_a = SelfMap::from_table({0, 0}, 2);
  auto const out  = evaluate_pair(Condition::GeneralizedPhi, two_points(), to_a, {.phi = half}, 0, 1);
  EXPECT_TRUE(out.premise_active);
  EXPECT_EQ(out.lhs, 0.0);
  EXPECT_EQ(out.rhs, 0.5);
  EXPECT_TRUE(out.holds);
}

TEST(Suzuki, IdentityFailsAnyR)
{
  auto const id = SelfMap::from_table({0, 1}, 2);
  for (double r : {0.0, 0.3, 0.65, 0.99})
  {
    auto const cert = check_suzuki_2008(two_points(), id, r);
    EXPECT_FALSE(cert.passed);
    expect_witnesses_reproduce(cert, two_points(), id);
  }
}

TEST(Certifiers, ParameterValidation)
{
  auto const s = two_points();
  auto const t = SelfMap::from_table({0, 0}, 2);
  EXPECT_THROW(certify(Condition::Main, s, t), InputError);
  EXPECT_THROW(certify(Condition::Suzuki2008, s, t, {.r = 1.0}), InputError);
  EXPECT_THROW(certify(Condition::EtaAlpha, s, t, {.eta = 0.0, .alpha = parse_alpha("alpha_reciprocal")}),
               InputError);
  GaugeAlpha const big("big", [](double) { return 2.0; }, AlphaClass::Custom);
  EXPECT_THROW(check_main(s, t, big), InputError);
  EXPECT_THROW(parse_condition("bogus"), InputError);
  for (auto c : all_conditions())
  {
    EXPECT_EQ(parse_condition(to_string(c)), c);
  }
}

TEST(Certifiers, LatticeHoldsOnRandomInstances)
{
  InstanceGenerator const gen({2, 5, 99});
  auto                    library = default_gauge_library();
  library.suzuki_rs               = {0.3, 0.65, 0.9};
  library.etas                    = {0.25, 0.5, 1.0};
  for (std::size_t i = 0; i < 1000; ++i)
  {
    auto const inst   = gen(i);
    auto const report = classify(inst.space, inst.map, library);
    ASSERT_TRUE(report.lattice_violations.empty()) << i << ": " << report.lattice_violations.front().detail;
    EXPECT_EQ(report.r_star, oracle_modulus(inst.space, inst.map));
  }
}

TEST(Certifiers, ClassifyTrivialMaps)
{
  auto const l      = line({0, 1, 3});
  auto const report = classify(l, SelfMap::from_table({0, 0, 0}, 3), default_gauge_library());
  EXPECT_EQ(report.r_star, 0.0);
  for (auto const &e : report.entries)
  {
    EXPECT_TRUE(e.passed) << to_string(e.condition) << " " << e.gauge;
  }
  auto const id = classify(l, SelfMap::from_table({0, 1, 2}, 3), default_gauge_library());
  EXPECT_EQ(id.r_star, 1.0);
  for (auto const &e : id.entries)
  {
    EXPECT_FALSE(e.passed) << to_string(e.condition) << " " << e.gauge;
  }
}

TEST(Certifiers, EtaMonotone)
{
  InstanceGenerator const gen({2, 5, 17});
  auto const              rec = parse_alpha("alpha_reciprocal");
  std::vector<double> const etas{0.1, 0.25, 0.5, 0.75, 1.0};
  for (std::size_t i = 0; i < 300; ++i)
  {
    auto const inst = gen(i);
    bool       seen = false;
    for (double eta : etas)
    {
      bool const passed = check_eta_alpha(inst.space, inst.map, eta, rec).passed;
      EXPECT_TRUE(!seen || passed) << i << " eta " << eta;
      seen = seen || passed;
    }
  }
}

TEST(Certifiers, ScaleInvariance)
{
  InstanceGenerator const gen({2, 5, 23});
  auto const              c09 = parse_alpha("alpha_const:0.9");
  auto const              rec = parse_alpha("alpha_reciprocal");
  for (std::size_t i = 0; i < 200; ++i)
  {
    auto const inst = gen(i);
    for (double c : {0.25, 2.0, 8.0})
    {
      auto const scaled = scale_transform(inst.space, c);
      auto const &t     = inst.map;
      EXPECT_EQ(banach_modulus(inst.space, t).r_star, banach_modulus(scaled, t).r_star);
      EXPECT_EQ(check_contractive(inst.space, t).passed, check_contractive(scaled, t).passed);
      EXPECT_EQ(check_half_condition(inst.space, t).passed, check_half_condition(scaled, t).passed);
      for (double r : {0.3, 0.65, 0.9})
      {
        EXPECT_EQ(check_suzuki_2008(inst.space, t, r).passed, check_suzuki_2008(scaled, t, r).passed);
      }
      EXPECT_EQ(check_main(inst.space, t, c09).passed, check_main(scaled, t, c09).passed);
      EXPECT_EQ(check_eta_alpha(inst.space, t, 0.5, c09).passed, check_eta_alpha(scaled, t, 0.5, c09).passed);

      // Non-constant gauge: the premise set follows the scaled distances.
      for (std::size_t x = 0; x < scaled.size(); ++x)
      {
        double const dxtx = c * inst.space.distance(x, t(x));
        for (std::size_t y = 0; y < scaled.size(); ++y)
        {
          bool const want = dxtx / (1.0 + rec(dxtx)) < c * inst.space.distance(x, y);
          EXPECT_EQ(evaluate_pair(Condition::Main, scaled, t, {.alpha = rec}, x, y).premise_active, want);
        }
      }
    }
  }
}

TEST(Certifiers, MainImpliesAtMostOneFixedPoint)
{
  auto const rec    = parse_alpha("alpha_reciprocal");
  std::size_t passing = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed)
  {
    Rng        rng(seed);
    auto const space = random_space(rng, 4);
    std::vector<std::size_t> table(4, 0);
    for (std::size_t code = 0; code < 256; ++code)
    {
      for (std::size_t k = 0, v = code; k < 4; ++k, v /= 4)
      {
        table[k] = v % 4;
      }
      auto const map = SelfMap::from_table(table, 4);
      if (check_main(space, map, rec).passed)
      {
        ++passing;
        EXPECT_LE(fixed_points(map).size(), 1U);
      }
    }
  }
  EXPECT_GT(passing, 0U);
}

TEST(Certifiers, ResultIndependentOfThreads)
{
  Rng        rng(5);
  auto const space = random_space(rng, 300);
  Rng        map_rng(6);
  std::vector<std::size_t> table(space.size());
  for (auto &v : table)
  {
    v = map_rng.index(space.size());
  }
  auto const map = SelfMap::from_table(table, space.size());
  ConditionParams const params{.alpha = parse_alpha("alpha_reciprocal")};
  auto const one = certify(Condition::Main, space, map, params, {1});
  ASSERT_FALSE(one.witnesses.empty());
  for (unsigned threads : {2U, 3U, 8U})
  {
    auto const many = certify(Condition::Main, space, map, params, {threads});
    EXPECT_EQ(many.witnesses, one.witnesses);
    EXPECT_EQ(many.margins.min_margin, one.margins.min_margin);
    EXPECT_EQ(many.margins.premise_active, one.margins.premise_active);
  }
  expect_witnesses_reproduce(one, space, map);
}

TEST(Certifiers, FragileMarginsAreFlagged)
{
  // Constant map against a gauge that is barely positive at d = 1.
  auto const s    = line({0, 1, 3});
  auto const t    = SelfMap::from_table({0, 0, 0}, 3);
  auto const cert = check_lim(s, t, phi_from_knots({{0.0, 0.0}, {10.0, 1e-11}}));
  EXPECT_TRUE(cert.passed);
  EXPECT_NEAR(cert.margins.min_margin, 1e-12, 1e-20);
  EXPECT_TRUE(cert.margins.fragile);
}
