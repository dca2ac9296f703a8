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

#include "contracert/error.hpp"
#include "contracert/metric.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace contracert;

namespace {

// Independent brute-force check of all axioms on a row-major table.
std::size_t count_violations(std::vector<std::vector<double>> const &d, double tol)
{
  std::size_t const n     = d.size();
  std::size_t       count = 0;
  for (std::size_t i = 0; i < n; ++i)
  {
    count += d[i][i] != 0.0 ? 1 : 0;
    for (std::size_t j = 0; j < n; ++j)
    {
      if (i != j && !(d[i][j] > 0.0))
      {
        ++count;
      }
      if (i < j && std::abs(d[i][j] - d[j][i]) > tol)
      {
        ++count;
      }
      for (std::size_t k = 0; k < n; ++k)
      {
        if (i != j && j != k && i != k && d[i][k] > d[i][j] + d[j][k] + tol)
        {
          ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace

TEST(Metric, AgreesWithBruteForceOnRandomTables)
{
  std::mt19937                           gen(7);
  std::uniform_real_distribution<double> entry(0.1, 3.0);
  std::size_t                            failing = 0;
  for (int trial = 0; trial < 500; ++trial)
  {
    std::size_t const                n = 2 + trial % 5;
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
    {
      for (std::size_t j = i + 1; j < n; ++j)
      {
        d[i][j] = d[j][i] = entry(gen);
      }
    }
    if (trial % 7 == 0)
    {
      d[0][1] += 0.5;  // break symmetry
    }
    auto const report = validate_metric(SquareMatrix::from_rows(d));
    std::size_t const expected = count_violations(d, kDefaultMetricTolerance);
    EXPECT_EQ(report.violations.size(), expected);
    EXPECT_EQ(report.passed, expected == 0);
    failing += report.passed ? 0 : 1;
  }
  EXPECT_GT(failing, 0U);
  EXPECT_LT(failing, 500U);
}

TEST(Metric, ReportsEachAxiom)
{
  auto const asym = validate_metric(SquareMatrix::from_rows({{0, 1}, {2, 0}}));
  ASSERT_FALSE(asym.passed);
  EXPECT_EQ(asym.violations.front().axiom, Axiom::Symmetry);
  EXPECT_DOUBLE_EQ(asym.violations.front().slack, 1.0);

  auto const diag = validate_metric(SquareMatrix::from_rows({{1, 1}, {1, 0}}));
  EXPECT_EQ(diag.violations.front().axiom, Axiom::ZeroDiagonal);

  auto const zero = validate_metric(SquareMatrix::from_rows({{0, 0}, {0, 0}}));
  EXPECT_EQ(zero.violations.size(), 2U);
  EXPECT_EQ(zero.violations.front().axiom, Axiom::Positivity);

  // d(0,2) = 5 > d(0,1) + d(1,2) = 2
  auto const tri = validate_metric(SquareMatrix::from_rows({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}));
  ASSERT_EQ(tri.violations.size(), 2U);
  auto const &v = tri.violations.front();
  EXPECT_EQ(v.axiom, Axiom::Triangle);
  EXPECT_EQ(v.i, 0U);
  EXPECT_EQ(v.j, 2U);
  EXPECT_EQ(v.k, 1U);
  EXPECT_DOUBLE_EQ(v.slack, 3.0);
}

TEST(Metric, TriangleTolerance)
{
  auto const m = SquareMatrix::from_rows({{0, 1, 2 + 1e-10}, {1, 0, 1}, {2 + 1e-10, 1, 0}});
  EXPECT_TRUE(validate_metric(m, 1e-9).passed);
  EXPECT_FALSE(validate_metric(m, 0.0).passed);
}

TEST(Metric, RejectsNonFiniteAndRagged)
{
  EXPECT_THROW(validate_metric(SquareMatrix::from_rows({{0, NAN}, {NAN, 0}})), InputError);
  EXPECT_THROW(SquareMatrix::from_rows({{0, 1}, {1}}), InputError);
  EXPECT_THROW(FiniteMetricSpace::from_matrix(SquareMatrix::from_rows({{0, 1}, {2, 0}})), InputError);
}

TEST(Metric, PointMetricsMatchHandComputation)
{
  std::vector<std::vector<double>> const pts{{0, 0}, {1, 2}, {3, 1}};
  auto const manhattan = FiniteMetricSpace::from_points(pts, PointMetric::Manhattan);
  EXPECT_EQ(manhattan.distance(0, 1), 3.0);
  EXPECT_EQ(manhattan.distance(0, 2), 4.0);
  EXPECT_EQ(manhattan.distance(1, 2), 3.0);

  auto const cheb = FiniteMetricSpace::from_points(pts, PointMetric::Chebyshev);
  EXPECT_EQ(cheb.distance(0, 1), 2.0);
  EXPECT_EQ(cheb.distance(0, 2), 3.0);

  auto const eu = FiniteMetricSpace::from_points(pts, PointMetric::Euclidean);
  EXPECT_EQ(eu.distance(0, 1), std::sqrt(5.0));
  EXPECT_EQ(eu.distance(1, 2), std::sqrt(5.0));
  EXPECT_EQ(eu.labels(), (std::vector<std::string>{"0", "1", "2"}));
  EXPECT_DOUBLE_EQ(eu.diameter(), std::sqrt(10.0));
}

TEST(Metric, CoincidentPointsAreAnInputError)
{
  EXPECT_THROW(FiniteMetricSpace::from_points({{1, 1}, {1, 1}}, PointMetric::Euclidean), InputError);
}

TEST(Metric, BoundedTransformValues)
{
  auto const line    = FiniteMetricSpace::from_points({{0}, {1}, {3}}, PointMetric::Euclidean);
  auto const bounded = bounded_transform(line, 1.0);
  EXPECT_EQ(bounded.distance(0, 1), 1.0 / 2.0);
  EXPECT_EQ(bounded.distance(1, 2), 2.0 / 3.0);
  EXPECT_EQ(bounded.distance(0, 2), 3.0 / 4.0);
  EXPECT_TRUE(validate_metric(bounded.matrix()).passed);

  auto const wide = bounded_transform(line, 4.0);
  EXPECT_EQ(wide.distance(0, 2), 3.0);
  EXPECT_THROW(bounded_transform(line, 0.0), InputError);
}

TEST(Metric, ScaleTransform)
{
  auto const line   = FiniteMetricSpace::from_points({{0}, {1}, {3}}, PointMetric::Euclidean);
  auto const scaled = scale_transform(line, 2.0);
  EXPECT_EQ(scaled.distance(0, 2), 6.0);
  EXPECT_EQ(scaled.labels(), line.labels());
  EXPECT_THROW(scale_transform(line, -1.0), InputError);
}

TEST(Metric, LabelsAndLookup)
{
  auto const s = FiniteMetricSpace::from_matrix(SquareMatrix::from_rows({{0, 1}, {1, 0}}), {"a", "b"});
  EXPECT_EQ(s.find_label("b"), 1U);
  EXPECT_EQ(s.find_label("z"), 2U);
  EXPECT_THROW(FiniteMetricSpace::from_matrix(SquareMatrix::from_rows({{0, 1}, {1, 0}}), {"a"}), InputError);
}

TEST(Metric, SelfMapTable)
{
  auto const m = SelfMap::from_table({1, 0, 2}, 3);
  EXPECT_EQ(m(0), 1U);
  EXPECT_THROW(SelfMap::from_table({0, 3, 1}, 3), InputError);
  EXPECT_THROW(SelfMap::from_table({0, 1}, 3), InputError);
}
