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

#include "contracert/metric.hpp"

#include "contracert/error.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace contracert {

SquareMatrix SquareMatrix::from_rows(std::vector<std::vector<double>> const &rows)
{
  std::size_t const n = rows.size();
  SquareMatrix      m(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    if (rows[i].size() != n)
    {
      std::ostringstream msg;
      msg << "matrix row " << i << " has " << rows[i].size() << " entries, expected " << n;
      throw InputError(msg.str());
    }
    for (std::size_t j = 0; j < n; ++j)
    {
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

char const *to_string(Axiom axiom) noexcept
{
  switch (axiom)
  {
  case Axiom::ZeroDiagonal:
    return "zero_diagonal";
  case Axiom::Positivity:
    return "positivity";
  case Axiom::Symmetry:
    return "symmetry";
  case Axiom::Triangle:
    return "triangle";
  }
  return "unknown";
}

ValidationReport validate_metric(SquareMatrix const &matrix, double tol)
{
  if (!std::isfinite(tol) || tol < 0.0)
  {
    throw InputError("tol_metric must be a finite nonnegative number");
  }
  std::size_t const n = matrix.size();
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      if (!std::isfinite(matrix(i, j)))
      {
        std::ostringstream msg;
        msg << "matrix entry (" << i << ", " << j << ") is not finite";
        throw InputError(msg.str());
      }
    }
  }

  ValidationReport report;
  report.tolerance = tol;
  auto &out        = report.violations;

  for (std::size_t i = 0; i < n; ++i)
  {
    if (matrix(i, i) != 0.0)
    {
      out.push_back({Axiom::ZeroDiagonal, i, i, i, std::abs(matrix(i, i))});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      if (i != j && matrix(i, j) <= 0.0)
      {
        out.push_back({Axiom::Positivity, i, j, j, -matrix(i, j)});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = i + 1; j < n; ++j)
    {
      double const gap = std::abs(matrix(i, j) - matrix(j, i));
      if (gap > tol)
      {
        out.push_back({Axiom::Symmetry, i, j, j, gap});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t k = 0; k < n; ++k)
    {
      if (i == k)
      {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j)
      {
        if (j == i || j == k)
        {
          continue;
        }
        double const excess = matrix(i, k) - (matrix(i, j) + matrix(j, k));
        if (excess > tol)
        {
          out.push_back({Axiom::Triangle, i, k, j, excess});
        }
      }
    }
  }

  report.passed = out.empty();
  return report;
}

PointMetric parse_point_metric(std::string const &name)
{
  if (name == "euclidean")
  {
    return PointMetric::Euclidean;
  }
  if (name == "manhattan")
  {
    return PointMetric::Manhattan;
  }
  if (name == "chebyshev")
  {
    return PointMetric::Chebyshev;
  }
  throw InputError("unknown metric '" + name + "' (expected euclidean, manhattan or chebyshev)");
}

char const *to_string(PointMetric kind) noexcept
{
  switch (kind)
  {
  case PointMetric::Euclidean:
    return "euclidean";
  case PointMetric::Manhattan:
    return "manhattan";
  case PointMetric::Chebyshev:
    return "chebyshev";
  }
  return "unknown";
}

namespace {

std::vector<std::string> default_labels(std::size_t n)
{
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    labels.push_back(std::to_string(i));
  }
  return labels;
}

std::vector<std::string> checked_labels(std::vector<std::string> labels, std::size_t n)
{
  if (labels.empty())
  {
    return default_labels(n);
  }
  if (labels.size() != n)
  {
    std::ostringstream msg;
    msg << "labels has " << labels.size() << " entries but the space has " << n << " points";
    throw InputError(msg.str());
  }
  return labels;
}

std::string describe(ValidationReport const &report)
{
  std::ostringstream msg;
  msg << "matrix is not a metric (" << report.violations.size() << " violations";
  auto const &v = report.violations.front();
  msg << "; first: " << to_string(v.axiom) << " at (" << v.i << ", " << v.j;
  if (v.axiom == Axiom::Triangle)
  {
    msg << ") via " << v.k;
  }
  else
  {
    msg << ")";
  }
  msg << ", slack " << v.slack << ")";
  return msg.str();
}

double internal_tolerance(SquareMatrix const &m)
{
  double diam = 0.0;
  for (double v : m.values())
  {
    diam = std::max(diam, v);
  }
  return kTransformTolerance * std::max(1.0, diam);
}

}  // namespace

FiniteMetricSpace FiniteMetricSpace::from_matrix(SquareMatrix matrix, std::vector<std::string> labels,
                                                 double tol)
{
  if (matrix.size() == 0)
  {
    throw InputError("a metric space needs at least one point");
  }
  auto report = validate_metric(matrix, tol);
  if (!report.passed)
  {
    throw InputError(describe(report));
  }
  std::size_t const n = matrix.size();
  return FiniteMetricSpace(std::move(matrix), checked_labels(std::move(labels), n));
}

FiniteMetricSpace FiniteMetricSpace::from_points(std::vector<std::vector<double>> const &points,
                                                 PointMetric kind, std::vector<std::string> labels)
{
  std::size_t const n = points.size();
  if (n == 0)
  {
    throw InputError("points is empty");
  }
  std::size_t const dim = points.front().size();
  if (dim == 0)
  {
    throw InputError("points must have at least one coordinate");
  }
  for (std::size_t i = 0; i < n; ++i)
  {
    if (points[i].size() != dim)
    {
      std::ostringstream msg;
      msg << "point " << i << " has dimension " << points[i].size() << ", expected " << dim;
      throw InputError(msg.str());
    }
    for (double c : points[i])
    {
      if (!std::isfinite(c))
      {
        std::ostringstream msg;
        msg << "point " << i << " has a non-finite coordinate";
        throw InputError(msg.str());
      }
    }
  }

  SquareMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = i + 1; j < n; ++j)
    {
      double acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c)
      {
        double const diff = std::abs(points[i][c] - points[j][c]);
        switch (kind)
        {
        case PointMetric::Euclidean:
          acc += diff * diff;
          break;
        case PointMetric::Manhattan:
          acc += diff;
          break;
        case PointMetric::Chebyshev:
          acc = std::max(acc, diff);
          break;
        }
      }
      double const d = kind == PointMetric::Euclidean ? std::sqrt(acc) : acc;
      if (d == 0.0)
      {
        std::ostringstream msg;
        msg << "points " << i << " and " << j << " coincide";
        throw InputError(msg.str());
      }
      m(i, j) = d;
      m(j, i) = d;
    }
  }
  double const tol = internal_tolerance(m);
  return from_matrix(std::move(m), std::move(labels), tol);
}

double FiniteMetricSpace::diameter() const noexcept
{
  double diam = 0.0;
  for (double v : dist_.values())
  {
    diam = std::max(diam, v);
  }
  return diam;
}

std::size_t FiniteMetricSpace::find_label(std::string const &label) const noexcept
{
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return static_cast<std::size_t>(it - labels_.begin());
}

FiniteMetricSpace bounded_transform(FiniteMetricSpace const &space, double delta)
{
  if (!(delta > 0.0) || !std::isfinite(delta))
  {
    throw InputError("bounded_transform: delta must be a positive finite number");
  }
  std::size_t const n = space.size();
  SquareMatrix      m(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      double const rho = space.distance(i, j);
      m(i, j)          = delta * rho / (1.0 + rho);
    }
  }
  double const tol = internal_tolerance(m);
  return FiniteMetricSpace::from_matrix(std::move(m), space.labels(), tol);
}

FiniteMetricSpace scale_transform(FiniteMetricSpace const &space, double c)
{
  if (!(c > 0.0) || !std::isfinite(c))
  {
    throw InputError("scale_transform: c must be a positive finite number");
  }
  std::size_t const n = space.size();
  SquareMatrix      m(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    for (std::size_t j = 0; j < n; ++j)
    {
      m(i, j) = c * space.distance(i, j);
    }
  }
  double const tol = internal_tolerance(m);
  return FiniteMetricSpace::from_matrix(std::move(m), space.labels(), tol);
}

SelfMap SelfMap::from_table(std::vector<std::size_t> table, std::size_t n)
{
  if (table.size() != n)
  {
    std::ostringstream msg;
    msg << "map table has " << table.size() << " entries but the space has " << n << " points";
    throw InputError(msg.str());
  }
  for (std::size_t i = 0; i < table.size(); ++i)
  {
    if (table[i] >= n)
    {
      std::ostringstream msg;
      msg << "map table entry " << i << " = " << table[i] << " is not a point index (n = " << n << ")";
      throw InputError(msg.str());
    }
  }
  return SelfMap(std::move(table));
}

}  // namespace contracert
