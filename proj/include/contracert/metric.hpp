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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace contracert {

/// Default triangle tolerance for user supplied matrices.
inline constexpr double kDefaultMetricTolerance = 1e-9;
/// Tolerance used to re-validate spaces produced by the transforms below,
/// relative to max(1, diameter).
inline constexpr double kTransformTolerance = 1e-12;

/// Row-major square matrix of doubles.
class SquareMatrix
{
public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n, double fill = 0.0)
    : n_(n)
    , data_(n * n, fill)
  {}

  /// Throws InputError if the rows are ragged or not square.
  static SquareMatrix from_rows(std::vector<std::vector<double>> const &rows);

  std::size_t size() const noexcept
  {
    return n_;
  }
  double operator()(std::size_t i, std::size_t j) const noexcept
  {
    return data_[i * n_ + j];
  }
  double &operator()(std::size_t i, std::size_t j) noexcept
  {
    return data_[i * n_ + j];
  }
  std::span<double const> values() const noexcept
  {
    return data_;
  }

  friend bool operator==(SquareMatrix const &, SquareMatrix const &) = default;

private:
  std::size_t         n_{0};
  std::vector<double> data_;
};

enum class Axiom
{
  ZeroDiagonal,
  Positivity,
  Symmetry,
  Triangle,
};

char const *to_string(Axiom axiom) noexcept;

struct AxiomViolation
{
  Axiom       axiom;
  std::size_t i;
  std::size_t j;
  std::size_t k;      ///< intermediate point for Triangle, otherwise equal to j
  double      slack;  ///< amount by which the axiom is violated (> 0)
};

struct ValidationReport
{
  bool                        passed{true};
  double                      tolerance{kDefaultMetricTolerance};
  std::vector<AxiomViolation> violations;
};

/// Checks every metric axiom on `matrix`. Triangle violations are reported
/// for each ordered triple (i, j, k) with d(i,k) > d(i,j) + d(j,k) + tol.
/// Throws InputError on non-finite entries.
ValidationReport validate_metric(SquareMatrix const &matrix, double tol = kDefaultMetricTolerance);

enum class PointMetric
{
  Euclidean,
  Manhattan,
  Chebyshev,
};

PointMetric parse_point_metric(std::string const &name);
char const *to_string(PointMetric kind) noexcept;

/// A finite metric space: labelled points plus a validated distance matrix.
/// Instances are immutable; every constructor validates the axioms.
class FiniteMetricSpace
{
public:
  /// Validates `matrix` at `tol` and throws InputError listing the first
  /// violations when it is not a metric. Empty labels are replaced by "0", "1", ...
  static FiniteMetricSpace from_matrix(SquareMatrix matrix, std::vector<std::string> labels = {},
                                       double tol = kDefaultMetricTolerance);

  static FiniteMetricSpace from_points(std::vector<std::vector<double>> const &points,
                                       PointMetric kind, std::vector<std::string> labels = {});

  std::size_t size() const noexcept
  {
    return dist_.size();
  }
  double distance(std::size_t i, std::size_t j) const noexcept
  {
    return dist_(i, j);
  }
  SquareMatrix const &matrix() const noexcept
  {
    return dist_;
  }
  std::vector<std::string> const &labels() const noexcept
  {
    return labels_;
  }
  double diameter() const noexcept;

  /// Index of the point with the given label, or size() if absent.
  std::size_t find_label(std::string const &label) const noexcept;

private:
  FiniteMetricSpace(SquareMatrix m, std::vector<std::string> labels)
    : dist_(std::move(m))
    , labels_(std::move(labels))
  {}

  SquareMatrix             dist_;
  std::vector<std::string> labels_;
};

/// d(x,y) = delta * rho(x,y) / (1 + rho(x,y)). Bounded by delta, same topology
/// and Cauchy sequences as rho.
FiniteMetricSpace bounded_transform(FiniteMetricSpace const &space, double delta);

/// d'(x,y) = c * d(x,y).
FiniteMetricSpace scale_transform(FiniteMetricSpace const &space, double c);

/// A total self-map on the indices of a finite space.
class SelfMap
{
public:
  /// Throws InputError unless every entry is < n.
  static SelfMap from_table(std::vector<std::size_t> table, std::size_t n);

  std::size_t operator()(std::size_t i) const noexcept
  {
    return table_[i];
  }
  std::size_t size() const noexcept
  {
    return table_.size();
  }
  std::vector<std::size_t> const &table() const noexcept
  {
    return table_;
  }

  friend bool operator==(SelfMap const &, SelfMap const &) = default;

private:
  explicit SelfMap(std::vector<std::size_t> table)
    : table_(std::move(table))
  {}

  std::vector<std::size_t> table_;
};

}  // namespace contracert
