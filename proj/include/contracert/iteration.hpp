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

#include "contracert/gauges.hpp"
#include "contracert/instances.hpp"
#include "contracert/metric.hpp"
#include "contracert/real_maps.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace contracert {

enum class OrbitStatus
{
  Fixed,
  Cycle,
  MaxIterReached,
};

char const *to_string(OrbitStatus s) noexcept;

/// Picard orbit x_0, x_1 = T x_0, ... on a finite space.
///
/// points holds x_0..x_K. For Fixed and Cycle traces step_dists holds s_0..s_K
/// with s_k = d(x_k, x_{k+1}); for Fixed, s_K = 0 and x_{K+1} = x_K; for Cycle,
/// x_{K+1} = x_entry. For MaxIterReached, step_dists stops at s_{K-1}.
struct OrbitTrace
{
  std::size_t              start{0};
  std::vector<std::size_t> points;
  std::vector<double>      step_dists;
  OrbitStatus              status{OrbitStatus::MaxIterReached};
  std::size_t              fixed_step{0};
  std::size_t              cycle_entry{0};
  std::size_t              cycle_length{0};
  bool                     strict_decrease_ok{false};

  bool eventually_periodic() const noexcept
  {
    return status != OrbitStatus::MaxIterReached;
  }
  /// Index where the periodic part starts (fixed_step or cycle_entry).
  std::size_t periodic_start() const noexcept;
  /// Period of the tail: 1 for fixed points, cycle_length for cycles.
  std::size_t period() const noexcept;
  /// x_k for any k, continuing the orbit periodically past the record.
  /// Throws std::out_of_range for truncated traces.
  std::size_t point_at(std::size_t k) const;
  double      step_at(std::size_t k) const;
};

/// Iterates until the first repeated point (fixed point or cycle) or until
/// max_iter applications of T. Throws InputError for a bad start or max_iter = 0.
OrbitTrace picard(FiniteMetricSpace const &space, SelfMap const &map, std::size_t x0, std::size_t max_iter);

/// Step distance below which a real orbit is considered to have stopped.
inline constexpr double kRealFixedTolerance = 1e-12;

/// Orbit of a 1-D real map; status is Fixed once a step falls below `tol`.
struct RealOrbitTrace
{
  double              start{0.0};
  std::vector<double> points;
  std::vector<double> step_dists;
  OrbitStatus         status{OrbitStatus::MaxIterReached};
  std::size_t         fixed_step{0};
  double              tolerance{kRealFixedTolerance};
  bool                strict_decrease_ok{false};
};

RealOrbitTrace picard(RealMap const &map, double x0, std::size_t max_iter, double tol = kRealFixedTolerance);

std::vector<std::size_t> fixed_points(SelfMap const &map);

struct StrictDecrease
{
  bool                       ok{true};
  bool                       vacuous{false};  ///< fewer than two nonzero steps
  std::optional<std::size_t> first_violation;  ///< n with s_{n+1} >= s_n
};

/// Checks s_{n+1} < s_n over the nonzero steps. Cycles are closed by one wrap
/// step, since a periodic nonconstant sequence cannot keep decreasing.
StrictDecrease check_strict_decrease(OrbitTrace const &trace);
StrictDecrease check_strict_decrease(RealOrbitTrace const &trace);

enum class CauchyStatus
{
  Holds,
  Violated,
  Inconclusive,
};

char const *to_string(CauchyStatus s) noexcept;

/// Replay of the Cauchy argument: s = eps/2, delta = delta_fraction * s,
/// N = first index from which every step is below delta, then check
/// d(x_n, x_{n+m}) < delta + s for n >= N.
struct CauchyCertificate
{
  double                                         epsilon{0.0};
  double                                         s_value{0.0};
  double                                         delta_used{0.0};
  std::size_t                                    n_used{0};
  bool                                           n_from_recipe{true};
  std::size_t                                    verified_window{0};
  CauchyStatus                                   status{CauchyStatus::Inconclusive};
  std::optional<std::pair<std::size_t, std::size_t>> first_violation;  ///< (n, m)

  bool holds() const noexcept
  {
    return status == CauchyStatus::Holds;
  }
};

/// For eventually periodic orbits, where steps never drop below delta (a cycle
/// with a large step), N falls back to the cycle entry and n_from_recipe is
/// false; the check then exposes the violation directly.
CauchyCertificate cauchy_claim_check(FiniteMetricSpace const &space, OrbitTrace const &trace, double epsilon,
                                     double delta_fraction = 0.5);
CauchyCertificate cauchy_claim_check(RealOrbitTrace const &trace, double epsilon, double delta_fraction = 0.5);

struct EitherOrStep
{
  std::size_t         n{0};
  double              first_lhs{0.0};   ///< d(x_n,Tx_n) / (1 + alpha(d(x_n,Tx_n)))
  double              first_rhs{0.0};   ///< d(x_n, z)
  double              second_lhs{0.0};  ///< same one step later
  double              second_rhs{0.0};  ///< d(x_{n+1}, z)
  bool                first{false};
  bool                second{false};
  bool                vacuous{false};   ///< x_n = T x_n
  bool                aux{false};       ///< 1/(1+a_n) + a_n/(1+a_{n+1}) <= 1
  std::optional<bool> consequence;      ///< only when T satisfies main and Tz = z
};

struct EitherOrReport
{
  std::size_t               z{0};
  std::size_t               n_used{0};
  double                    delta_used{0.0};
  bool                      holds{true};
  bool                      consequence_checked{false};
  bool                      consequence_holds{true};
  std::vector<std::size_t>  failed;
  std::vector<EitherOrStep> steps;
};

/// Checks, for n >= N, that one of the two premise forms of the main condition
/// is active along the orbit relative to z. N defaults to the first n with
/// d(x_n, Tx_n) < delta, where delta is the alpha's Psi delta (or `delta`).
/// Never throws on a failed n; failures are listed in the report.
EitherOrReport either_or_diagnostic(FiniteMetricSpace const &space, SelfMap const &map, GaugeAlpha const &alpha,
                                    OrbitTrace const &trace, std::size_t z,
                                    std::optional<std::size_t> n_start = std::nullopt,
                                    std::optional<double>      delta   = std::nullopt);

struct AdmissibilityCounterexample
{
  std::size_t       instance_index{0};
  FiniteMetricSpace space;
  SelfMap           map;
  std::size_t       start{0};
  OrbitTrace        trace;
};

struct AdmissibilitySearch
{
  std::optional<AdmissibilityCounterexample> counterexample;
  std::size_t                                instances_tried{0};
  std::size_t                                instances_passing{0};
  std::size_t                                orbits_checked{0};
  std::size_t                                strict_decrease_violations{0};
  /// (instance index, start) of the first strict-decrease violation
  std::optional<std::pair<std::size_t, std::size_t>> first_strict_violation;
};

/// Searches instances 0..budget-1 for a generalized phi-contraction with an
/// orbit that does not become constant. Also checks strict step decrease on
/// every orbit of every passing instance up to its fixed point. The result is
/// independent of `threads`.
AdmissibilitySearch admissibility_falsify(ComparisonPhi const &phi, InstanceSpec const &spec, std::size_t budget,
                                          unsigned threads = 1);

inline constexpr double kSubsequenceRatioTolerance = 1e-3;
inline constexpr double kSubsequenceDistanceFloor  = 1e-6;

struct SubsequenceFamily
{
  std::size_t phase{0};   ///< p_0
  std::size_t offset{0};  ///< q_n - p_n
  std::size_t stride{0};  ///< p_{n+1} - p_n
  bool        admissible{false};
  double      tail_min_delta{0.0};
  double      tail_max_ratio_gap{0.0};  ///< max |Delta_n - 1| over the tail
  bool        flagged{false};
};

struct SubsequenceReport
{
  bool                             vacuous{false};
  bool                             flagged{false};
  std::size_t                      samples_per_family{0};
  std::size_t                      admissible_families{0};
  std::vector<SubsequenceFamily>   families;
  std::optional<SubsequenceFamily> witness;
};

/// Falsification-only probe of the subsequence condition on the orbit of x:
/// families p_n = phase + n * stride, q_n = p_n + offset over `subseq_budget`
/// samples. A family is admissible when every sample has
/// 0 < d(x_p, x_q) and d(x_p, T x_p) <= d(x_p, x_q). It is flagged when, over the
/// last quarter of its samples, |Delta_n - 1| <= 1e-3 while delta_n >= 1e-6.
SubsequenceReport subsequence_falsify(FiniteMetricSpace const &space, SelfMap const &map, std::size_t x,
                                    std::size_t subseq_budget = 64);

}  // namespace contracert
