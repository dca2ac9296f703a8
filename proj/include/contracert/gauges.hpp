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
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace contracert {

// -- theta --------------------------------------------------------------------

/// (sqrt(5) - 1) / 2, the first breakpoint of theta.
inline constexpr double kThetaGoldenBreak = 0.61803398874989484820;
/// 1 / sqrt(2), the second breakpoint of theta.
inline constexpr double kThetaSqrtHalfBreak = 0.70710678118654752440;

/// The Suzuki gauge theta: [0,1) -> (1/2, 1]. Throws InputError outside [0,1).
double theta(double r);

/// The three branch formulas, exposed so callers can check continuity at the
/// breakpoints. They are evaluated without any domain restriction.
double theta_branch_low(double r);
double theta_branch_mid(double r);
double theta_branch_high(double r);

// -- gauge functions -----------------------------------------------------------

enum class AlphaClass
{
  S,
  Psi,
  PsiPlus,
  Custom,
};

enum class PhiClass
{
  L,
  AlphaInduced,
  Custom,
};

char const *to_string(AlphaClass c) noexcept;
char const *to_string(PhiClass c) noexcept;

/// alpha: R+ -> (0, 1], with the class it is claimed to belong to.
class GaugeAlpha
{
public:
  GaugeAlpha(std::string name, std::function<double(double)> fn, AlphaClass claim,
             std::optional<double> psi_delta = std::nullopt)
    : name_(std::move(name))
    , fn_(std::move(fn))
    , claim_(claim)
    , psi_delta_(psi_delta)
  {}

  double operator()(double s) const
  {
    return fn_(s);
  }
  std::string const &name() const noexcept
  {
    return name_;
  }
  AlphaClass class_claim() const noexcept
  {
    return claim_;
  }
  /// A delta for which the monotonicity-near-zero condition is known to hold
  /// (infinity when alpha is nonincreasing).
  std::optional<double> psi_delta() const noexcept
  {
    return psi_delta_;
  }

private:
  std::string                   name_;
  std::function<double(double)> fn_;
  AlphaClass                    claim_;
  std::optional<double>         psi_delta_;
};

/// phi: R+ -> R+. When built from an alpha, eval(s) == alpha(s) * s exactly.
class ComparisonPhi
{
public:
  ComparisonPhi(std::string name, std::function<double(double)> fn, PhiClass claim)
    : name_(std::move(name))
    , fn_(std::move(fn))
    , claim_(claim)
  {}

  static ComparisonPhi from_alpha(GaugeAlpha alpha, std::string name = {});

  double operator()(double s) const
  {
    return fn_(s);
  }
  std::string const &name() const noexcept
  {
    return name_;
  }
  PhiClass class_claim() const noexcept
  {
    return claim_;
  }
  std::optional<GaugeAlpha> const &source_alpha() const noexcept
  {
    return source_alpha_;
  }

private:
  std::string                   name_;
  std::function<double(double)> fn_;
  PhiClass                      claim_;
  std::optional<GaugeAlpha>     source_alpha_;
};

/// alpha(s) = phi(s) / s; alpha(0) is taken at a tiny positive probe.
GaugeAlpha alpha_from_phi(ComparisonPhi phi, std::string name = {});

/// Knot table (s, value) with strictly increasing s. Linear interpolation
/// between knots, constant extrapolation outside.
using Knots = std::vector<std::pair<double, double>>;

GaugeAlpha    alpha_from_knots(Knots knots, std::string name = "custom");
ComparisonPhi phi_from_knots(Knots knots, std::string name = "custom");

/// Registry lookup:
///   alpha_reciprocal | alpha_const:<c> | alpha_from_phi[:<phi spec>]
GaugeAlpha parse_alpha(std::string const &spec);
///   phi_linear:<r> | phi_saturating | phi_shifted:<c> | phi_from_alpha[:<alpha spec>]
ComparisonPhi parse_phi(std::string const &spec);

std::vector<std::string> builtin_gauge_names();

// -- class falsifiers ----------------------------------------------------------

/// Slack applied toward the permissive side when comparing computed values in
/// class clauses.
inline constexpr double kClassSlack = 1e-12;

enum class ClassStatus
{
  Falsified,
  NotFalsifiedOnGrid,
};

char const *to_string(ClassStatus s) noexcept;

struct ClassWitness
{
  std::string              clause;
  std::vector<double>      inputs;
  std::vector<double>      values;
  std::vector<std::size_t> indices;  ///< sequence positions, for sequence witnesses
};

struct ClassCertificate
{
  ClassStatus                 status{ClassStatus::NotFalsifiedOnGrid};
  std::optional<ClassWitness> witness;
  std::string                 grid_spec;
  double                      slack{kClassSlack};
};

/// `count` points geometrically spaced from `from` to `to` (both included, either order).
std::vector<double> geometric_grid(double from, double to, std::size_t count);

struct LFunctionGrid
{
  std::vector<double> s_grid;         ///< points s > 0 to test
  std::vector<double> delta_factors;  ///< descending; delta = factor * s
  std::size_t         t_samples{16};  ///< t = s + delta * k / t_samples, k = 0..t_samples
};

LFunctionGrid default_l_grid();

/// Looks for a violation of phi(0) = 0, phi(s) > 0, or of the existence of a
/// delta with phi(t) <= s on [s, s + delta].
ClassCertificate falsify_l(ComparisonPhi const &phi, LFunctionGrid const &grid = default_l_grid());

struct GeraghtySearch
{
  std::size_t         n_max{10000};
  std::vector<double> search_grid;
};

GeraghtySearch default_geraghty_search();

/// For n = 1..n_max picks the largest grid s with alpha(s) >= 1 - 1/n. If that
/// sequence stays above 10 * min(grid) over the second half of n, alpha is not
/// in class S and the sequence is returned as witness.
ClassCertificate falsify_geraghty(GaugeAlpha const &alpha, GeraghtySearch const &search = default_geraghty_search());

using SBuilder = std::function<std::vector<double>(double upper)>;

/// Samples of (0, upper): 64 equally spaced interior points plus 16 geometric ones.
SBuilder default_s_builder();
std::vector<double> default_psi_t_grid(double delta);

/// Tests 0 < t < delta, 0 < s < alpha(t) t  =>  alpha(t) <= alpha(s).
ClassCertificate falsify_psi(GaugeAlpha const &alpha, double delta, std::vector<double> const &t_grid,
                             SBuilder const &s_builder = default_s_builder());
ClassCertificate falsify_psi(GaugeAlpha const &alpha, double delta);

/// Largest delta in `candidates` (tried in descending order) for which
/// falsify_psi finds nothing.
std::optional<double> psi_delta_search(GaugeAlpha const &alpha, std::vector<double> candidates);

/// Lower-envelope estimate of liminf_{s -> 0+} alpha(s): the sup over tails of
/// the grid holding at least a quarter of its points of the tail infimum, which
/// is the infimum over the final quarter.
double alpha0_estimate(GaugeAlpha const &alpha, std::vector<double> const &shrink_grid);
std::vector<double> default_shrink_grid();

}  // namespace contracert
