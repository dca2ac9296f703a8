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
#include "contracert/metric.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace contracert {

enum class Condition
{
  Banach,
  Contractive,
  BoydWong,
  Lim,
  GeneralizedPhi,
  Suzuki2008,
  HalfCondition,
  Main,
  EtaAlpha,
};

char const *to_string(Condition c) noexcept;
Condition   parse_condition(std::string const &name);
std::vector<Condition> all_conditions();

/// Parameters consumed by the individual conditions; unused ones are ignored.
struct ConditionParams
{
  std::optional<double>        r;      ///< suzuki_2008
  std::optional<double>        eta;    ///< eta_alpha
  std::optional<ComparisonPhi> phi;    ///< boyd_wong, lim, generalized_phi
  std::optional<GaugeAlpha>    alpha;  ///< main, eta_alpha
};

/// Outcome of one ordered pair (x, y). For conditions without a premise the
/// premise sides are zero and `premise_active` encodes the x != y rule.
/// banach and suzuki_2008 compare the ratio d(Tx,Ty)/d(x,y) against their
/// constant, so their conclusion sides are ratios; every other condition
/// compares distances.
struct PairOutcome
{
  std::size_t x{0};
  std::size_t y{0};
  bool        premise_active{false};
  double      premise_lhs{0.0};
  double      premise_rhs{0.0};
  double      lhs{0.0};
  double      rhs{0.0};
  bool        holds{true};

  bool violated() const noexcept
  {
    return premise_active && !holds;
  }
  friend bool operator==(PairOutcome const &, PairOutcome const &) = default;
};

/// Below this margin a satisfied comparison is reported as numerically fragile.
inline constexpr double kFragileMargin = 1e-9;

struct MarginStats
{
  double      min_margin{std::numeric_limits<double>::infinity()};  ///< +inf when no premise-active pair was satisfied
  std::size_t pairs_checked{0};
  std::size_t premise_active{0};
  std::size_t premise_inactive{0};
  bool        fragile{false};
};

struct Certificate
{
  Condition                condition{Condition::Banach};
  ConditionParams          params;
  bool                     passed{true};
  std::vector<PairOutcome> witnesses;  ///< sorted by (x, y)
  MarginStats              margins{};
  std::optional<double>    r_star;     ///< banach only
};

struct CertifyOptions
{
  unsigned threads{1};
};

/// Evaluates a single ordered pair exactly as the certifier does. Gauge values
/// are not range-checked here; certify() validates them up front.
PairOutcome evaluate_pair(Condition c, FiniteMetricSpace const &space, SelfMap const &map,
                          ConditionParams const &params, std::size_t x, std::size_t y);

/// Exhaustive check over all ordered pairs. Throws InputError when a required
/// parameter is missing or a gauge leaves its admissible range on the
/// distances of `space`.
Certificate certify(Condition c, FiniteMetricSpace const &space, SelfMap const &map,
                    ConditionParams const &params = {}, CertifyOptions const &opts = {});

struct BanachResult
{
  double      r_star{0.0};
  Certificate certificate;
};

/// r_star = max over x != y of d(Tx,Ty)/d(x,y); passes iff r_star < 1.
BanachResult banach_modulus(FiniteMetricSpace const &space, SelfMap const &map);

Certificate check_contractive(FiniteMetricSpace const &space, SelfMap const &map);
Certificate check_boyd_wong(FiniteMetricSpace const &space, SelfMap const &map, ComparisonPhi const &phi);
Certificate check_lim(FiniteMetricSpace const &space, SelfMap const &map, ComparisonPhi const &phi);
Certificate check_generalized_phi(FiniteMetricSpace const &space, SelfMap const &map, ComparisonPhi const &phi);
Certificate check_suzuki_2008(FiniteMetricSpace const &space, SelfMap const &map, double r);
Certificate check_half_condition(FiniteMetricSpace const &space, SelfMap const &map);
Certificate check_main(FiniteMetricSpace const &space, SelfMap const &map, GaugeAlpha const &alpha);
Certificate check_eta_alpha(FiniteMetricSpace const &space, SelfMap const &map, double eta, GaugeAlpha const &alpha);

// -- classification ------------------------------------------------------------

struct GaugeLibrary
{
  std::vector<GaugeAlpha>    alphas;
  std::vector<ComparisonPhi> phis;
  std::vector<double>        etas;       ///< used with every alpha
  std::vector<double>        suzuki_rs;  ///< r_star is added automatically when < 1
};

/// alpha_reciprocal, alpha_const:0.9; phi_linear:0.5, phi_saturating;
/// eta 0.5 and 1; no fixed suzuki r.
GaugeLibrary default_gauge_library();

struct ClassificationEntry
{
  Condition             condition{Condition::Banach};
  std::string           gauge;  ///< gauge name or "-" for gauge-free conditions
  std::optional<double> r;
  std::optional<double> eta;
  bool                  passed{false};
  std::size_t           witness_count{0};
  double                min_margin{0.0};
};

struct LatticeViolation
{
  char        implication;  ///< 'a' .. 'e'
  std::string detail;
};

struct ClassificationReport
{
  double                           r_star{0.0};
  std::vector<ClassificationEntry> entries;
  std::vector<LatticeViolation>    lattice_violations;
};

ClassificationReport classify(FiniteMetricSpace const &space, SelfMap const &map, GaugeLibrary const &library);

/// Checks the implications
///  (a) banach => contractive, (b) r_star <= r => suzuki_2008(r),
///  (c) lim(phi) => generalized_phi(phi), (d) eta_alpha(eta <= 1/2, alpha) => main(alpha),
///  (e) contractive => half_condition
/// on the entries of a report.
std::vector<LatticeViolation> lattice_violations(ClassificationReport const &report);

}  // namespace contracert
