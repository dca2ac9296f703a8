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

#include "contracert/demos.hpp"

#include "contracert/campaigns.hpp"
#include "contracert/certifiers.hpp"
#include "contracert/error.hpp"
#include "contracert/iteration.hpp"

#include <cmath>
#include <functional>
#include <map>

namespace contracert {
namespace {

constexpr double kBranchAgreement = 1e-12;

DemoResult demo_suzuki_theta(DemoOptions const &)
{
  constexpr std::size_t kGrid = 50;

  Json rows   = Json::array();
  bool ranged = true;
  auto add    = [&](double r, char const *mark) {
    double const t = theta(r);
    ranged         = ranged && t > 0.5 && t <= 1.0;
    Json row{{"r", r}, {"theta", t}};
    if (mark != nullptr)
    {
      row["breakpoint"] = mark;
    }
    rows.push_back(std::move(row));
  };

  bool golden_done = false;
  bool sqrt_done   = false;
  for (std::size_t k = 0; k < kGrid; ++k)
  {
    double const r = static_cast<double>(k) / kGrid;
    if (!golden_done && r > kThetaGoldenBreak)
    {
      add(kThetaGoldenBreak, "golden");
      golden_done = true;
    }
    if (!sqrt_done && r > kThetaSqrtHalfBreak)
    {
      add(kThetaSqrtHalfBreak, "sqrt_half");
      sqrt_done = true;
    }
    add(r, nullptr);
  }

  double const gap_golden =
      std::abs(theta_branch_low(kThetaGoldenBreak) - theta_branch_mid(kThetaGoldenBreak));
  double const gap_sqrt =
      std::abs(theta_branch_mid(kThetaSqrtHalfBreak) - theta_branch_high(kThetaSqrtHalfBreak));
  bool const agree = gap_golden <= kBranchAgreement && gap_sqrt <= kBranchAgreement;

  Json report{{"demo", "suzuki-theta"},
              {"grid_points", kGrid},
              {"rows", std::move(rows)},
              {"branch_gap_golden", gap_golden},
              {"branch_gap_sqrt_half", gap_sqrt},
              {"branch_tolerance", kBranchAgreement},
              {"branches_agree", agree},
              {"range_ok", ranged}};
  return {std::move(report), agree && ranged};
}

DemoResult demo_alpha_reciprocal(DemoOptions const &)
{
  GaugeAlpha const alpha    = parse_alpha("alpha_reciprocal");
  auto const       psi      = falsify_psi(alpha, 1.0);
  auto const       geraghty = falsify_geraghty(alpha);
  double const     a0       = alpha0_estimate(alpha, default_shrink_grid());
  bool const       ok       = psi.status == ClassStatus::NotFalsifiedOnGrid &&
                  geraghty.status == ClassStatus::NotFalsifiedOnGrid && std::abs(a0 - 1.0) <= 1e-9;
  Json report{{"demo", "alpha-reciprocal"},
              {"alpha", alpha.name()},
              {"psi", to_json(psi)},
              {"psi_delta", 1.0},
              {"geraghty", to_json(geraghty)},
              {"alpha0_estimate", a0}};
  return {std::move(report), ok};
}

DemoResult demo_halving(DemoOptions const &)
{
  constexpr std::size_t kGrid = 22;

  SampledMap const sampled = sample_builtin("halving", 0.0, 1.0, kGrid);
  OrbitTrace const trace   = picard(sampled.space, sampled.map, 0, 1000);
  RealOrbitTrace const real = picard(builtin_real_map("halving", 0.0, 1.0), 1.0, 1000);

  Json cauchy = Json::array();
  Json cauchy_real = Json::array();
  bool holds = true;
  for (double eps : {0.5, 0.1, 0.01})
  {
    auto const c = cauchy_claim_check(sampled.space, trace, eps);
    holds        = holds && c.holds() && c.n_from_recipe;
    cauchy.push_back(to_json(c));
    auto const cr = cauchy_claim_check(real, eps);
    holds         = holds && cr.holds();
    cauchy_real.push_back(to_json(cr));
  }
  auto const strict_grid = check_strict_decrease(trace);
  auto const strict_real = check_strict_decrease(real);

  auto const either_or = either_or_diagnostic(sampled.space, sampled.map, parse_alpha("alpha_reciprocal"), trace,
                                              trace.points.back());

  Json report{{"demo", "halving"},
              {"grid_trace", to_json(trace, sampled.space)},
              {"cauchy", std::move(cauchy)},
              {"strict_decrease_grid", to_json(strict_grid)},
              {"strict_decrease_grid_note",
               "on the sampled grid the last step 2^-20 -> 0 equals the step before it"},
              {"real_trace", to_json(real)},
              {"cauchy_real", std::move(cauchy_real)},
              {"strict_decrease_real", to_json(strict_real)},
              {"either_or", to_json(either_or)}};
  bool const ok = holds && trace.status == OrbitStatus::Fixed && strict_real.ok && either_or.holds;
  return {std::move(report), ok};
}

DemoResult demo_implication_lattice(DemoOptions const &options)
{
  constexpr std::size_t kInstances = 1000;
  InstanceSpec          spec;
  spec.seed             = options.seed;
  auto const campaign   = lattice_campaign(spec, kInstances, lattice_gauge_library(), options.threads);
  Json       report     = to_json(campaign);
  report["demo"]        = "implication-lattice";
  report["seed"]        = options.seed;
  report["min_points"]  = spec.min_points;
  report["max_points"]  = spec.max_points;
  return {std::move(report), campaign.total_violations() == 0};
}

DemoResult demo_two_cycle(DemoOptions const &options)
{
  auto const space = FiniteMetricSpace::from_matrix(SquareMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}));
  auto const map   = SelfMap::from_table({1, 0}, 2);
  auto const trace = picard(space, map, 0, 10);

  auto const cauchy  = cauchy_claim_check(space, trace, 0.5);
  auto const strict  = check_strict_decrease(trace);
  auto const subseq  = subsequence_falsify(space, map, 0);
  auto const shifted = parse_phi("phi_shifted:1");
  auto const cert    = check_generalized_phi(space, map, shifted);

  InstanceSpec spec;
  spec.seed         = options.seed;
  auto const search = admissibility_falsify(shifted, spec, 1000, options.threads);

  Json report{{"demo", "two-cycle"},
              {"space", to_json(space)},
              {"map", {{"table", map.table()}}},
              {"trace", to_json(trace, space)},
              {"cauchy", to_json(cauchy)},
              {"strict_decrease", to_json(strict)},
              {"subsequence", to_json(subseq)},
              {"generalized_phi_shifted", to_json(cert, space)},
              {"admissibility_shifted", to_json(search)}};
  bool const ok = trace.status == OrbitStatus::Cycle && cauchy.status == CauchyStatus::Violated && !strict.ok &&
                  subseq.flagged && cert.passed && search.counterexample.has_value();
  return {std::move(report), ok};
}

DemoResult demo_bounded_transform(DemoOptions const &)
{
  auto const space   = FiniteMetricSpace::from_points({{0.0}, {1.0}, {3.0}}, PointMetric::Euclidean);
  auto const bounded = bounded_transform(space, 1.0);
  auto const check   = validate_metric(bounded.matrix());

  bool ok = check.passed;
  for (std::size_t i = 0; i < space.size(); ++i)
  {
    for (std::size_t j = 0; j < space.size(); ++j)
    {
      double const d = space.distance(i, j);
      ok             = ok && bounded.distance(i, j) == d / (1.0 + d) && bounded.distance(i, j) < 1.0;
    }
  }
  Json report{{"demo", "bounded-transform"},
              {"delta", 1.0},
              {"input", to_json(space)},
              {"output", to_json(bounded)},
              {"validation", to_json(check)}};
  return {std::move(report), ok};
}

DemoResult demo_main_theorem(DemoOptions const &options)
{
  auto const campaign = main_theorem_campaign(parse_alpha("alpha_reciprocal"), options.seed, 50, 4, options.threads);
  Json       report   = to_json(campaign);
  report["demo"]      = "main-theorem";
  report["seed"]      = options.seed;
  report["alpha"]     = "alpha_reciprocal";
  return {std::move(report), campaign.violations == 0};
}

using DemoFn = std::function<DemoResult(DemoOptions const &)>;

std::map<std::string, DemoFn> const &registry()
{
  static std::map<std::string, DemoFn> const demos{
      {"alpha-reciprocal", demo_alpha_reciprocal},
      {"bounded-transform", demo_bounded_transform},
      {"halving", demo_halving},
      {"implication-lattice", demo_implication_lattice},
      {"main-theorem", demo_main_theorem},
      {"suzuki-theta", demo_suzuki_theta},
      {"two-cycle", demo_two_cycle},
  };
  return demos;
}

}  // namespace

std::vector<std::string> demo_names()
{
  std::vector<std::string> names;
  for (auto const &[name, fn] : registry())
  {
    names.push_back(name);
  }
  return names;
}

DemoResult run_demo(std::string const &name, DemoOptions const &options)
{
  auto const it = registry().find(name);
  if (it == registry().end())
  {
    std::string list;
    for (auto const &n : demo_names())
    {
      list += (list.empty() ? "" : ", ") + n;
    }
    throw InputError("unknown demo '" + name + "'; available: " + list);
  }
  DemoResult result = it->second(options);
  result.report["passed"] = result.passed;
  return result;
}

}  // namespace contracert
