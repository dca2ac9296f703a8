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

#include "contracert/iteration.hpp"

#include "contracert/certifiers.hpp"
#include "contracert/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace contracert {

char const *to_string(OrbitStatus s) noexcept
{
  switch (s)
  {
  case OrbitStatus::Fixed:
    return "fixed";
  case OrbitStatus::Cycle:
    return "cycle";
  case OrbitStatus::MaxIterReached:
    return "max_iter_reached";
  }
  return "unknown";
}

char const *to_string(CauchyStatus s) noexcept
{
  switch (s)
  {
  case CauchyStatus::Holds:
    return "holds";
  case CauchyStatus::Violated:
    return "violated";
  case CauchyStatus::Inconclusive:
    return "inconclusive";
  }
  return "unknown";
}

std::size_t OrbitTrace::periodic_start() const noexcept
{
  return status == OrbitStatus::Cycle ? cycle_entry : fixed_step;
}

std::size_t OrbitTrace::period() const noexcept
{
  return status == OrbitStatus::Cycle ? cycle_length : 1;
}

std::size_t OrbitTrace::point_at(std::size_t k) const
{
  if (k < points.size())
  {
    return points[k];
  }
  switch (status)
  {
  case OrbitStatus::Fixed:
    return points.back();
  case OrbitStatus::Cycle:
    return points[cycle_entry + (k - cycle_entry) % cycle_length];
  case OrbitStatus::MaxIterReached:
    break;
  }
  throw std::out_of_range("orbit index beyond a truncated trace");
}

double OrbitTrace::step_at(std::size_t k) const
{
  if (k < step_dists.size())
  {
    return step_dists[k];
  }
  switch (status)
  {
  case OrbitStatus::Fixed:
    return 0.0;
  case OrbitStatus::Cycle:
    return step_dists[cycle_entry + (k - cycle_entry) % cycle_length];
  case OrbitStatus::MaxIterReached:
    break;
  }
  throw std::out_of_range("orbit index beyond a truncated trace");
}

OrbitTrace picard(FiniteMetricSpace const &space, SelfMap const &map, std::size_t x0, std::size_t max_iter)
{
  if (x0 >= space.size())
  {
    throw InputError("start point " + std::to_string(x0) + " is not in the space (n = " +
                     std::to_string(space.size()) + ")");
  }
  if (max_iter == 0)
  {
    throw InputError("max_iter must be at least 1");
  }
  if (map.size() != space.size())
  {
    throw InputError("map and space sizes differ");
  }

  constexpr std::size_t    unseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> first_seen(space.size(), unseen);

  OrbitTrace trace;
  trace.start = x0;
  trace.points.push_back(x0);
  first_seen[x0] = 0;

  for (std::size_t k = 0;; ++k)
  {
    std::size_t const x = trace.points[k];
    std::size_t const y = map(x);
    if (k == max_iter)
    {
      trace.status = OrbitStatus::MaxIterReached;
      break;
    }
    trace.step_dists.push_back(space.distance(x, y));
    if (y == x)
    {
      trace.status     = OrbitStatus::Fixed;
      trace.fixed_step = k;
      break;
    }
    if (first_seen[y] != unseen)
    {
      trace.status       = OrbitStatus::Cycle;
      trace.cycle_entry  = first_seen[y];
      trace.cycle_length = k + 1 - first_seen[y];
      break;
    }
    first_seen[y] = k + 1;
    trace.points.push_back(y);
  }
  trace.strict_decrease_ok = check_strict_decrease(trace).ok;
  return trace;
}

RealOrbitTrace picard(RealMap const &map, double x0, std::size_t max_iter, double tol)
{
  if (!(x0 >= map.lo && x0 <= map.hi))
  {
    throw InputError("start value is outside the map's domain");
  }
  if (max_iter == 0)
  {
    throw InputError("max_iter must be at least 1");
  }
  if (!(tol > 0.0))
  {
    throw InputError("fixed-point tolerance must be positive");
  }

  RealOrbitTrace trace;
  trace.start     = x0;
  trace.tolerance = tol;
  trace.points.push_back(x0);
  for (std::size_t k = 0;; ++k)
  {
    if (k == max_iter)
    {
      trace.status = OrbitStatus::MaxIterReached;
      break;
    }
    double const x = trace.points[k];
    double const y = map.fn(x);
    double const s = std::abs(y - x);
    trace.step_dists.push_back(s);
    if (s < tol)
    {
      trace.status     = OrbitStatus::Fixed;
      trace.fixed_step = k;
      break;
    }
    trace.points.push_back(y);
  }
  trace.strict_decrease_ok = check_strict_decrease(trace).ok;
  return trace;
}

std::vector<std::size_t> fixed_points(SelfMap const &map)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < map.size(); ++i)
  {
    if (map(i) == i)
    {
      out.push_back(i);
    }
  }
  return out;
}

namespace {

StrictDecrease strictly_decreasing(std::vector<double> const &steps)
{
  StrictDecrease out;
  out.vacuous = steps.size() < 2;
  for (std::size_t n = 0; n + 1 < steps.size(); ++n)
  {
    if (!(steps[n + 1] < steps[n]))
    {
      out.ok              = false;
      out.first_violation = n;
      break;
    }
  }
  return out;
}

}  // namespace

StrictDecrease check_strict_decrease(OrbitTrace const &trace)
{
  std::vector<double> steps;
  switch (trace.status)
  {
  case OrbitStatus::Fixed:
    steps.assign(trace.step_dists.begin(), trace.step_dists.begin() + static_cast<std::ptrdiff_t>(trace.fixed_step));
    break;
  case OrbitStatus::Cycle:
    steps = trace.step_dists;
    steps.push_back(trace.step_at(trace.step_dists.size()));
    break;
  case OrbitStatus::MaxIterReached:
    steps = trace.step_dists;
    break;
  }
  return strictly_decreasing(steps);
}

StrictDecrease check_strict_decrease(RealOrbitTrace const &trace)
{
  return strictly_decreasing(trace.step_dists);
}

namespace {

struct OrbitView
{
  std::size_t                                    horizon;   // number of terms x_0..x_{horizon-1} available
  bool                                           periodic;  // steps beyond the horizon repeat the known tail
  std::size_t                                    tail_start;
  std::function<double(std::size_t)>             step;
  std::function<double(std::size_t, std::size_t)> dist;
};

CauchyCertificate replay_cauchy(OrbitView const &view, double epsilon, double delta_fraction)
{
  if (!(epsilon > 0.0) || !std::isfinite(epsilon))
  {
    throw InputError("epsilon must be a positive finite number");
  }
  if (!(delta_fraction > 0.0 && delta_fraction < 1.0))
  {
    throw InputError("delta fraction must lie in (0, 1)");
  }

  CauchyCertificate cert;
  cert.epsilon    = epsilon;
  cert.s_value    = epsilon / 2.0;
  cert.delta_used = delta_fraction * cert.s_value;

  // Smallest N with step(n) < delta for every n >= N among the steps that
  // determine the orbit (the recorded ones, plus the repeating tail).
  std::size_t const last_step = view.horizon - 1;  // steps 0..last_step-1 link the horizon terms
  std::size_t       n_sel     = last_step;
  while (n_sel > 0 && view.step(n_sel - 1) < cert.delta_used)
  {
    --n_sel;
  }
  bool tail_small = true;
  if (view.periodic)
  {
    for (std::size_t k = view.tail_start; k < last_step; ++k)
    {
      tail_small = tail_small && view.step(k) < cert.delta_used;
    }
  }
  else if (n_sel == last_step)
  {
    tail_small = false;
  }

  if (tail_small)
  {
    cert.n_used = n_sel;
  }
  else if (view.periodic)
  {
    cert.n_used        = view.tail_start;
    cert.n_from_recipe = false;
  }
  else
  {
    cert.status = CauchyStatus::Inconclusive;
    return cert;
  }

  cert.verified_window = view.horizon - 1 - cert.n_used;
  if (cert.verified_window == 0)
  {
    cert.status = CauchyStatus::Inconclusive;
    return cert;
  }

  double const bound = cert.delta_used + cert.s_value;
  for (std::size_t n = cert.n_used; n < view.horizon; ++n)
  {
    for (std::size_t m = 1; n + m < view.horizon; ++m)
    {
      if (!(view.dist(n, n + m) < bound))
      {
        cert.status          = CauchyStatus::Violated;
        cert.first_violation = std::make_pair(n, m);
        return cert;
      }
    }
  }
  cert.status = bound <= epsilon ? CauchyStatus::Holds : CauchyStatus::Violated;
  return cert;
}

}  // namespace

CauchyCertificate cauchy_claim_check(FiniteMetricSpace const &space, OrbitTrace const &trace, double epsilon,
                                     double delta_fraction)
{
  OrbitView view;
  view.periodic   = trace.eventually_periodic();
  view.horizon    = trace.points.size() + (view.periodic ? trace.period() : 0);
  view.tail_start = view.periodic ? trace.periodic_start() : 0;
  view.step       = [&trace](std::size_t k) { return trace.step_at(k); };
  view.dist       = [&](std::size_t a, std::size_t b) {
    return space.distance(trace.point_at(a), trace.point_at(b));
  };
  return replay_cauchy(view, epsilon, delta_fraction);
}

CauchyCertificate cauchy_claim_check(RealOrbitTrace const &trace, double epsilon, double delta_fraction)
{
  OrbitView view;
  view.periodic   = false;
  view.horizon    = trace.points.size();
  view.tail_start = 0;
  view.step       = [&trace](std::size_t k) { return trace.step_dists[k]; };
  view.dist       = [&trace](std::size_t a, std::size_t b) { return std::abs(trace.points[a] - trace.points[b]); };
  return replay_cauchy(view, epsilon, delta_fraction);
}

EitherOrReport either_or_diagnostic(FiniteMetricSpace const &space, SelfMap const &map, GaugeAlpha const &alpha,
                                    OrbitTrace const &trace, std::size_t z, std::optional<std::size_t> n_start,
                                    std::optional<double> delta)
{
  if (z >= space.size())
  {
    throw InputError("limit point z is not in the space");
  }
  if (!trace.eventually_periodic())
  {
    throw InputError("either_or_diagnostic needs a trace that reached a fixed point or cycle");
  }

  EitherOrReport report;
  report.z = z;

  if (!delta)
  {
    delta = alpha.psi_delta();
  }
  if (!delta)
  {
    delta = psi_delta_search(alpha, {1.0, 1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6});
  }
  if (!delta)
  {
    throw InputError("no delta supplied and none found for alpha '" + alpha.name() + "'");
  }
  report.delta_used = *delta;

  std::size_t const horizon = trace.points.size() + trace.period();
  if (n_start)
  {
    report.n_used = *n_start;
  }
  else
  {
    report.n_used = horizon;
    for (std::size_t n = 0; n < horizon; ++n)
    {
      if (trace.step_at(n) < *delta)
      {
        report.n_used = n;
        break;
      }
    }
  }

  auto const premise_lhs = [&alpha](double s) { return s / (1.0 + alpha(s)); };

  report.consequence_checked = map(z) == z && check_main(space, map, alpha).passed;

  for (std::size_t n = report.n_used; n < horizon; ++n)
  {
    std::size_t const xn  = trace.point_at(n);
    std::size_t const xn1 = trace.point_at(n + 1);
    std::size_t const xn2 = trace.point_at(n + 2);
    double const      sn  = space.distance(xn, xn1);
    double const      sn1 = space.distance(xn1, xn2);

    EitherOrStep step;
    step.n          = n;
    step.vacuous    = sn == 0.0;
    step.first_lhs  = premise_lhs(sn);
    step.first_rhs  = space.distance(xn, z);
    step.second_lhs = premise_lhs(sn1);
    step.second_rhs = space.distance(xn1, z);
    step.first      = step.first_lhs < step.first_rhs;
    step.second     = step.second_lhs < step.second_rhs;

    double const an  = alpha(sn);
    double const an1 = alpha(sn1);
    step.aux         = 1.0 / (1.0 + an) + an / (1.0 + an1) <= 1.0;

    if (!step.vacuous && !step.first && !step.second)
    {
      report.holds = false;
      report.failed.push_back(n);
    }
    if (report.consequence_checked && !step.vacuous)
    {
      std::size_t const tz  = map(z);
      auto const        phi = [&alpha](double s) { return alpha(s) * s; };
      bool const        c1  = space.distance(xn1, tz) < phi(space.distance(xn, z));
      bool const        c2  = space.distance(xn2, tz) < phi(space.distance(xn1, z));
      step.consequence      = c1 || c2;
      report.consequence_holds = report.consequence_holds && *step.consequence;
    }
    report.steps.push_back(step);
  }
  return report;
}

namespace {

struct SearchChunk
{
  std::optional<AdmissibilityCounterexample>         counterexample;
  std::size_t                                        tried{0};
  std::size_t                                        passing{0};
  std::size_t                                        orbits{0};
  std::size_t                                        strict_violations{0};
  std::optional<std::pair<std::size_t, std::size_t>> first_strict;
};

}  // namespace

AdmissibilitySearch admissibility_falsify(ComparisonPhi const &phi, InstanceSpec const &spec, std::size_t budget,
                                          unsigned threads)
{
  InstanceGenerator const  generator(spec);
  std::vector<SearchChunk> chunks(detail::chunk_count(budget, threads));
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};

  detail::parallel_chunks(budget, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    auto &local = chunks[chunk];
    for (std::size_t i = begin; i < end; ++i)
    {
      if (i > best.load(std::memory_order_relaxed))
      {
        break;
      }
      ++local.tried;
      Instance inst = generator(i);
      if (!check_generalized_phi(inst.space, inst.map, phi).passed)
      {
        continue;
      }
      ++local.passing;
      for (std::size_t x = 0; x < inst.space.size(); ++x)
      {
        OrbitTrace trace = picard(inst.space, inst.map, x, inst.space.size() + 1);
        ++local.orbits;
        if (!trace.strict_decrease_ok)
        {
          ++local.strict_violations;
          if (!local.first_strict)
          {
            local.first_strict = std::make_pair(i, x);
          }
        }
        if (trace.status != OrbitStatus::Fixed && !local.counterexample)
        {
          local.counterexample = AdmissibilityCounterexample{i, inst.space, inst.map, x, trace};
        }
      }
      if (local.counterexample)
      {
        std::size_t expected = best.load();
        while (i < expected && !best.compare_exchange_weak(expected, i))
        {
        }
        break;
      }
    }
  });

  // Merge as a sequential scan would: everything up to and including the
  // first counterexample, nothing after it.
  AdmissibilitySearch out;
  for (auto &local : chunks)
  {
    out.instances_tried += local.tried;
    out.instances_passing += local.passing;
    out.orbits_checked += local.orbits;
    out.strict_decrease_violations += local.strict_violations;
    if (!out.first_strict_violation)
    {
      out.first_strict_violation = local.first_strict;
    }
    if (local.counterexample)
    {
      out.counterexample = std::move(local.counterexample);
      break;
    }
  }
  return out;
}

SubsequenceReport subsequence_falsify(FiniteMetricSpace const &space, SelfMap const &map, std::size_t x,
                                    std::size_t subseq_budget)
{
  if (subseq_budget < 4)
  {
    throw InputError("subsequence budget must be at least 4");
  }
  OrbitTrace const trace = picard(space, map, x, space.size() + 1);

  SubsequenceReport report;
  if (trace.status == OrbitStatus::Fixed && trace.fixed_step == 0)
  {
    report.vacuous = true;
    return report;
  }

  std::size_t const period     = trace.period();
  std::size_t const phases     = trace.points.size() + period;
  std::size_t const max_offset = std::max<std::size_t>(period, 4);
  // The tail quarter must lie in the periodic part of the orbit.
  std::size_t const samples    = std::max(subseq_budget, 4 * phases);
  std::size_t const tail_begin = samples - std::max<std::size_t>(1, samples / 4);
  report.samples_per_family    = samples;

  for (std::size_t phase = 0; phase < phases; ++phase)
  {
    for (std::size_t offset = 1; offset <= max_offset; ++offset)
    {
      SubsequenceFamily fam;
      fam.phase              = phase;
      fam.offset             = offset;
      fam.stride             = period;
      fam.admissible         = true;
      fam.tail_min_delta     = std::numeric_limits<double>::infinity();
      fam.tail_max_ratio_gap = 0.0;
      for (std::size_t n = 0; n < samples && fam.admissible; ++n)
      {
        std::size_t const p     = phase + n * period;
        std::size_t const q     = p + offset;
        std::size_t const xp    = trace.point_at(p);
        std::size_t const xq    = trace.point_at(q);
        double const      delta = space.distance(xp, xq);
        if (!(delta > 0.0) || !(space.distance(xp, map(xp)) <= delta))
        {
          fam.admissible = false;
          break;
        }
        if (n >= tail_begin)
        {
          double const ratio     = space.distance(map(xp), map(xq)) / delta;
          fam.tail_min_delta     = std::min(fam.tail_min_delta, delta);
          fam.tail_max_ratio_gap = std::max(fam.tail_max_ratio_gap, std::abs(ratio - 1.0));
        }
      }
      if (fam.admissible)
      {
        ++report.admissible_families;
        fam.flagged = fam.tail_max_ratio_gap <= kSubsequenceRatioTolerance &&
                      fam.tail_min_delta >= kSubsequenceDistanceFloor;
        if (fam.flagged && !report.witness)
        {
          report.flagged = true;
          report.witness = fam;
        }
      }
      report.families.push_back(fam);
    }
  }
  return report;
}

}  // namespace contracert
