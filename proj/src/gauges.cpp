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

#include "contracert/gauges.hpp"

#include "contracert/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

namespace contracert {

double theta_branch_low(double /*r*/)
{
  return 1.0;
}

double theta_branch_mid(double r)
{
  return (1.0 - r) / (r * r);
}

double theta_branch_high(double r)
{
  return 1.0 / (1.0 + r);
}

double theta(double r)
{
  if (!(r >= 0.0 && r < 1.0))
  {
    throw InputError("theta: r must lie in [0, 1)");
  }
  if (r <= kThetaGoldenBreak)
  {
    return theta_branch_low(r);
  }
  if (r <= kThetaSqrtHalfBreak)
  {
    return theta_branch_mid(r);
  }
  return theta_branch_high(r);
}

char const *to_string(AlphaClass c) noexcept
{
  switch (c)
  {
  case AlphaClass::S:
    return "S";
  case AlphaClass::Psi:
    return "Psi";
  case AlphaClass::PsiPlus:
    return "PsiPlus";
  case AlphaClass::Custom:
    return "custom";
  }
  return "unknown";
}

char const *to_string(PhiClass c) noexcept
{
  switch (c)
  {
  case PhiClass::L:
    return "L";
  case PhiClass::AlphaInduced:
    return "alpha_induced";
  case PhiClass::Custom:
    return "custom";
  }
  return "unknown";
}

char const *to_string(ClassStatus s) noexcept
{
  return s == ClassStatus::Falsified ? "falsified" : "not_falsified_on_grid";
}

ComparisonPhi ComparisonPhi::from_alpha(GaugeAlpha alpha, std::string name)
{
  if (name.empty())
  {
    name = "phi_from_alpha:" + alpha.name();
  }
  ComparisonPhi phi(std::move(name), [alpha](double s) { return alpha(s) * s; }, PhiClass::AlphaInduced);
  phi.source_alpha_ = std::move(alpha);
  return phi;
}

namespace {

constexpr double kZeroProbe = 1e-300;

double parse_number(std::string const &text, std::string const &what)
{
  double      value = 0.0;
  char const *first = text.data();
  char const *last  = text.data() + text.size();
  auto [ptr, ec]    = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value))
  {
    throw InputError("cannot parse '" + text + "' as a number in " + what);
  }
  return value;
}

std::pair<std::string, std::string> split_spec(std::string const &spec)
{
  auto const colon = spec.find(':');
  if (colon == std::string::npos)
  {
    return {spec, {}};
  }
  return {spec.substr(0, colon), spec.substr(colon + 1)};
}

std::function<double(double)> piecewise_linear(Knots knots, std::string const &name)
{
  if (knots.empty())
  {
    throw InputError(name + ": knots must not be empty");
  }
  for (std::size_t i = 0; i < knots.size(); ++i)
  {
    if (!std::isfinite(knots[i].first) || !std::isfinite(knots[i].second))
    {
      throw InputError(name + ": knot " + std::to_string(i) + " is not finite");
    }
    if (knots[i].first < 0.0)
    {
      throw InputError(name + ": knot " + std::to_string(i) + " has negative s");
    }
    if (i > 0 && !(knots[i].first > knots[i - 1].first))
    {
      throw InputError(name + ": knot abscissae must be strictly increasing (knot " + std::to_string(i) + ")");
    }
  }
  auto shared = std::make_shared<Knots const>(std::move(knots));
  return [shared](double s) {
    auto const &k = *shared;
    if (s <= k.front().first)
    {
      return k.front().second;
    }
    if (s >= k.back().first)
    {
      return k.back().second;
    }
    auto hi = std::upper_bound(k.begin(), k.end(), s,
                               [](double v, std::pair<double, double> const &knot) { return v < knot.first; });
    auto lo = hi - 1;
    double const w = (s - lo->first) / (hi->first - lo->first);
    return lo->second + w * (hi->second - lo->second);
  };
}

}  // namespace

GaugeAlpha alpha_from_phi(ComparisonPhi phi, std::string name)
{
  if (name.empty())
  {
    name = "alpha_from_phi:" + phi.name();
  }
  return GaugeAlpha(std::move(name),
                    [phi](double s) {
                      double const probe = s > 0.0 ? s : kZeroProbe;
                      return phi(probe) / probe;
                    },
                    AlphaClass::Custom);
}

GaugeAlpha alpha_from_knots(Knots knots, std::string name)
{
  auto fn = piecewise_linear(std::move(knots), name);
  return GaugeAlpha(std::move(name), std::move(fn), AlphaClass::Custom);
}

ComparisonPhi phi_from_knots(Knots knots, std::string name)
{
  auto fn = piecewise_linear(std::move(knots), name);
  return ComparisonPhi(std::move(name), std::move(fn), PhiClass::Custom);
}

GaugeAlpha parse_alpha(std::string const &spec)
{
  auto const [head, arg] = split_spec(spec);
  double const inf       = std::numeric_limits<double>::infinity();
  if (head == "alpha_reciprocal" && arg.empty())
  {
    return GaugeAlpha(spec, [](double s) { return 1.0 / (1.0 + s); }, AlphaClass::PsiPlus, inf);
  }
  if (head == "alpha_const")
  {
    double const c = parse_number(arg, "alpha_const");
    if (!(c > 0.0 && c <= 1.0))
    {
      throw InputError("alpha_const:c needs c in (0, 1]");
    }
    // A constant below 1 never approaches 1, so it is vacuously in S, and as a
    // nonincreasing function it satisfies the Psi monotonicity for every delta.
    return GaugeAlpha(spec, [c](double) { return c; }, c < 1.0 ? AlphaClass::PsiPlus : AlphaClass::Custom,
                      c < 1.0 ? std::optional<double>(inf) : std::nullopt);
  }
  if (head == "alpha_from_phi")
  {
    return alpha_from_phi(parse_phi(arg.empty() ? "phi_saturating" : arg), spec);
  }
  throw InputError("unknown alpha gauge '" + spec + "' (known: alpha_reciprocal, alpha_const:<c>, alpha_from_phi[:<phi>])");
}

ComparisonPhi parse_phi(std::string const &spec)
{
  auto const [head, arg] = split_spec(spec);
  if (head == "phi_linear")
  {
    double const r = parse_number(arg, "phi_linear");
    if (r < 0.0)
    {
      throw InputError("phi_linear:r needs r >= 0");
    }
    return ComparisonPhi(spec, [r](double s) { return r * s; }, r > 0.0 && r < 1.0 ? PhiClass::L : PhiClass::Custom);
  }
  if (head == "phi_saturating" && arg.empty())
  {
    return ComparisonPhi::from_alpha(parse_alpha("alpha_reciprocal"), spec);
  }
  if (head == "phi_shifted")
  {
    double const c = parse_number(arg, "phi_shifted");
    if (c < 0.0)
    {
      throw InputError("phi_shifted:c needs c >= 0");
    }
    return ComparisonPhi(spec, [c](double s) { return s + c; }, PhiClass::Custom);
  }
  if (head == "phi_from_alpha")
  {
    return ComparisonPhi::from_alpha(parse_alpha(arg.empty() ? "alpha_reciprocal" : arg), spec);
  }
  throw InputError("unknown phi gauge '" + spec +
                   "' (known: phi_linear:<r>, phi_saturating, phi_shifted:<c>, phi_from_alpha[:<alpha>])");
}

std::vector<std::string> builtin_gauge_names()
{
  return {"alpha_reciprocal", "alpha_const:<c>",  "alpha_from_phi[:<phi>]", "phi_linear:<r>",
          "phi_saturating",   "phi_shifted:<c>", "phi_from_alpha[:<alpha>]"};
}

std::vector<double> geometric_grid(double from, double to, std::size_t count)
{
  if (!(from > 0.0) || !(to > 0.0) || !std::isfinite(from) || !std::isfinite(to) || count == 0)
  {
    throw InputError("geometric grid needs positive finite endpoints and a nonzero count");
  }
  std::vector<double> grid(count);
  if (count == 1)
  {
    grid[0] = from;
    return grid;
  }
  double const lf = std::log(from);
  double const lt = std::log(to);
  for (std::size_t k = 0; k < count; ++k)
  {
    double const w = static_cast<double>(k) / static_cast<double>(count - 1);
    grid[k]        = std::exp(lf + w * (lt - lf));
  }
  grid.front() = from;
  grid.back()  = to;
  return grid;
}

namespace {

std::string describe_grid(std::vector<double> const &grid)
{
  std::ostringstream out;
  out << grid.size() << " points";
  if (!grid.empty())
  {
    auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
    out << " in [" << *lo << ", " << *hi << "]";
  }
  return out.str();
}

ClassCertificate falsified(std::string grid_spec, ClassWitness witness)
{
  ClassCertificate cert;
  cert.status    = ClassStatus::Falsified;
  cert.witness   = std::move(witness);
  cert.grid_spec = std::move(grid_spec);
  return cert;
}

}  // namespace

LFunctionGrid default_l_grid()
{
  return {geometric_grid(1e-6, 1e3, 200), geometric_grid(1.0, 1e-6, 25), 16};
}

ClassCertificate falsify_l(ComparisonPhi const &phi, LFunctionGrid const &grid)
{
  if (grid.s_grid.empty() || grid.delta_factors.empty() || grid.t_samples == 0)
  {
    throw InputError("falsify_l: grids must be nonempty");
  }
  for (double s : grid.s_grid)
  {
    if (!(s > 0.0) || !std::isfinite(s))
    {
      throw InputError("falsify_l: s grid must hold positive finite values");
    }
  }
  for (double f : grid.delta_factors)
  {
    if (!(f > 0.0) || !std::isfinite(f))
    {
      throw InputError("falsify_l: delta factors must be positive");
    }
  }

  std::ostringstream spec;
  spec << "s: " << describe_grid(grid.s_grid) << "; delta/s: " << describe_grid(grid.delta_factors)
       << "; t samples per delta: " << grid.t_samples + 1;

  double const at_zero = phi(0.0);
  if (at_zero != 0.0)
  {
    return falsified(spec.str(), {"phi_zero", {0.0}, {at_zero}, {}});
  }
  for (double s : grid.s_grid)
  {
    double const v = phi(s);
    if (!(v > 0.0))
    {
      return falsified(spec.str(), {"phi_positive", {s}, {v}, {}});
    }
  }

  auto const K = static_cast<double>(grid.t_samples);
  for (double s : grid.s_grid)
  {
    bool   found   = false;
    double bad_t   = s;
    double bad_val = 0.0;
    double delta   = 0.0;
    for (double f : grid.delta_factors)
    {
      delta   = f * s;
      bool ok = true;
      for (std::size_t k = 0; k <= grid.t_samples; ++k)
      {
        double const t = s + delta * (static_cast<double>(k) / K);
        double const v = phi(t);
        if (!(v <= s + kClassSlack))
        {
          ok      = false;
          bad_t   = t;
          bad_val = v;
          break;
        }
      }
      if (ok)
      {
        found = true;
        break;
      }
    }
    if (!found)
    {
      return falsified(spec.str(), {"L_delta", {s, delta, bad_t}, {bad_val}, {}});
    }
  }

  ClassCertificate cert;
  cert.grid_spec = spec.str();
  return cert;
}

GeraghtySearch default_geraghty_search()
{
  return {10000, geometric_grid(1e-4, 1e3, 200)};
}

ClassCertificate falsify_geraghty(GaugeAlpha const &alpha, GeraghtySearch const &search)
{
  if (search.n_max < 10)
  {
    throw InputError("falsify_geraghty: n_max must be at least 10");
  }
  if (search.search_grid.empty())
  {
    throw InputError("falsify_geraghty: search grid must be nonempty");
  }
  auto const &grid = search.search_grid;
  for (double s : grid)
  {
    if (!(s > 0.0) || !std::isfinite(s))
    {
      throw InputError("falsify_geraghty: search grid must hold positive finite values");
    }
  }

  double const threshold = 10.0 * *std::min_element(grid.begin(), grid.end());
  std::ostringstream spec;
  spec << "search: " << describe_grid(grid) << "; n = 1.." << search.n_max << "; tail n >= "
       << (search.n_max + 1) / 2 << "; threshold " << threshold;

  std::vector<double> values(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    values[i] = alpha(grid[i]);
    if (!(values[i] >= 0.0 && values[i] <= 1.0))
    {
      return falsified(spec.str(), {"alpha_range", {grid[i]}, {values[i]}, {}});
    }
  }

  // s_n = largest grid point with alpha(s) >= 1 - 1/n, or 0 when none exists
  // (the sequence is then forced below the grid resolution).
  std::size_t const tail_begin = (search.n_max + 1) / 2;
  double            tail_inf   = std::numeric_limits<double>::infinity();
  std::vector<double> seq(search.n_max + 1, 0.0);
  for (std::size_t n = 1; n <= search.n_max; ++n)
  {
    double const level = 1.0 - 1.0 / static_cast<double>(n);
    double       best  = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
    {
      if (values[i] >= level && grid[i] > best)
      {
        best = grid[i];
      }
    }
    seq[n] = best;
    if (n >= tail_begin)
    {
      tail_inf = std::min(tail_inf, best);
    }
  }

  if (tail_inf >= threshold)
  {
    ClassWitness w{"geraghty_sequence", {}, {}, {}};
    std::size_t const tail_len = search.n_max - tail_begin + 1;
    std::size_t const samples  = std::min<std::size_t>(16, tail_len);
    for (std::size_t k = 0; k < samples; ++k)
    {
      std::size_t const n = samples == 1 ? tail_begin : tail_begin + k * (tail_len - 1) / (samples - 1);
      w.indices.push_back(n);
      w.inputs.push_back(seq[n]);
      w.values.push_back(alpha(seq[n]));
    }
    return falsified(spec.str(), std::move(w));
  }

  ClassCertificate cert;
  cert.grid_spec = spec.str();
  return cert;
}

SBuilder default_s_builder()
{
  return [](double upper) {
    std::vector<double> out;
    if (!(upper > 0.0))
    {
      return out;
    }
    constexpr std::size_t kUniform = 64;
    for (std::size_t k = 1; k <= kUniform; ++k)
    {
      out.push_back(upper * static_cast<double>(k) / static_cast<double>(kUniform + 1));
    }
    for (int e = 1; e <= 16; ++e)
    {
      out.push_back(upper * std::pow(10.0, -0.5 * e));
    }
    return out;
  };
}

std::vector<double> default_psi_t_grid(double delta)
{
  if (!(delta > 0.0) || !std::isfinite(delta))
  {
    throw InputError("psi delta must be a positive finite number");
  }
  return geometric_grid(delta * 1e-6, delta * (1.0 - 1e-9), 200);
}

ClassCertificate falsify_psi(GaugeAlpha const &alpha, double delta, std::vector<double> const &t_grid,
                             SBuilder const &s_builder)
{
  if (!(delta > 0.0) || !std::isfinite(delta))
  {
    throw InputError("falsify_psi: delta must be a positive finite number");
  }
  for (double t : t_grid)
  {
    if (!(t > 0.0 && t < delta))
    {
      throw InputError("falsify_psi: every t must lie in (0, delta)");
    }
  }

  std::ostringstream spec;
  spec << "delta " << delta << "; t: " << describe_grid(t_grid) << "; s sampled in (0, alpha(t) t)";

  for (double t : t_grid)
  {
    double const at = alpha(t);
    if (!(at > 0.0 && at <= 1.0))
    {
      return falsified(spec.str(), {"alpha_range", {t}, {at}, {}});
    }
    double const upper = at * t;
    for (double s : s_builder(upper))
    {
      if (!(s > 0.0 && s < upper))
      {
        continue;
      }
      double const as = alpha(s);
      if (at > as + kClassSlack)
      {
        return falsified(spec.str(), {"psi_monotone", {t, s}, {at, as}, {}});
      }
    }
  }

  ClassCertificate cert;
  cert.grid_spec = spec.str();
  return cert;
}

ClassCertificate falsify_psi(GaugeAlpha const &alpha, double delta)
{
  return falsify_psi(alpha, delta, default_psi_t_grid(delta));
}

std::optional<double> psi_delta_search(GaugeAlpha const &alpha, std::vector<double> candidates)
{
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  for (double delta : candidates)
  {
    if (falsify_psi(alpha, delta).status == ClassStatus::NotFalsifiedOnGrid)
    {
      return delta;
    }
  }
  return std::nullopt;
}

std::vector<double> default_shrink_grid()
{
  return geometric_grid(1.0, 1e-15, 1000);
}

double alpha0_estimate(GaugeAlpha const &alpha, std::vector<double> const &shrink_grid)
{
  if (shrink_grid.empty())
  {
    throw InputError("alpha0_estimate: grid must be nonempty");
  }
  for (std::size_t i = 0; i < shrink_grid.size(); ++i)
  {
    if (!(shrink_grid[i] > 0.0) || (i > 0 && !(shrink_grid[i] < shrink_grid[i - 1])))
    {
      throw InputError("alpha0_estimate: grid must be positive and strictly decreasing");
    }
  }
  if (shrink_grid.back() > 1e-8)
  {
    throw InputError("alpha0_estimate: grid must reach 1e-8 or below");
  }

  // Tail infima grow as the tail shrinks, so the sup over admissible tails is
  // attained by the shortest one.
  std::size_t const window = std::max<std::size_t>(1, shrink_grid.size() / 4);
  double            est    = std::numeric_limits<double>::infinity();
  for (std::size_t i = shrink_grid.size() - window; i < shrink_grid.size(); ++i)
  {
    est = std::min(est, alpha(shrink_grid[i]));
  }
  return est;
}

}  // namespace contracert
