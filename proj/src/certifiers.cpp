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
#include "parallel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace contracert {

char const *to_string(Condition c) noexcept
{
  switch (c)
  {
  case Condition::Banach:
    return "banach";
  case Condition::Contractive:
    return "contractive";
  case Condition::BoydWong:
    return "boyd_wong";
  case Condition::Lim:
    return "lim";
  case Condition::GeneralizedPhi:
    return "generalized_phi";
  case Condition::Suzuki2008:
    return "suzuki_2008";
  case Condition::HalfCondition:
    return "half_condition";
  case Condition::Main:
    return "main";
  case Condition::EtaAlpha:
    return "eta_alpha";
  }
  return "unknown";
}

std::vector<Condition> all_conditions()
{
  return {Condition::Banach,     Condition::Contractive,   Condition::BoydWong,
          Condition::Lim,        Condition::GeneralizedPhi, Condition::Suzuki2008,
          Condition::HalfCondition, Condition::Main,        Condition::EtaAlpha};
}

Condition parse_condition(std::string const &name)
{
  for (Condition c : all_conditions())
  {
    if (name == to_string(c))
    {
      return c;
    }
  }
  throw InputError("unknown condition '" + name +
                   "' (known: banach, contractive, boyd_wong, lim, generalized_phi, suzuki_2008, "
                   "half_condition, main, eta_alpha)");
}

namespace {

bool uses_phi(Condition c)
{
  return c == Condition::BoydWong || c == Condition::Lim || c == Condition::GeneralizedPhi;
}

bool uses_alpha(Condition c)
{
  return c == Condition::Main || c == Condition::EtaAlpha;
}

void validate_params(Condition c, FiniteMetricSpace const &space, ConditionParams const &params)
{
  auto const values = space.matrix().values();
  if (uses_phi(c))
  {
    if (!params.phi)
    {
      throw InputError(std::string(to_string(c)) + " needs a phi gauge");
    }
    double const at_zero = (*params.phi)(0.0);
    if (!std::isfinite(at_zero) || at_zero < 0.0)
    {
      throw InputError("phi '" + params.phi->name() + "' must satisfy phi(0) >= 0 and be finite");
    }
    for (double d : values)
    {
      double const v = (*params.phi)(d);
      if (!std::isfinite(v))
      {
        std::ostringstream msg;
        msg << "phi '" << params.phi->name() << "' is not finite at s = " << d;
        throw InputError(msg.str());
      }
    }
  }
  if (uses_alpha(c))
  {
    if (!params.alpha)
    {
      throw InputError(std::string(to_string(c)) + " needs an alpha gauge");
    }
    for (double d : values)
    {
      double const v = (*params.alpha)(d);
      if (!(v > 0.0 && v <= 1.0))
      {
        std::ostringstream msg;
        msg << "alpha '" << params.alpha->name() << "' must map into (0, 1] but alpha(" << d << ") = " << v;
        throw InputError(msg.str());
      }
    }
  }
  if (c == Condition::Suzuki2008)
  {
    if (!params.r || !(*params.r >= 0.0 && *params.r < 1.0))
    {
      throw InputError("suzuki_2008 needs r in [0, 1)");
    }
  }
  if (c == Condition::EtaAlpha)
  {
    if (!params.eta || !(*params.eta > 0.0 && *params.eta <= 1.0))
    {
      throw InputError("eta_alpha needs eta in (0, 1]");
    }
  }
}

}  // namespace

PairOutcome evaluate_pair(Condition c, FiniteMetricSpace const &space, SelfMap const &map,
                          ConditionParams const &params, std::size_t x, std::size_t y)
{
  std::size_t const tx   = map(x);
  std::size_t const ty   = map(y);
  double const      dxy  = space.distance(x, y);
  double const      dimg = space.distance(tx, ty);
  double const      dxtx = space.distance(x, tx);

  PairOutcome out;
  out.x = x;
  out.y = y;

  switch (c)
  {
  case Condition::Banach:
    out.premise_active = x != y;
    out.lhs            = out.premise_active ? dimg / dxy : 0.0;
    out.rhs            = 1.0;
    out.holds          = out.lhs < out.rhs;
    break;
  case Condition::Contractive:
    out.premise_active = x != y;
    out.lhs            = dimg;
    out.rhs            = dxy;
    out.holds          = dimg < dxy;
    break;
  case Condition::BoydWong:
    out.premise_active = true;
    out.lhs            = dimg;
    out.rhs            = (*params.phi)(dxy);
    out.holds          = out.lhs <= out.rhs;
    break;
  case Condition::Lim:
    out.premise_active = x != y;
    out.lhs            = dimg;
    out.rhs            = (*params.phi)(dxy);
    out.holds          = out.lhs < out.rhs;
    break;
  case Condition::GeneralizedPhi:
    out.premise_lhs    = dxtx;
    out.premise_rhs    = dxy;
    out.premise_active = x != y && dxtx <= dxy;
    out.lhs            = dimg;
    out.rhs            = (*params.phi)(dxy);
    out.holds          = out.lhs < out.rhs;
    break;
  case Condition::Suzuki2008: {
    double const r     = *params.r;
    out.premise_lhs    = theta(r) * dxtx;
    out.premise_rhs    = dxy;
    out.premise_active = out.premise_lhs <= out.premise_rhs;
    // x == y: both sides of d(Tx,Ty) <= r d(x,y) vanish.
    out.lhs   = x != y ? dimg / dxy : 0.0;
    out.rhs   = x != y ? r : 0.0;
    out.holds = out.lhs <= out.rhs;
    break;
  }
  case Condition::HalfCondition:
    out.premise_lhs    = 0.5 * dxtx;
    out.premise_rhs    = dxy;
    out.premise_active = out.premise_lhs < out.premise_rhs;
    out.lhs            = dimg;
    out.rhs            = dxy;
    out.holds          = dimg < dxy;
    break;
  case Condition::Main: {
    auto const &alpha  = *params.alpha;
    out.premise_lhs    = dxtx / (1.0 + alpha(dxtx));
    out.premise_rhs    = dxy;
    out.premise_active = out.premise_lhs < out.premise_rhs;
    out.lhs            = dimg;
    out.rhs            = alpha(dxy) * dxy;
    out.holds          = out.lhs < out.rhs;
    break;
  }
  case Condition::EtaAlpha: {
    auto const &alpha  = *params.alpha;
    out.premise_lhs    = *params.eta * dxtx;
    out.premise_rhs    = dxy;
    out.premise_active = out.premise_lhs < out.premise_rhs;
    out.lhs            = dimg;
    out.rhs            = alpha(dxy) * dxy;
    out.holds          = out.lhs < out.rhs;
    break;
  }
  }
  return out;
}

namespace {

struct ChunkResult
{
  std::vector<PairOutcome> witnesses;
  double                   min_margin{std::numeric_limits<double>::infinity()};
  std::size_t              active{0};
  std::size_t              inactive{0};
  double                   max_ratio{0.0};
};

// Below this many pairs the thread start-up costs more than the enumeration.
constexpr std::size_t kParallelPairThreshold = 1u << 16;

}  // namespace

Certificate certify(Condition c, FiniteMetricSpace const &space, SelfMap const &map, ConditionParams const &params,
                    CertifyOptions const &opts)
{
  if (map.size() != space.size())
  {
    throw InputError("map and space sizes differ");
  }
  validate_params(c, space, params);

  std::size_t const n       = space.size();
  unsigned const    threads = n * n >= kParallelPairThreshold ? opts.threads : 1;
  std::vector<ChunkResult> chunks(detail::chunk_count(n, threads));

  detail::parallel_chunks(n, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    auto &local = chunks[chunk];
    for (std::size_t x = begin; x < end; ++x)
    {
      for (std::size_t y = 0; y < n; ++y)
      {
        PairOutcome const o = evaluate_pair(c, space, map, params, x, y);
        if (c == Condition::Banach && x != y)
        {
          local.max_ratio = std::max(local.max_ratio, o.lhs);
        }
        if (!o.premise_active)
        {
          ++local.inactive;
          continue;
        }
        ++local.active;
        if (o.holds)
        {
          local.min_margin = std::min(local.min_margin, o.rhs - o.lhs);
        }
        else
        {
          local.witnesses.push_back(o);
        }
      }
    }
  });

  Certificate cert;
  cert.condition          = c;
  cert.params             = params;
  cert.margins.min_margin = std::numeric_limits<double>::infinity();
  double r_star           = 0.0;
  for (auto &local : chunks)
  {
    cert.witnesses.insert(cert.witnesses.end(), local.witnesses.begin(), local.witnesses.end());
    cert.margins.min_margin = std::min(cert.margins.min_margin, local.min_margin);
    cert.margins.premise_active += local.active;
    cert.margins.premise_inactive += local.inactive;
    r_star = std::max(r_star, local.max_ratio);
  }
  cert.margins.pairs_checked = n * n;
  cert.margins.fragile       = cert.margins.min_margin < kFragileMargin;
  cert.passed                = cert.witnesses.empty();
  if (c == Condition::Banach)
  {
    cert.r_star = r_star;
  }
  return cert;
}

BanachResult banach_modulus(FiniteMetricSpace const &space, SelfMap const &map)
{
  Certificate cert = certify(Condition::Banach, space, map);
  double const r   = *cert.r_star;
  return {r, std::move(cert)};
}

Certificate check_contractive(FiniteMetricSpace const &space, SelfMap const &map)
{
  return certify(Condition::Contractive, space, map);
}

Certificate check_boyd_wong(FiniteMetricSpace const &space, SelfMap const &map, ComparisonPhi const &phi)
{
  ConditionParams p;
  p.phi = phi;
  return certify(Condition::BoydWong, space, map, p);
}

Certificate check_lim(FiniteMetricSpace const &space, SelfMap const &map, ComparisonPhi const &phi)
{
  ConditionParams p;
  p.phi = phi;
  return certify(Condition::Lim, space, map, p);
}

Certificate check_generalized_phi(FiniteMetricSpace const &space, SelfMap const &map, ComparisonPhi const &phi)
{
  ConditionParams p;
  p.phi = phi;
  return certify(Condition::GeneralizedPhi, space, map, p);
}

Certificate check_suzuki_2008(FiniteMetricSpace const &space, SelfMap const &map, double r)
{
  ConditionParams p;
  p.r = r;
  return certify(Condition::Suzuki2008, space, map, p);
}

Certificate check_half_condition(FiniteMetricSpace const &space, SelfMap const &map)
{
  return certify(Condition::HalfCondition, space, map);
}

Certificate check_main(FiniteMetricSpace const &space, SelfMap const &map, GaugeAlpha const &alpha)
{
  ConditionParams p;
  p.alpha = alpha;
  return certify(Condition::Main, space, map, p);
}

Certificate check_eta_alpha(FiniteMetricSpace const &space, SelfMap const &map, double eta, GaugeAlpha const &alpha)
{
  ConditionParams p;
  p.eta   = eta;
  p.alpha = alpha;
  return certify(Condition::EtaAlpha, space, map, p);
}

GaugeLibrary default_gauge_library()
{
  GaugeLibrary lib;
  lib.alphas = {parse_alpha("alpha_reciprocal"), parse_alpha("alpha_const:0.9")};
  lib.phis   = {parse_phi("phi_linear:0.5"), parse_phi("phi_saturating")};
  lib.etas   = {0.5, 1.0};
  return lib;
}

namespace {

ClassificationEntry summarize(Certificate const &cert, std::string gauge)
{
  ClassificationEntry e;
  e.condition     = cert.condition;
  e.gauge         = std::move(gauge);
  e.r             = cert.params.r;
  e.eta           = cert.params.eta;
  e.passed        = cert.passed;
  e.witness_count = cert.witnesses.size();
  e.min_margin    = cert.margins.min_margin;
  return e;
}

}  // namespace

ClassificationReport classify(FiniteMetricSpace const &space, SelfMap const &map, GaugeLibrary const &library)
{
  if (library.alphas.empty() && library.phis.empty())
  {
    throw InputError("classify: gauge library is empty");
  }

  ClassificationReport report;
  auto banach   = banach_modulus(space, map);
  report.r_star = banach.r_star;
  report.entries.push_back(summarize(banach.certificate, "-"));
  report.entries.push_back(summarize(check_contractive(space, map), "-"));
  report.entries.push_back(summarize(check_half_condition(space, map), "-"));

  std::vector<double> rs = library.suzuki_rs;
  if (banach.r_star < 1.0)
  {
    rs.push_back(banach.r_star);
  }
  std::sort(rs.begin(), rs.end());
  rs.erase(std::unique(rs.begin(), rs.end()), rs.end());
  for (double r : rs)
  {
    report.entries.push_back(summarize(check_suzuki_2008(space, map, r), "-"));
  }

  for (auto const &phi : library.phis)
  {
    report.entries.push_back(summarize(check_boyd_wong(space, map, phi), phi.name()));
    report.entries.push_back(summarize(check_lim(space, map, phi), phi.name()));
    report.entries.push_back(summarize(check_generalized_phi(space, map, phi), phi.name()));
  }
  for (auto const &alpha : library.alphas)
  {
    report.entries.push_back(summarize(check_main(space, map, alpha), alpha.name()));
    for (double eta : library.etas)
    {
      report.entries.push_back(summarize(check_eta_alpha(space, map, eta, alpha), alpha.name()));
    }
  }

  report.lattice_violations = lattice_violations(report);
  return report;
}

std::vector<LatticeViolation> lattice_violations(ClassificationReport const &report)
{
  std::vector<LatticeViolation> out;
  auto find = [&](Condition c, std::string const &gauge) -> ClassificationEntry const * {
    for (auto const &e : report.entries)
    {
      if (e.condition == c && e.gauge == gauge && !e.eta)
      {
        return &e;
      }
    }
    return nullptr;
  };

  auto const *banach      = find(Condition::Banach, "-");
  auto const *contractive = find(Condition::Contractive, "-");
  auto const *half        = find(Condition::HalfCondition, "-");

  if (banach && contractive && banach->passed && !contractive->passed)
  {
    out.push_back({'a', "banach passes but contractive fails"});
  }
  if (contractive && half && contractive->passed && !half->passed)
  {
    out.push_back({'e', "contractive passes but half_condition fails"});
  }
  for (auto const &e : report.entries)
  {
    if (e.condition == Condition::Suzuki2008 && e.r && report.r_star <= *e.r && !e.passed)
    {
      std::ostringstream msg;
      msg << "r_star = " << report.r_star << " <= r = " << *e.r << " but suzuki_2008 fails";
      out.push_back({'b', msg.str()});
    }
    if (e.condition == Condition::Lim && e.passed)
    {
      auto const *g = find(Condition::GeneralizedPhi, e.gauge);
      if (g && !g->passed)
      {
        out.push_back({'c', "lim passes but generalized_phi fails for " + e.gauge});
      }
    }
    if (e.condition == Condition::EtaAlpha && e.eta && *e.eta <= 0.5 && e.passed)
    {
      auto const *m = find(Condition::Main, e.gauge);
      if (m && !m->passed)
      {
        std::ostringstream msg;
        msg << "eta_alpha(eta = " << *e.eta << ") passes but main fails for " << e.gauge;
        out.push_back({'d', msg.str()});
      }
    }
  }
  return out;
}

}  // namespace contracert
