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

#include "contracert/contracert.h"

#include "contracert/campaigns.hpp"
#include "contracert/certifiers.hpp"
#include "contracert/demos.hpp"
#include "contracert/error.hpp"
#include "contracert/iteration.hpp"
#include "contracert/serialize.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <new>
#include <string>

struct cc_space
{
  contracert::FiniteMetricSpace value;
};

struct cc_map
{
  contracert::SelfMap value;
};

struct cc_alpha
{
  contracert::GaugeAlpha value;
};

struct cc_phi
{
  contracert::ComparisonPhi value;
};

namespace {

using namespace contracert;

thread_local std::string g_last_error;

class NullArgument : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

template <class T>
T const &need(T const *p, char const *what)
{
  if (p == nullptr)
  {
    throw NullArgument(std::string(what) + " is NULL");
  }
  return *p;
}

std::string need_text(char const *p, char const *what)
{
  if (p == nullptr)
  {
    throw NullArgument(std::string(what) + " is NULL");
  }
  return p;
}

void need_out(void const *p, char const *what)
{
  if (p == nullptr)
  {
    throw NullArgument(std::string("output ") + what + " is NULL");
  }
}

Json parse_document(char const *text, char const *what)
{
  need_text(text, what);
  try
  {
    return Json::parse(text);
  }
  catch (Json::parse_error const &e)
  {
    throw InputError(std::string(what) + ": malformed JSON: " + e.what());
  }
}

char *copy_string(std::string const &s)
{
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (out == nullptr)
  {
    throw std::bad_alloc();
  }
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(Json const &doc, char **out)
{
  if (out != nullptr)
  {
    *out = copy_string(doc.dump());
  }
}

template <class Fn>
cc_status guarded(Fn &&fn) noexcept
{
  try
  {
    g_last_error.clear();
    return fn();
  }
  catch (InputError const &e)
  {
    g_last_error = e.what();
    return CC_ERR_INPUT;
  }
  catch (NullArgument const &e)
  {
    g_last_error = e.what();
    return CC_ERR_INPUT;
  }
  catch (std::exception const &e)
  {
    g_last_error = std::string("internal error: ") + e.what();
    return CC_ERR_INTERNAL;
  }
  catch (...)
  {
    g_last_error = "internal error";
    return CC_ERR_INTERNAL;
  }
}

cc_status pass_fail(bool passed)
{
  return passed ? CC_OK : CC_FAILED;
}

void check_start(FiniteMetricSpace const &space, SelfMap const &map, std::size_t start)
{
  if (map.size() != space.size())
  {
    throw InputError("map has " + std::to_string(map.size()) + " entries but the space has " +
                     std::to_string(space.size()) + " points");
  }
  if (start >= space.size())
  {
    throw InputError("start " + std::to_string(start) + " is not a point of the space");
  }
}

void check_pair(FiniteMetricSpace const &space, SelfMap const &map)
{
  check_start(space, map, 0);
}

Json trace_json(FiniteMetricSpace const &space, OrbitTrace const &trace)
{
  Json doc               = to_json(trace, space);
  doc["strict_decrease"] = to_json(check_strict_decrease(trace));
  return doc;
}

}  // namespace

extern "C" {

char const *cc_version(void)
{
  return "0.1.0";
}

char const *cc_last_error(void)
{
  return g_last_error.c_str();
}

void cc_string_free(char *s)
{
  std::free(s);
}

cc_status cc_space_from_json(char const *json, double tol, cc_space **out)
{
  return guarded([&] {
    need_out(out, "space");
    *out = new cc_space{space_from_json(parse_document(json, "space"), tol)};
    return CC_OK;
  });
}

cc_status cc_space_from_matrix(double const *data, size_t n, double tol, cc_space **out)
{
  return guarded([&] {
    need_out(out, "space");
    need(data, "matrix data");
    SquareMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
    {
      for (std::size_t j = 0; j < n; ++j)
      {
        m(i, j) = data[i * n + j];
      }
    }
    *out = new cc_space{FiniteMetricSpace::from_matrix(std::move(m), {}, tol)};
    return CC_OK;
  });
}

cc_status cc_space_bounded(cc_space const *space, double delta, cc_space **out)
{
  return guarded([&] {
    need_out(out, "space");
    *out = new cc_space{bounded_transform(need(space, "space").value, delta)};
    return CC_OK;
  });
}

cc_status cc_space_scaled(cc_space const *space, double c, cc_space **out)
{
  return guarded([&] {
    need_out(out, "space");
    *out = new cc_space{scale_transform(need(space, "space").value, c)};
    return CC_OK;
  });
}

size_t cc_space_size(cc_space const *space)
{
  return space == nullptr ? 0 : space->value.size();
}

double cc_space_distance(cc_space const *space, size_t i, size_t j)
{
  if (space == nullptr || i >= space->value.size() || j >= space->value.size())
  {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return space->value.distance(i, j);
}

cc_status cc_space_to_json(cc_space const *space, char **out)
{
  return guarded([&] {
    need_out(out, "string");
    emit(to_json(need(space, "space").value), out);
    return CC_OK;
  });
}

void cc_space_free(cc_space *space)
{
  delete space;
}

cc_status cc_validate_json(char const *space_json, double tol, char **report)
{
  return guarded([&] {
    Json const doc = parse_document(space_json, "space");
    SquareMatrix matrix;
    if (doc.is_object() && doc.contains("matrix"))
    {
      matrix = raw_matrix_from_json(doc);
    }
    else
    {
      matrix = space_from_json(doc, tol).matrix();
    }
    ValidationReport const r = validate_metric(matrix, tol);
    emit(to_json(r), report);
    return pass_fail(r.passed);
  });
}

cc_status cc_map_from_json(char const *json, cc_space const *space, cc_map **out, cc_space **grid_space)
{
  return guarded([&] {
    need_out(out, "map");
    ParsedMap parsed = map_from_json(parse_document(json, "map"));
    if (parsed.sampled)
    {
      if (grid_space == nullptr)
      {
        throw InputError("map: a builtin map needs an output for its grid space");
      }
      *grid_space = new cc_space{parsed.sampled->space};
      *out        = new cc_map{parsed.sampled->map};
      return CC_OK;
    }
    std::size_t const n = need(space, "space").value.size();
    if (parsed.table.size() != n)
    {
      throw InputError("map: field 'table' has " + std::to_string(parsed.table.size()) +
                       " entries but the space has " + std::to_string(n) + " points");
    }
    try
    {
      *out = new cc_map{SelfMap::from_table(std::move(parsed.table), n)};
    }
    catch (InputError const &e)
    {
      throw InputError(std::string("map: field 'table': ") + e.what());
    }
    return CC_OK;
  });
}

cc_status cc_map_from_table(size_t const *table, size_t n, cc_map **out)
{
  return guarded([&] {
    need_out(out, "map");
    need(table, "table");
    *out = new cc_map{SelfMap::from_table(std::vector<std::size_t>(table, table + n), n)};
    return CC_OK;
  });
}

size_t cc_map_size(cc_map const *map)
{
  return map == nullptr ? 0 : map->value.size();
}

size_t cc_map_image(cc_map const *map, size_t i)
{
  if (map == nullptr || i >= map->value.size())
  {
    return SIZE_MAX;
  }
  return map->value(i);
}

void cc_map_free(cc_map *map)
{
  delete map;
}

cc_status cc_alpha_parse(char const *spec, cc_alpha **out)
{
  return guarded([&] {
    need_out(out, "alpha");
    *out = new cc_alpha{parse_alpha(need_text(spec, "alpha spec"))};
    return CC_OK;
  });
}

cc_status cc_alpha_from_knots_json(char const *json, cc_alpha **out)
{
  return guarded([&] {
    need_out(out, "alpha");
    *out = new cc_alpha{alpha_from_knots(knots_from_json(parse_document(json, "gauge")))};
    return CC_OK;
  });
}

double cc_alpha_eval(cc_alpha const *alpha, double s)
{
  return alpha == nullptr ? std::numeric_limits<double>::quiet_NaN() : alpha->value(s);
}

void cc_alpha_free(cc_alpha *alpha)
{
  delete alpha;
}

cc_status cc_phi_parse(char const *spec, cc_phi **out)
{
  return guarded([&] {
    need_out(out, "phi");
    *out = new cc_phi{parse_phi(need_text(spec, "phi spec"))};
    return CC_OK;
  });
}

cc_status cc_phi_from_knots_json(char const *json, cc_phi **out)
{
  return guarded([&] {
    need_out(out, "phi");
    *out = new cc_phi{phi_from_knots(knots_from_json(parse_document(json, "gauge")))};
    return CC_OK;
  });
}

double cc_phi_eval(cc_phi const *phi, double s)
{
  return phi == nullptr ? std::numeric_limits<double>::quiet_NaN() : phi->value(s);
}

void cc_phi_free(cc_phi *phi)
{
  delete phi;
}

cc_status cc_gauge_names(char **out)
{
  return guarded([&] {
    need_out(out, "string");
    emit(Json(builtin_gauge_names()), out);
    return CC_OK;
  });
}

cc_status cc_theta(double r, double *out)
{
  return guarded([&] {
    need_out(out, "value");
    *out = theta(r);
    return CC_OK;
  });
}

cc_status cc_certify(cc_space const *space, cc_map const *map, char const *condition,
                     cc_condition_params const *params, unsigned threads, char **certificate)
{
  return guarded([&] {
    auto const &s = need(space, "space").value;
    auto const &m = need(map, "map").value;
    check_pair(s, m);
    Condition const c = parse_condition(need_text(condition, "condition"));
    ConditionParams p;
    if (params != nullptr)
    {
      if (params->has_r != 0)
      {
        p.r = params->r;
      }
      if (params->has_eta != 0)
      {
        p.eta = params->eta;
      }
      if (params->phi != nullptr)
      {
        p.phi = params->phi->value;
      }
      if (params->alpha != nullptr)
      {
        p.alpha = params->alpha->value;
      }
    }
    Certificate const cert = certify(c, s, m, p, CertifyOptions{threads});
    emit(to_json(cert, s), certificate);
    return pass_fail(cert.passed);
  });
}

cc_status cc_banach_modulus(cc_space const *space, cc_map const *map, double *r_star, char **certificate)
{
  return guarded([&] {
    auto const &s = need(space, "space").value;
    auto const &m = need(map, "map").value;
    check_pair(s, m);
    BanachResult const r = banach_modulus(s, m);
    if (r_star != nullptr)
    {
      *r_star = r.r_star;
    }
    emit(to_json(r.certificate, s), certificate);
    return pass_fail(r.certificate.passed);
  });
}

cc_status cc_classify(cc_space const *space, cc_map const *map, char **report)
{
  return guarded([&] {
    auto const &s = need(space, "space").value;
    auto const &m = need(map, "map").value;
    check_pair(s, m);
    ClassificationReport const r = classify(s, m, default_gauge_library());
    emit(to_json(r), report);
    return pass_fail(r.lattice_violations.empty());
  });
}

cc_status cc_iterate(cc_space const *space, cc_map const *map, size_t start, size_t max_iter, char **trace)
{
  return guarded([&] {
    auto const &s = need(space, "space").value;
    auto const &m = need(map, "map").value;
    check_start(s, m, start);
    emit(trace_json(s, picard(s, m, start, max_iter)), trace);
    return CC_OK;
  });
}

cc_status cc_iterate_real(char const *builtin, double lo, double hi, double x0, size_t max_iter, char **trace)
{
  return guarded([&] {
    RealMap const        f = builtin_real_map(need_text(builtin, "builtin"), lo, hi);
    RealOrbitTrace const t = picard(f, x0, max_iter);
    Json doc               = to_json(t);
    doc["strict_decrease"] = to_json(check_strict_decrease(t));
    emit(doc, trace);
    return CC_OK;
  });
}

cc_status cc_fixed_points(cc_map const *map, char **points)
{
  return guarded([&] {
    emit(Json(fixed_points(need(map, "map").value)), points);
    return CC_OK;
  });
}

cc_status cc_cauchy(cc_space const *space, cc_map const *map, size_t start, size_t max_iter, double epsilon,
                    char **certificate)
{
  return guarded([&] {
    auto const &s = need(space, "space").value;
    auto const &m = need(map, "map").value;
    check_start(s, m, start);
    CauchyCertificate const c = cauchy_claim_check(s, picard(s, m, start, max_iter), epsilon);
    emit(to_json(c), certificate);
    return pass_fail(c.holds());
  });
}

cc_status cc_either_or(cc_space const *space, cc_map const *map, cc_alpha const *alpha, size_t start,
                       size_t max_iter, size_t z, char **report)
{
  return guarded([&] {
    auto const &s = need(space, "space").value;
    auto const &m = need(map, "map").value;
    check_start(s, m, start);
    OrbitTrace const t     = picard(s, m, start, max_iter);
    std::size_t const zz   = z == SIZE_MAX ? t.points.back() : z;
    if (zz >= s.size())
    {
      throw InputError("z " + std::to_string(zz) + " is not a point of the space");
    }
    EitherOrReport const r = either_or_diagnostic(s, m, need(alpha, "alpha").value, t, zz);
    emit(to_json(r), report);
    return pass_fail(r.holds);
  });
}

cc_status cc_falsify_admissibility(cc_phi const *phi, size_t min_points, size_t max_points, uint64_t seed,
                                   size_t budget, unsigned threads, char **report)
{
  return guarded([&] {
    if (min_points == 0 || max_points < min_points)
    {
      throw InputError("instance sizes need 1 <= min_points <= max_points");
    }
    InstanceSpec const spec{min_points, max_points, seed};
    AdmissibilitySearch const r = admissibility_falsify(need(phi, "phi").value, spec, budget, threads);
    Json doc                    = to_json(r);
    doc["phi"]                  = phi->value.name();
    doc["seed"]                 = seed;
    doc["budget"]               = budget;
    doc["min_points"]           = min_points;
    doc["max_points"]           = max_points;
    emit(doc, report);
    return pass_fail(!r.counterexample.has_value());
  });
}

cc_status cc_falsify_l(cc_phi const *phi, char **report)
{
  return guarded([&] {
    ClassCertificate const c = falsify_l(need(phi, "phi").value);
    Json doc                 = to_json(c);
    doc["phi"]               = phi->value.name();
    doc["class"]             = "L";
    emit(doc, report);
    return pass_fail(c.status != ClassStatus::Falsified);
  });
}

cc_status cc_falsify_geraghty(cc_alpha const *alpha, char **report)
{
  return guarded([&] {
    ClassCertificate const c = falsify_geraghty(need(alpha, "alpha").value);
    Json doc                 = to_json(c);
    doc["alpha"]             = alpha->value.name();
    doc["class"]             = "S";
    emit(doc, report);
    return pass_fail(c.status != ClassStatus::Falsified);
  });
}

cc_status cc_falsify_psi(cc_alpha const *alpha, double delta, char **report)
{
  return guarded([&] {
    GaugeAlpha const &a = need(alpha, "alpha").value;
    double            d = delta;
    if (!(d > 0.0))
    {
      auto const own = a.psi_delta();
      if (own && std::isfinite(*own))
      {
        d = *own;
      }
      else if (own)
      {
        d = 1.0;
      }
      else
      {
        auto const found = psi_delta_search(a, {1.0, 0.5, 0.1, 0.01, 1e-3});
        d                = found.value_or(1.0);
      }
    }
    ClassCertificate const c = falsify_psi(a, d);
    Json doc                 = to_json(c);
    doc["alpha"]             = a.name();
    doc["class"]             = "Psi";
    doc["delta"]             = d;
    emit(doc, report);
    return pass_fail(c.status != ClassStatus::Falsified);
  });
}

cc_status cc_alpha0_estimate(cc_alpha const *alpha, double *out)
{
  return guarded([&] {
    need_out(out, "value");
    *out = alpha0_estimate(need(alpha, "alpha").value, default_shrink_grid());
    return CC_OK;
  });
}

cc_status cc_falsify_subsequence(cc_space const *space, cc_map const *map, size_t start, size_t budget,
                                 char **report)
{
  return guarded([&] {
    auto const &s = need(space, "space").value;
    auto const &m = need(map, "map").value;
    check_start(s, m, start);
    SubsequenceReport const r = subsequence_falsify(s, m, start, budget);
    emit(to_json(r), report);
    return pass_fail(!r.flagged);
  });
}

cc_status cc_lattice_campaign(size_t min_points, size_t max_points, uint64_t seed, size_t count, unsigned threads,
                              char **report)
{
  return guarded([&] {
    if (min_points == 0 || max_points < min_points)
    {
      throw InputError("instance sizes need 1 <= min_points <= max_points");
    }
    LatticeCampaign const r = lattice_campaign({min_points, max_points, seed}, count, lattice_gauge_library(), threads);
    Json doc                = to_json(r);
    doc["seed"]             = seed;
    emit(doc, report);
    return pass_fail(r.total_violations() == 0);
  });
}

cc_status cc_main_theorem_campaign(cc_alpha const *alpha, uint64_t seed, size_t spaces, size_t points,
                                   unsigned threads, char **report)
{
  return guarded([&] {
    if (points == 0 || points > 6)
    {
      throw InputError("points must lie in 1..6 for exhaustive map enumeration");
    }
    MainTheoremCampaign const r =
        main_theorem_campaign(need(alpha, "alpha").value, seed, spaces, points, threads);
    Json doc    = to_json(r);
    doc["seed"] = seed;
    emit(doc, report);
    return pass_fail(r.violations == 0);
  });
}

cc_status cc_demo_names(char **out)
{
  return guarded([&] {
    need_out(out, "string");
    emit(Json(demo_names()), out);
    return CC_OK;
  });
}

cc_status cc_demo(char const *name, uint64_t seed, unsigned threads, char **report)
{
  return guarded([&] {
    DemoResult const r = run_demo(need_text(name, "demo name"), DemoOptions{seed, threads});
    emit(r.report, report);
    return pass_fail(r.passed);
  });
}

}  // extern "C"
