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

#include "contracert/serialize.hpp"

#include "contracert/error.hpp"

#include <cmath>

namespace contracert {

Json number_or_null(double v)
{
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

namespace {

double require_number(Json const &v, std::string const &where)
{
  if (!v.is_number())
  {
    throw InputError(where + " is not a number");
  }
  double const d = v.get<double>();
  if (!std::isfinite(d))
  {
    throw InputError(where + " is not finite");
  }
  return d;
}

std::vector<std::vector<double>> require_rows(Json const &doc, char const *doc_name, char const *field)
{
  std::string const where = std::string(doc_name) + ": field '" + field + "'";
  if (!doc.contains(field) || !doc[field].is_array())
  {
    throw InputError(where + " must be an array of arrays");
  }
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < doc[field].size(); ++i)
  {
    Json const &row = doc[field][i];
    if (!row.is_array())
    {
      throw InputError(where + " row " + std::to_string(i) + " is not an array");
    }
    std::vector<double> values;
    for (std::size_t j = 0; j < row.size(); ++j)
    {
      values.push_back(require_number(row[j], where + " row " + std::to_string(i) + " entry " + std::to_string(j)));
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

std::vector<std::string> optional_labels(Json const &doc)
{
  std::vector<std::string> labels;
  if (!doc.contains("labels"))
  {
    return labels;
  }
  if (!doc["labels"].is_array())
  {
    throw InputError("space: field 'labels' must be an array");
  }
  for (std::size_t i = 0; i < doc["labels"].size(); ++i)
  {
    Json const &l = doc["labels"][i];
    if (l.is_string())
    {
      labels.push_back(l.get<std::string>());
    }
    else if (l.is_number_integer())
    {
      labels.push_back(std::to_string(l.get<long long>()));
    }
    else
    {
      throw InputError("space: field 'labels' entry " + std::to_string(i) + " must be a string");
    }
  }
  return labels;
}

}  // namespace

FiniteMetricSpace space_from_json(Json const &doc, double tol)
{
  if (!doc.is_object())
  {
    throw InputError("space: document must be a JSON object");
  }
  if (doc.contains("matrix"))
  {
    auto rows = require_rows(doc, "space", "matrix");
    SquareMatrix m;
    try
    {
      m = SquareMatrix::from_rows(rows);
    }
    catch (InputError const &e)
    {
      throw InputError(std::string("space: field 'matrix': ") + e.what());
    }
    try
    {
      return FiniteMetricSpace::from_matrix(std::move(m), optional_labels(doc), tol);
    }
    catch (InputError const &e)
    {
      throw InputError(std::string("space: field 'matrix': ") + e.what());
    }
  }
  if (doc.contains("points"))
  {
    auto rows = require_rows(doc, "space", "points");
    if (!doc.contains("metric") || !doc["metric"].is_string())
    {
      throw InputError("space: field 'metric' must be one of euclidean, manhattan, chebyshev");
    }
    PointMetric kind;
    try
    {
      kind = parse_point_metric(doc["metric"].get<std::string>());
    }
    catch (InputError const &e)
    {
      throw InputError(std::string("space: field 'metric': ") + e.what());
    }
    try
    {
      return FiniteMetricSpace::from_points(rows, kind, optional_labels(doc));
    }
    catch (InputError const &e)
    {
      throw InputError(std::string("space: field 'points': ") + e.what());
    }
  }
  throw InputError("space: expected field 'matrix' or 'points'");
}

SquareMatrix raw_matrix_from_json(Json const &doc)
{
  if (!doc.is_object())
  {
    throw InputError("space: document must be a JSON object");
  }
  auto rows = require_rows(doc, "space", "matrix");
  if (rows.empty())
  {
    throw InputError("space: field 'matrix' is empty");
  }
  try
  {
    return SquareMatrix::from_rows(rows);
  }
  catch (InputError const &e)
  {
    throw InputError(std::string("space: field 'matrix': ") + e.what());
  }
}

ParsedMap map_from_json(Json const &doc)
{
  if (!doc.is_object())
  {
    throw InputError("map: document must be a JSON object");
  }
  ParsedMap out;
  if (doc.contains("table"))
  {
    if (!doc["table"].is_array())
    {
      throw InputError("map: field 'table' must be an array of point indices");
    }
    for (std::size_t i = 0; i < doc["table"].size(); ++i)
    {
      Json const &v = doc["table"][i];
      if (!v.is_number_integer() || v.get<long long>() < 0)
      {
        throw InputError("map: field 'table' entry " + std::to_string(i) + " is not a nonnegative integer");
      }
      out.table.push_back(v.get<std::size_t>());
    }
    return out;
  }
  if (doc.contains("builtin"))
  {
    if (!doc["builtin"].is_string())
    {
      throw InputError("map: field 'builtin' must be a string");
    }
    if (!doc.contains("domain") || !doc["domain"].is_array() || doc["domain"].size() != 2)
    {
      throw InputError("map: field 'domain' must be [a, b]");
    }
    double const lo = require_number(doc["domain"][0], "map: field 'domain' entry 0");
    double const hi = require_number(doc["domain"][1], "map: field 'domain' entry 1");
    if (!doc.contains("grid") || !doc["grid"].is_number_integer() || doc["grid"].get<long long>() < 2)
    {
      throw InputError("map: field 'grid' must be an integer >= 2");
    }
    try
    {
      out.sampled = sample_builtin(doc["builtin"].get<std::string>(), lo, hi, doc["grid"].get<std::size_t>());
    }
    catch (InputError const &e)
    {
      throw InputError(std::string("map: field 'builtin': ") + e.what());
    }
    out.table = out.sampled->map.table();
    return out;
  }
  throw InputError("map: expected field 'table' or 'builtin'");
}

Knots knots_from_json(Json const &doc)
{
  if (!doc.is_object() || !doc.contains("knots") || !doc["knots"].is_array())
  {
    throw InputError("gauge: field 'knots' must be an array of [s, value] pairs");
  }
  Knots knots;
  for (std::size_t i = 0; i < doc["knots"].size(); ++i)
  {
    Json const       &k     = doc["knots"][i];
    std::string const where = "gauge: field 'knots' entry " + std::to_string(i);
    if (!k.is_array() || k.size() != 2)
    {
      throw InputError(where + " must be a [s, value] pair");
    }
    knots.emplace_back(require_number(k[0], where + " s"), require_number(k[1], where + " value"));
  }
  return knots;
}

Json to_json(ValidationReport const &r)
{
  Json v = Json::array();
  for (auto const &x : r.violations)
  {
    Json e{{"axiom", to_string(x.axiom)}, {"i", x.i}, {"j", x.j}, {"slack", number_or_null(x.slack)}};
    if (x.axiom == Axiom::Triangle)
    {
      e["via"] = x.k;
    }
    v.push_back(std::move(e));
  }
  return {{"passed", r.passed}, {"tolerance", r.tolerance}, {"violations", std::move(v)}};
}

Json to_json(FiniteMetricSpace const &s)
{
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.size(); ++i)
  {
    Json row = Json::array();
    for (std::size_t j = 0; j < s.size(); ++j)
    {
      row.push_back(s.distance(i, j));
    }
    rows.push_back(std::move(row));
  }
  return {{"labels", s.labels()}, {"matrix", std::move(rows)}};
}

Json to_json(PairOutcome const &p, FiniteMetricSpace const &space)
{
  return {{"x", p.x},
          {"y", p.y},
          {"x_label", space.labels()[p.x]},
          {"y_label", space.labels()[p.y]},
          {"premise_active", p.premise_active},
          {"premise_lhs", number_or_null(p.premise_lhs)},
          {"premise_rhs", number_or_null(p.premise_rhs)},
          {"lhs", number_or_null(p.lhs)},
          {"rhs", number_or_null(p.rhs)}};
}

Json to_json(Certificate const &c, FiniteMetricSpace const &space)
{
  Json params = Json::object();
  if (c.params.r)
  {
    params["r"] = *c.params.r;
  }
  if (c.params.eta)
  {
    params["eta"] = *c.params.eta;
  }
  if (c.params.phi)
  {
    params["phi"] = c.params.phi->name();
  }
  if (c.params.alpha)
  {
    params["alpha"] = c.params.alpha->name();
  }
  Json witnesses = Json::array();
  for (auto const &w : c.witnesses)
  {
    witnesses.push_back(to_json(w, space));
  }
  Json out{{"condition", to_string(c.condition)},
           {"params", std::move(params)},
           {"passed", c.passed},
           {"witnesses", std::move(witnesses)},
           {"margins",
            {{"min_margin", number_or_null(c.margins.min_margin)},
             {"pairs_checked", c.margins.pairs_checked},
             {"premise_active", c.margins.premise_active},
             {"premise_inactive", c.margins.premise_inactive},
             {"numerically_fragile", c.margins.fragile},
             {"fragile_threshold", kFragileMargin}}}};
  if (c.r_star)
  {
    out["r_star"] = *c.r_star;
  }
  return out;
}

Json to_json(ClassCertificate const &c)
{
  Json out{{"status", to_string(c.status)}, {"grid", c.grid_spec}, {"slack", c.slack}};
  if (c.witness)
  {
    Json inputs = Json::array();
    Json values = Json::array();
    for (double v : c.witness->inputs)
    {
      inputs.push_back(number_or_null(v));
    }
    for (double v : c.witness->values)
    {
      values.push_back(number_or_null(v));
    }
    out["witness"] = {{"clause", c.witness->clause}, {"inputs", std::move(inputs)}, {"values", std::move(values)}};
    if (!c.witness->indices.empty())
    {
      out["witness"]["indices"] = c.witness->indices;
    }
  }
  else
  {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(ClassificationReport const &r)
{
  Json entries = Json::array();
  for (auto const &e : r.entries)
  {
    Json j{{"condition", to_string(e.condition)},
           {"gauge", e.gauge},
           {"passed", e.passed},
           {"witnesses", e.witness_count},
           {"min_margin", number_or_null(e.min_margin)}};
    if (e.r)
    {
      j["r"] = *e.r;
    }
    if (e.eta)
    {
      j["eta"] = *e.eta;
    }
    entries.push_back(std::move(j));
  }
  Json violations = Json::array();
  for (auto const &v : r.lattice_violations)
  {
    violations.push_back({{"implication", std::string(1, v.implication)}, {"detail", v.detail}});
  }
  return {{"r_star", r.r_star}, {"entries", std::move(entries)}, {"lattice_violations", std::move(violations)}};
}

namespace {

Json status_json(OrbitStatus status, std::size_t fixed_step, std::size_t entry, std::size_t length)
{
  Json s{{"kind", to_string(status)}};
  if (status == OrbitStatus::Fixed)
  {
    s["step"] = fixed_step;
  }
  else if (status == OrbitStatus::Cycle)
  {
    s["entry"]  = entry;
    s["length"] = length;
  }
  return s;
}

}  // namespace

Json to_json(OrbitTrace const &t, FiniteMetricSpace const &space)
{
  Json labels = Json::array();
  for (auto p : t.points)
  {
    labels.push_back(space.labels()[p]);
  }
  return {{"start", t.start},
          {"points", t.points},
          {"labels", std::move(labels)},
          {"step_dists", t.step_dists},
          {"status", status_json(t.status, t.fixed_step, t.cycle_entry, t.cycle_length)},
          {"strict_decrease_ok", t.strict_decrease_ok}};
}

Json to_json(RealOrbitTrace const &t)
{
  return {{"start", t.start},
          {"points", t.points},
          {"step_dists", t.step_dists},
          {"status", status_json(t.status, t.fixed_step, 0, 0)},
          {"tolerance", t.tolerance},
          {"strict_decrease_ok", t.strict_decrease_ok}};
}

Json to_json(StrictDecrease const &s)
{
  Json out{{"ok", s.ok}, {"vacuous", s.vacuous}};
  out["first_violation"] = s.first_violation ? Json(*s.first_violation) : Json(nullptr);
  return out;
}

Json to_json(CauchyCertificate const &c)
{
  Json out{{"epsilon", c.epsilon},
           {"s", c.s_value},
           {"delta", c.delta_used},
           {"N", c.n_used},
           {"N_from_recipe", c.n_from_recipe},
           {"verified_window", c.verified_window},
           {"status", to_string(c.status)},
           {"holds", c.holds()}};
  out["first_violation"] =
      c.first_violation ? Json{{"n", c.first_violation->first}, {"m", c.first_violation->second}} : Json(nullptr);
  return out;
}

Json to_json(EitherOrReport const &r)
{
  Json steps = Json::array();
  for (auto const &s : r.steps)
  {
    Json j{{"n", s.n},
           {"first", s.first},
           {"second", s.second},
           {"vacuous", s.vacuous},
           {"aux", s.aux},
           {"first_lhs", s.first_lhs},
           {"first_rhs", s.first_rhs},
           {"second_lhs", s.second_lhs},
           {"second_rhs", s.second_rhs}};
    j["consequence"] = s.consequence ? Json(*s.consequence) : Json(nullptr);
    steps.push_back(std::move(j));
  }
  return {{"z", r.z},
          {"N", r.n_used},
          {"delta", number_or_null(r.delta_used)},
          {"holds", r.holds},
          {"failed", r.failed},
          {"consequence_checked", r.consequence_checked},
          {"consequence_holds", r.consequence_holds},
          {"steps", std::move(steps)}};
}

Json to_json(AdmissibilitySearch const &r)
{
  Json out{{"found", r.counterexample.has_value()},
           {"instances_tried", r.instances_tried},
           {"instances_passing", r.instances_passing},
           {"orbits_checked", r.orbits_checked},
           {"strict_decrease_violations", r.strict_decrease_violations}};
  if (r.first_strict_violation)
  {
    out["first_strict_violation"] = {{"instance", r.first_strict_violation->first},
                                     {"start", r.first_strict_violation->second}};
  }
  if (r.counterexample)
  {
    auto const &cx          = *r.counterexample;
    out["counterexample"] = {{"instance", cx.instance_index},
                             {"space", to_json(cx.space)},
                             {"map", {{"table", cx.map.table()}}},
                             {"start", cx.start},
                             {"trace", to_json(cx.trace, cx.space)}};
  }
  return out;
}

Json to_json(SubsequenceReport const &r)
{
  Json out{{"vacuous", r.vacuous},
           {"flagged", r.flagged},
           {"samples_per_family", r.samples_per_family},
           {"families_examined", r.families.size()},
           {"admissible_families", r.admissible_families},
           {"ratio_tolerance", kSubsequenceRatioTolerance},
           {"distance_floor", kSubsequenceDistanceFloor},
           {"note", "falsification only: a flag shows a violating subsequence pair; no flag proves nothing"}};
  if (r.witness)
  {
    out["witness"] = {{"phase", r.witness->phase},
                      {"offset", r.witness->offset},
                      {"stride", r.witness->stride},
                      {"tail_min_delta", r.witness->tail_min_delta},
                      {"tail_max_ratio_gap", r.witness->tail_max_ratio_gap}};
  }
  else
  {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(LatticeCampaign const &r)
{
  Json v = Json::object();
  for (std::size_t k = 0; k < r.violations.size(); ++k)
  {
    v[std::string(1, static_cast<char>('a' + k))] = r.violations[k];
  }
  return {{"instances", r.instances},
          {"violations", std::move(v)},
          {"total_violations", r.total_violations()},
          {"examples", r.examples},
          {"instances_with_a_pass", r.passes}};
}

Json to_json(MainTheoremCampaign const &r)
{
  return {{"spaces", r.spaces},
          {"points", r.points},
          {"maps_checked", r.maps_checked},
          {"maps_passing", r.maps_passing},
          {"max_steps_to_fixed", r.max_steps_to_fixed},
          {"violations", r.violations},
          {"examples", r.examples}};
}

}  // namespace contracert
