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

#include "contracert/campaigns.hpp"
#include "contracert/certifiers.hpp"
#include "contracert/gauges.hpp"
#include "contracert/iteration.hpp"
#include "contracert/metric.hpp"
#include "contracert/real_maps.hpp"

#include <json.hpp>

#include <optional>

namespace contracert {

using Json = nlohmann::json;

/// Finite doubles as numbers, everything else as null.
Json number_or_null(double v);

// -- input documents -------------------------------------------------------------

/// { "labels": [...], "matrix": [[...]] } or { "points": [[...]], "metric": "..." }.
/// Error messages name the offending field.
FiniteMetricSpace space_from_json(Json const &doc, double tol = kDefaultMetricTolerance);

/// The "matrix" field of a space document, not yet validated as a metric.
SquareMatrix raw_matrix_from_json(Json const &doc);

/// A map document is either a table over an existing space or a builtin that
/// brings its own grid space.
struct ParsedMap
{
  std::vector<std::size_t>  table;
  std::optional<SampledMap> sampled;
};

/// { "table": [...] } or { "builtin": "halving"|"mobius", "domain": [a, b], "grid": n }.
ParsedMap map_from_json(Json const &doc);

/// { "knots": [[s, value], ...] }
Knots knots_from_json(Json const &doc);

// -- reports ---------------------------------------------------------------------

Json to_json(ValidationReport const &r);
Json to_json(FiniteMetricSpace const &s);
Json to_json(PairOutcome const &p, FiniteMetricSpace const &space);
Json to_json(Certificate const &c, FiniteMetricSpace const &space);
Json to_json(ClassCertificate const &c);
Json to_json(ClassificationReport const &r);
Json to_json(OrbitTrace const &t, FiniteMetricSpace const &space);
Json to_json(RealOrbitTrace const &t);
Json to_json(StrictDecrease const &s);
Json to_json(CauchyCertificate const &c);
Json to_json(EitherOrReport const &r);
Json to_json(AdmissibilitySearch const &r);
Json to_json(SubsequenceReport const &r);
Json to_json(LatticeCampaign const &r);
Json to_json(MainTheoremCampaign const &r);

}  // namespace contracert
