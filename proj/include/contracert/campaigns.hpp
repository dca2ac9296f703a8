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

#include "contracert/certifiers.hpp"
#include "contracert/instances.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace contracert {

/// Library used by the lattice campaign: the default library plus suzuki
/// r in {0.3, 0.65, 0.9} (one per theta branch) and eta in {0.25, 0.5, 1}.
GaugeLibrary lattice_gauge_library();

struct LatticeCampaign
{
  std::size_t                        instances{0};
  std::array<std::size_t, 5>         violations{};  ///< per implication a..e
  std::vector<std::string>           examples;      ///< first few violations, with instance index
  std::map<std::string, std::size_t> passes;        ///< condition -> instances where some entry passed

  std::size_t total_violations() const noexcept;
};

/// Classifies `count` seeded instances and tallies implication-lattice violations.
LatticeCampaign lattice_campaign(InstanceSpec const &spec, std::size_t count, GaugeLibrary const &library,
                                 unsigned threads = 1);

struct MainTheoremCampaign
{
  std::size_t              spaces{0};
  std::size_t              points{0};
  std::size_t              maps_checked{0};
  std::size_t              maps_passing{0};
  std::size_t              max_steps_to_fixed{0};
  std::size_t              violations{0};
  std::vector<std::string> examples;
};

/// For each of `spaces` seeded random spaces on `points` points, enumerates
/// every self-map; each map passing check_main(alpha) must have exactly one
/// fixed point reached from every start within `points` steps.
MainTheoremCampaign main_theorem_campaign(GaugeAlpha const &alpha, std::uint64_t seed, std::size_t spaces,
                                          std::size_t points = 4, unsigned threads = 1);

}  // namespace contracert
