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

#include "contracert/campaigns.hpp"

#include "contracert/error.hpp"
#include "contracert/iteration.hpp"
#include "parallel.hpp"

#include <sstream>

namespace contracert {

GaugeLibrary lattice_gauge_library()
{
  GaugeLibrary lib = default_gauge_library();
  lib.suzuki_rs    = {0.3, 0.65, 0.9};
  lib.etas         = {0.25, 0.5, 1.0};
  return lib;
}

std::size_t LatticeCampaign::total_violations() const noexcept
{
  std::size_t total = 0;
  for (auto v : violations)
  {
    total += v;
  }
  return total;
}

namespace {

constexpr std::size_t kMaxExamples = 5;

}  // namespace

LatticeCampaign lattice_campaign(InstanceSpec const &spec, std::size_t count, GaugeLibrary const &library,
                                 unsigned threads)
{
  InstanceGenerator const      generator(spec);
  std::vector<LatticeCampaign> chunks(detail::chunk_count(count, threads));

  detail::parallel_chunks(count, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    auto &local = chunks[chunk];
    for (std::size_t i = begin; i < end; ++i)
    {
      Instance const inst   = generator(i);
      auto const     report = classify(inst.space, inst.map, library);
      ++local.instances;
      std::map<std::string, bool> any_pass;
      for (auto const &e : report.entries)
      {
        any_pass[to_string(e.condition)] = any_pass[to_string(e.condition)] || e.passed;
      }
      for (auto const &[name, passed] : any_pass)
      {
        local.passes[name] += passed ? 1 : 0;
      }
      for (auto const &v : report.lattice_violations)
      {
        ++local.violations[static_cast<std::size_t>(v.implication - 'a')];
        if (local.examples.size() < kMaxExamples)
        {
          std::ostringstream msg;
          msg << "instance " << i << " (" << v.implication << "): " << v.detail;
          local.examples.push_back(msg.str());
        }
      }
    }
  });

  LatticeCampaign out;
  for (auto const &local : chunks)
  {
    out.instances += local.instances;
    for (std::size_t k = 0; k < out.violations.size(); ++k)
    {
      out.violations[k] += local.violations[k];
    }
    for (auto const &[name, n] : local.passes)
    {
      out.passes[name] += n;
    }
    for (auto const &ex : local.examples)
    {
      if (out.examples.size() < kMaxExamples)
      {
        out.examples.push_back(ex);
      }
    }
  }
  return out;
}

MainTheoremCampaign main_theorem_campaign(GaugeAlpha const &alpha, std::uint64_t seed, std::size_t spaces,
                                          std::size_t points, unsigned threads)
{
  if (points == 0 || points > 6)
  {
    throw InputError("main theorem campaign enumerates all maps; use 1..6 points");
  }
  std::size_t total_maps = 1;
  for (std::size_t k = 0; k < points; ++k)
  {
    total_maps *= points;
  }

  std::vector<MainTheoremCampaign> chunks(detail::chunk_count(spaces, threads));
  detail::parallel_chunks(spaces, threads, [&](std::size_t chunk, std::size_t begin, std::size_t end) {
    auto &local = chunks[chunk];
    for (std::size_t s = begin; s < end; ++s)
    {
      Rng        rng(seed ^ mix_seed(s));
      auto const space = random_space(rng, points);
      ++local.spaces;
      for (std::size_t code = 0; code < total_maps; ++code)
      {
        std::vector<std::size_t> table(points);
        std::size_t              rest = code;
        for (auto &t : table)
        {
          t = rest % points;
          rest /= points;
        }
        auto const map = SelfMap::from_table(table, points);
        ++local.maps_checked;
        if (!check_main(space, map, alpha).passed)
        {
          continue;
        }
        ++local.maps_passing;

        auto const fixed = fixed_points(map);
        bool       ok    = fixed.size() == 1;
        for (std::size_t x = 0; ok && x < points; ++x)
        {
          auto const trace = picard(space, map, x, points + 1);
          ok = trace.status == OrbitStatus::Fixed && trace.points.back() == fixed.front() &&
               trace.fixed_step <= points;
          local.max_steps_to_fixed = std::max(local.max_steps_to_fixed, trace.fixed_step);
        }
        if (!ok)
        {
          ++local.violations;
          if (local.examples.size() < kMaxExamples)
          {
            std::ostringstream msg;
            msg << "space " << s << ", map code " << code << ": " << fixed.size() << " fixed points";
            local.examples.push_back(msg.str());
          }
        }
      }
    }
  });

  MainTheoremCampaign out;
  out.points = points;
  for (auto const &local : chunks)
  {
    out.spaces += local.spaces;
    out.maps_checked += local.maps_checked;
    out.maps_passing += local.maps_passing;
    out.violations += local.violations;
    out.max_steps_to_fixed = std::max(out.max_steps_to_fixed, local.max_steps_to_fixed);
    for (auto const &ex : local.examples)
    {
      if (out.examples.size() < kMaxExamples)
      {
        out.examples.push_back(ex);
      }
    }
  }
  return out;
}

}  // namespace contracert
