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

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using Json = nlohmann::json;

constexpr int kExitInput = 2;

/// Raised for command-line problems found after parsing; exits with code 2.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a library call reports an error; carries its status.
class CallError : public std::runtime_error
{
public:
  CallError(cc_status status, std::string const &message)
    : std::runtime_error(message)
    , status_(status)
  {}
  cc_status status() const noexcept
  {
    return status_;
  }

private:
  cc_status status_;
};

template <class T, void (*Free)(T *)>
struct Deleter
{
  void operator()(T *p) const noexcept
  {
    Free(p);
  }
};

using SpacePtr = std::unique_ptr<cc_space, Deleter<cc_space, cc_space_free>>;
using MapPtr   = std::unique_ptr<cc_map, Deleter<cc_map, cc_map_free>>;
using AlphaPtr = std::unique_ptr<cc_alpha, Deleter<cc_alpha, cc_alpha_free>>;
using PhiPtr   = std::unique_ptr<cc_phi, Deleter<cc_phi, cc_phi_free>>;

/// Errors abort; CC_OK and CC_FAILED are both results.
cc_status check(cc_status status)
{
  if (status == CC_OK || status == CC_FAILED)
  {
    return status;
  }
  throw CallError(status, cc_last_error());
}

/// Takes ownership of a library string and parses it.
Json take_json(char *text)
{
  if (text == nullptr)
  {
    return Json();
  }
  Json doc = Json::parse(text);
  cc_string_free(text);
  return doc;
}

std::string read_file(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
  {
    throw UsageError("cannot read '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// -- options ---------------------------------------------------------------------

struct Options
{
  unsigned    threads{0};
  bool        no_timestamp{false};
  std::string format;

  std::string space_path;
  std::string map_path;
  double      tol{1e-9};

  std::string                condition;
  std::string                alpha_spec;
  std::string                alpha_knots;
  std::string                phi_spec;
  std::string                phi_knots;
  std::optional<double>      r;
  std::optional<double>      eta;

  std::size_t         start{0};
  std::size_t         max_iter{1000};
  std::string         summary_path;
  std::vector<double> cauchy_eps;

  std::string                target;
  std::optional<std::size_t> budget;
  std::uint64_t              seed{42};
  std::size_t                min_points{2};
  std::size_t                max_points{5};
  std::optional<double>      delta;

  std::string demo;
};

// -- loading ---------------------------------------------------------------------

struct Instance
{
  SpacePtr space;
  MapPtr   map;
};

SpacePtr load_space(Options const &o)
{
  if (o.space_path.empty())
  {
    throw UsageError("--space is required");
  }
  cc_space *raw = nullptr;
  check(cc_space_from_json(read_file(o.space_path).c_str(), o.tol, &raw));
  return SpacePtr(raw);
}

/// Builtin map documents bring their own grid space; table maps need --space.
Instance load_instance(Options const &o)
{
  if (o.map_path.empty())
  {
    throw UsageError("--map is required");
  }
  std::string const map_text = read_file(o.map_path);
  Json              doc;
  try
  {
    doc = Json::parse(map_text);
  }
  catch (Json::parse_error const &e)
  {
    throw CallError(CC_ERR_INPUT, std::string("map: malformed JSON: ") + e.what());
  }
  Instance inst;
  if (doc.is_object() && doc.contains("builtin"))
  {
    if (!o.space_path.empty())
    {
      throw UsageError("--space cannot be combined with a builtin map, which defines its own grid");
    }
    cc_map   *map  = nullptr;
    cc_space *grid = nullptr;
    check(cc_map_from_json(map_text.c_str(), nullptr, &map, &grid));
    inst.map.reset(map);
    inst.space.reset(grid);
    return inst;
  }
  inst.space   = load_space(o);
  cc_map *map  = nullptr;
  check(cc_map_from_json(map_text.c_str(), inst.space.get(), &map, nullptr));
  inst.map.reset(map);
  return inst;
}

AlphaPtr load_alpha(Options const &o, bool required = true)
{
  if (!o.alpha_spec.empty() && !o.alpha_knots.empty())
  {
    throw UsageError("--alpha and --alpha-knots are mutually exclusive");
  }
  cc_alpha *raw = nullptr;
  if (!o.alpha_knots.empty())
  {
    check(cc_alpha_from_knots_json(read_file(o.alpha_knots).c_str(), &raw));
  }
  else if (!o.alpha_spec.empty())
  {
    check(cc_alpha_parse(o.alpha_spec.c_str(), &raw));
  }
  else if (required)
  {
    throw UsageError("--alpha or --alpha-knots is required");
  }
  return AlphaPtr(raw);
}

PhiPtr load_phi(Options const &o, bool required = true)
{
  if (!o.phi_spec.empty() && !o.phi_knots.empty())
  {
    throw UsageError("--phi and --phi-knots are mutually exclusive");
  }
  cc_phi *raw = nullptr;
  if (!o.phi_knots.empty())
  {
    check(cc_phi_from_knots_json(read_file(o.phi_knots).c_str(), &raw));
  }
  else if (!o.phi_spec.empty())
  {
    check(cc_phi_parse(o.phi_spec.c_str(), &raw));
  }
  else if (required)
  {
    throw UsageError("--phi or --phi-knots is required");
  }
  return PhiPtr(raw);
}

// -- output ----------------------------------------------------------------------

std::string utc_timestamp()
{
  std::time_t const now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm           tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Json with_meta(Json report, std::string const &command, Options const &o)
{
  Json meta{{"tool", "contracert"}, {"version", cc_version()}, {"command", command}};
  if (!o.no_timestamp)
  {
    meta["timestamp"] = utc_timestamp();
  }
  return {{"meta", std::move(meta)}, {"result", std::move(report)}};
}

std::string scalar_text(Json const &v)
{
  return v.is_string() ? v.get<std::string>() : v.dump();
}

bool is_flat(Json const &v)
{
  if (v.is_object())
  {
    for (auto const &[k, x] : v.items())
    {
      if (x.is_structured() && !(x.is_array() && std::none_of(x.begin(), x.end(), [](Json const &e) {
                                   return e.is_structured();
                                 })))
      {
        return false;
      }
    }
    return true;
  }
  return false;
}

bool is_table(Json const &v)
{
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), is_flat);
}

bool is_scalar_list(Json const &v)
{
  return !v.is_structured() ||
         (v.is_array() && std::none_of(v.begin(), v.end(), [](Json const &e) { return e.is_structured(); }));
}

void render_table(Json const &rows, std::ostream &out)
{
  std::vector<std::string> columns;
  for (auto const &row : rows)
  {
    for (auto const &[k, x] : row.items())
    {
      if (std::find(columns.begin(), columns.end(), k) == columns.end())
      {
        columns.push_back(k);
      }
    }
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t>              width(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c)
  {
    width[c] = columns[c].size();
  }
  for (auto const &row : rows)
  {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < columns.size(); ++c)
    {
      std::string const text = row.contains(columns[c]) ? scalar_text(row[columns[c]]) : "";
      width[c]               = std::max(width[c], text.size());
      line.push_back(text);
    }
    cells.push_back(std::move(line));
  }
  auto print_line = [&](std::vector<std::string> const &line) {
    std::string text = "  ";
    for (std::size_t c = 0; c < line.size(); ++c)
    {
      text += line[c];
      if (c + 1 < line.size())
      {
        text += std::string(width[c] - line[c].size() + 2, ' ');
      }
    }
    out << text << '\n';
  };
  print_line(columns);
  for (auto const &line : cells)
  {
    print_line(line);
  }
}

void render_text(Json const &v, std::string const &path, std::ostream &out)
{
  if (is_scalar_list(v))
  {
    out << (path.empty() ? "" : path + ": ") << scalar_text(v) << '\n';
  }
  else if (is_table(v))
  {
    out << path << ":\n";
    render_table(v, out);
  }
  else if (v.is_object())
  {
    for (auto const &[k, x] : v.items())
    {
      render_text(x, path.empty() ? k : path + "." + k, out);
    }
  }
  else
  {
    for (std::size_t i = 0; i < v.size(); ++i)
    {
      render_text(v[i], path + "[" + std::to_string(i) + "]", out);
    }
  }
}

std::string resolved_format(Options const &o, char const *fallback)
{
  std::string const f = o.format.empty() ? fallback : o.format;
  return f;
}

void print_report(Json const &report, std::string const &command, Options const &o)
{
  std::string const format = resolved_format(o, "json");
  if (format == "csv")
  {
    throw UsageError("--format csv is only available for iterate");
  }
  Json const doc = with_meta(report, command, o);
  if (format == "text")
  {
    render_text(doc, "", std::cout);
  }
  else
  {
    std::cout << doc.dump(2) << '\n';
  }
}

int exit_code(cc_status status)
{
  return static_cast<int>(status);
}

// -- commands --------------------------------------------------------------------

int cmd_validate(Options const &o)
{
  if (o.space_path.empty())
  {
    throw UsageError("--space is required");
  }
  char     *out    = nullptr;
  cc_status status = check(cc_validate_json(read_file(o.space_path).c_str(), o.tol, &out));
  print_report(take_json(out), "validate", o);
  return exit_code(status);
}

int cmd_certify(Options const &o)
{
  if (o.condition.empty())
  {
    throw UsageError("--condition is required");
  }
  Instance            inst  = load_instance(o);
  AlphaPtr            alpha = load_alpha(o, false);
  PhiPtr              phi   = load_phi(o, false);
  cc_condition_params params{};
  params.has_r   = o.r.has_value() ? 1 : 0;
  params.r       = o.r.value_or(0.0);
  params.has_eta = o.eta.has_value() ? 1 : 0;
  params.eta     = o.eta.value_or(0.0);
  params.alpha   = alpha.get();
  params.phi     = phi.get();
  char     *out    = nullptr;
  cc_status status = check(cc_certify(inst.space.get(), inst.map.get(), o.condition.c_str(), &params, o.threads, &out));
  print_report(take_json(out), "certify", o);
  return exit_code(status);
}

int cmd_classify(Options const &o)
{
  Instance  inst   = load_instance(o);
  char     *out    = nullptr;
  cc_status status = check(cc_classify(inst.space.get(), inst.map.get(), &out));
  print_report(take_json(out), "classify", o);
  return exit_code(status);
}

std::string format_double(double v)
{
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int cmd_iterate(Options const &o)
{
  Instance inst = load_instance(o);
  char    *out  = nullptr;
  check(cc_iterate(inst.space.get(), inst.map.get(), o.start, o.max_iter, &out));
  Json trace = take_json(out);

  Json cauchy = Json::array();
  for (double eps : o.cauchy_eps)
  {
    char *c = nullptr;
    check(cc_cauchy(inst.space.get(), inst.map.get(), o.start, o.max_iter, eps, &c));
    cauchy.push_back(take_json(c));
  }

  std::string const format = resolved_format(o, "csv");
  if (format != "csv")
  {
    Json report = trace;
    if (!cauchy.empty())
    {
      report["cauchy"] = cauchy;
    }
    print_report(report, "iterate", o);
    return 0;
  }

  auto const &labels = trace["labels"];
  auto const &steps  = trace["step_dists"];
  std::cout << "step,point,step_dist\n";
  for (std::size_t k = 0; k < labels.size(); ++k)
  {
    std::cout << k << ',' << labels[k].get<std::string>() << ',';
    if (k < steps.size())
    {
      std::cout << format_double(steps[k].get<double>());
    }
    std::cout << '\n';
  }

  Json summary = trace;
  summary.erase("points");
  summary.erase("labels");
  summary.erase("step_dists");
  summary["steps_recorded"] = steps.size();
  if (!cauchy.empty())
  {
    summary["cauchy"] = cauchy;
  }
  std::string const text = with_meta(summary, "iterate", o).dump(2) + "\n";
  if (o.summary_path.empty())
  {
    std::cerr << text;
  }
  else
  {
    std::ofstream file(o.summary_path, std::ios::binary);
    if (!file)
    {
      throw UsageError("cannot write '" + o.summary_path + "'");
    }
    file << text;
  }
  return 0;
}

int cmd_fixed_points(Options const &o)
{
  Instance inst = load_instance(o);
  char    *out  = nullptr;
  check(cc_fixed_points(inst.map.get(), &out));
  Json points = take_json(out);
  Json labels = Json::array();
  for (auto const &p : points)
  {
    char *s = nullptr;
    check(cc_space_to_json(inst.space.get(), &s));
    labels.push_back(take_json(s)["labels"][p.get<std::size_t>()]);
  }
  print_report({{"fixed_points", points}, {"labels", labels}, {"count", points.size()}}, "fixed-points", o);
  return 0;
}

int cmd_falsify(Options const &o)
{
  char     *out    = nullptr;
  cc_status status = CC_OK;
  if (o.target == "admissibility")
  {
    PhiPtr phi = load_phi(o);
    status     = check(cc_falsify_admissibility(phi.get(), o.min_points, o.max_points, o.seed,
                                                o.budget.value_or(100000), o.threads, &out));
    print_report(take_json(out), "falsify", o);
    return exit_code(status);
  }
  if (o.target == "L")
  {
    PhiPtr phi = load_phi(o);
    status     = check(cc_falsify_l(phi.get(), &out));
    print_report(take_json(out), "falsify", o);
    return exit_code(status);
  }
  if (o.target == "geraghty" || o.target == "psi")
  {
    AlphaPtr alpha = load_alpha(o);
    status         = o.target == "psi" ? check(cc_falsify_psi(alpha.get(), o.delta.value_or(0.0), &out))
                                       : check(cc_falsify_geraghty(alpha.get(), &out));
    Json   report = take_json(out);
    double a0     = 0.0;
    if (cc_alpha0_estimate(alpha.get(), &a0) == CC_OK)
    {
      report["alpha0_estimate"] = a0;
    }
    print_report(report, "falsify", o);
    return exit_code(status);
  }
  if (o.target == "subsequence")
  {
    Instance inst = load_instance(o);
    status = check(cc_falsify_subsequence(inst.space.get(), inst.map.get(), o.start, o.budget.value_or(64), &out));
    print_report(take_json(out), "falsify", o);
    return exit_code(status);
  }
  throw UsageError("--target must be one of admissibility, L, geraghty, psi, subsequence");
}

int cmd_demo(Options const &o)
{
  char     *out    = nullptr;
  cc_status status = check(cc_demo(o.demo.c_str(), o.seed, o.threads, &out));
  print_report(take_json(out), "demo", o);
  return exit_code(status);
}

void add_instance_options(CLI::App *cmd, Options &o)
{
  cmd->add_option("--space", o.space_path, "Space document (JSON)");
  cmd->add_option("--map", o.map_path, "Map document (JSON)");
  cmd->add_option("--tol", o.tol, "Triangle-inequality tolerance")->capture_default_str();
}

void add_gauge_options(CLI::App *cmd, Options &o)
{
  cmd->add_option("--alpha", o.alpha_spec, "Alpha gauge spec, e.g. alpha_reciprocal");
  cmd->add_option("--alpha-knots", o.alpha_knots, "Alpha gauge knot table (JSON)");
  cmd->add_option("--phi", o.phi_spec, "Phi gauge spec, e.g. phi_linear:0.5");
  cmd->add_option("--phi-knots", o.phi_knots, "Phi gauge knot table (JSON)");
}

}  // namespace

int main(int argc, char **argv)
{
  Options o;
  CLI::App app{"Certify contractive conditions and run Picard diagnostics on finite metric spaces"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Read options from a TOML/INI file (command-line flags take precedence)");
  app.add_option("--threads", o.threads, "Worker threads (0 = machine parallelism)")->capture_default_str();
  app.add_flag("--no-timestamp", o.no_timestamp, "Omit the timestamp from report metadata");
  app.add_option("--format", o.format, "Output format: json, text or csv (iterate only)")
      ->check(CLI::IsMember({"json", "text", "csv"}));

  auto *validate = app.add_subcommand("validate", "Check the metric axioms of a distance matrix");
  validate->add_option("--space", o.space_path, "Space document (JSON)")->required();
  validate->add_option("--tol", o.tol, "Triangle-inequality tolerance")->capture_default_str();

  auto *certify = app.add_subcommand("certify", "Certify one condition exhaustively over all pairs");
  add_instance_options(certify, o);
  add_gauge_options(certify, o);
  certify->add_option("--condition", o.condition, "Condition name")->required();
  certify->add_option("--r", o.r, "Ratio parameter r for suzuki_2008");
  certify->add_option("--eta", o.eta, "Parameter eta for eta_alpha");

  auto *classify = app.add_subcommand("classify", "Run every certifier against the default gauge library");
  add_instance_options(classify, o);

  auto *iterate = app.add_subcommand("iterate", "Picard iteration with a CSV trace and a JSON summary");
  add_instance_options(iterate, o);
  iterate->add_option("--start", o.start, "Start point index")->capture_default_str();
  iterate->add_option("--max-iter", o.max_iter, "Maximum number of applications of T")->capture_default_str();
  iterate->add_option("--summary", o.summary_path, "Write the JSON summary here instead of stderr");
  iterate->add_option("--cauchy", o.cauchy_eps, "Replay the Cauchy claim for these epsilons");

  auto *fixed = app.add_subcommand("fixed-points", "List the fixed points of a map");
  add_instance_options(fixed, o);

  auto *falsify = app.add_subcommand("falsify", "Search for counterexamples");
  add_instance_options(falsify, o);
  add_gauge_options(falsify, o);
  falsify->add_option("--target", o.target, "admissibility, L, geraghty, psi or subsequence")
      ->required()
      ->check(CLI::IsMember({"admissibility", "L", "geraghty", "psi", "subsequence"}));
  falsify->add_option("--budget", o.budget, "Instances (admissibility, default 100000) or samples (subsequence, default 64)");
  falsify->add_option("--seed", o.seed, "Instance generator seed")->capture_default_str();
  falsify->add_option("--min-points", o.min_points, "Smallest generated space")->capture_default_str();
  falsify->add_option("--max-points", o.max_points, "Largest generated space")->capture_default_str();
  falsify->add_option("--delta", o.delta, "Delta for the psi condition (default: the gauge's own)");
  falsify->add_option("--start", o.start, "Start point for subsequence")->capture_default_str();

  auto *demo = app.add_subcommand("demo", "Run a canned scenario");
  demo->add_option("name", o.demo, "Demo name")->required();
  demo->add_option("--seed", o.seed, "Seed for randomized demos")->capture_default_str();

  try
  {
    app.parse(argc, argv);
  }
  catch (CLI::CallForHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::CallForAllHelp const &e)
  {
    return app.exit(e);
  }
  catch (CLI::ParseError const &e)
  {
    app.exit(e);
    return kExitInput;
  }

  try
  {
    if (*validate)
    {
      return cmd_validate(o);
    }
    if (*certify)
    {
      return cmd_certify(o);
    }
    if (*classify)
    {
      return cmd_classify(o);
    }
    if (*iterate)
    {
      return cmd_iterate(o);
    }
    if (*fixed)
    {
      return cmd_fixed_points(o);
    }
    if (*falsify)
    {
      return cmd_falsify(o);
    }
    return cmd_demo(o);
  }
  catch (UsageError const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  catch (CallError const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return e.status() == CC_ERR_INPUT ? kExitInput : 3;
  }
  catch (std::exception const &e)
  {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
