// Copyright 2026 The matchstick Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// matchstick: command-line front end for fixtures, closure solving, ring and
// chain assembly, certification, minimal-n sweeps and SVG export.

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "matchstick/assembler.hpp"
#include "matchstick/error.hpp"
#include "matchstick/fixtures.hpp"
#include "matchstick/graph_io.hpp"
#include "matchstick/linkage.hpp"
#include "matchstick/search.hpp"
#include "matchstick/svg.hpp"
#include "matchstick/verifier.hpp"

namespace ms = matchstick;

namespace {

constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;
constexpr int kExitNoPassingN = 1;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr std::string_view kFixturePrefix = "fixture:";

bool is_fixture(const std::string& input) { return input.rfind(kFixturePrefix, 0) == 0; }

/// Flag, then MSF_PRECISION, then the precision recorded in the input file,
/// then the default.
void configure_precision(std::optional<unsigned> flag, const std::optional<std::string>& file_text) {
  if (flag) {
    ms::set_precision(*flag);
  } else if (std::getenv("MSF_PRECISION") != nullptr) {
    ms::set_precision(ms::precision_from_environment());
  } else if (file_text) {
    ms::set_precision(std::max(ms::peek_precision(*file_text), ms::kMinPrecision));
  } else {
    ms::set_precision(ms::kDefaultPrecision);
  }
}

/// Loads "fixture:NAME" or a graph file, setting the working precision first.
ms::UnitGraph load_input(const std::string& input, std::optional<unsigned> precision) {
  if (is_fixture(input)) {
    configure_precision(precision, std::nullopt);
    return ms::load_fixture(input.substr(kFixturePrefix.size()));
  }
  std::string text;
  try {
    text = ms::read_text_file(input);
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  configure_precision(precision, text);
  return ms::parse_graph(text).graph;
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
  } else {
    ms::write_text_file(output, text);
  }
}

std::string readout_text(const ms::AngleReadout& readout, const ms::ReferenceReadout* ref) {
  std::ostringstream os;
  auto row = [&](const std::string& name, const ms::Scalar& value, const std::string* reference) {
    os << std::left << std::setw(12) << name << ms::format_fixed(value, 17);
    if (reference) {
      const ms::Scalar expected = ms::parse_scalar(*reference);
      os << "  ref " << *reference << "  delta " << ms::format_scalar(value - expected, 3);
    }
    os << "\n";
  };
  for (const auto& [name, value] : readout.angles) {
    const std::string* reference = nullptr;
    if (ref) {
      auto it = ref->angles.find(name);
      if (it != ref->angles.end()) reference = &it->second;
    }
    row(name, value, reference);
  }
  row("GH", readout.gh, ref ? &ref->gh : nullptr);
  row("omega", readout.omega_check, nullptr);
  for (const auto& [name, spread] : readout.spreads) {
    if (spread > 0) os << "spread " << name << " " << ms::format_scalar(spread, 3) << "\n";
  }
  return os.str();
}

const ms::ReferenceReadout* reference_for(const ms::UnitGraph& g) {
  const auto name = g.meta_value("template") ? g.meta_value("template") : g.meta_value("fixture");
  if (!name) return nullptr;
  if (auto n = g.meta_value("ring.n")) return ms::find_reference(*name, std::stoi(*n));
  for (const auto& ref : ms::reference_readouts()) {
    if (ref.template_name == *name) return &ref;
  }
  return nullptr;
}

ms::VerdictSet parse_requirements(const std::vector<std::string>& names) {
  if (names.empty()) return {};
  ms::VerdictSet set{false, false, false, false};
  for (const std::string& n : names) {
    if (n == "unit") {
      set.unit = true;
    } else if (n == "regular4") {
      set.regular4 = true;
    } else if (n == "planar") {
      set.planar = true;
    } else if (n == "no_additional") {
      set.no_additional = true;
    } else {
      throw UsageError("unknown verdict '" + n + "' (unit, regular4, planar, no_additional)");
    }
  }
  return set;
}

/// Exit code restricted to the required verdicts.
int required_exit_code(ms::VerificationReport report, const ms::VerdictSet& required) {
  if (!required.unit) report.unit = true;
  if (!required.regular4) report.regular4 = true;
  if (!required.no_additional) report.no_additional = true;
  if (!required.planar) {
    report.planar = true;
    report.scan = {};
  }
  return ms::verdict_exit_code(report);
}

ms::ToleranceProfile profile_for(const std::string& name, const ms::UnitGraph& g) {
  if (name != "auto") {
    try {
      return ms::ToleranceProfile::by_name(name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (g.meta_value("kind") == "fixture") {
    return g.meta_value("fixture.precision") == "sketch" ? ms::ToleranceProfile::sketch()
                                                         : ms::ToleranceProfile::fixture();
  }
  return ms::ToleranceProfile::solved();
}

ms::ChainPiece chain_piece(std::string token, std::optional<unsigned> precision) {
  bool reversed = false;
  bool mirrored = false;
  bool adapter = false;
  for (bool again = true; again;) {
    again = false;
    for (auto [prefix, flag] : {std::pair{"rev:", &reversed}, std::pair{"mirror:", &mirrored},
                                std::pair{"adapter:", &adapter}}) {
      if (token.rfind(prefix, 0) == 0) {
        *flag = true;
        token = token.substr(std::string_view(prefix).size());
        again = true;
      }
    }
  }
  ms::UnitGraph g = load_input(token, precision);
  if (adapter) g = ms::make_adapter(g);
  if (mirrored) g = ms::mirror_adapter(g);
  return {std::move(g), reversed};
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matchstick graph construction and certification"};
  app.require_subcommand(1);
  app.fallthrough();
  std::optional<unsigned> precision;
  app.add_option("--precision", precision, "Working precision in significant digits (>= 30)")
      ->check(CLI::Range(30u, 100000u));
  int exit_code = 0;

  // fixtures
  auto* fixtures = app.add_subcommand("fixtures", "Built-in figure tables");
  fixtures->require_subcommand(1);
  auto* fixtures_list = fixtures->add_subcommand("list", "List fixture names");
  fixtures_list->callback([] {
    for (const auto& f : ms::fixture_registry()) {
      std::cout << f.name << "\t" << (f.precision == ms::PrecisionClass::High ? "high" : "sketch")
                << "\t" << f.declared_triangles << "\n";
    }
  });
  std::string show_name, show_output;
  bool show_raw = false;
  auto* fixtures_show = fixtures->add_subcommand("show", "Print a fixture as a graph file");
  fixtures_show->add_option("name", show_name)->required();
  fixtures_show->add_flag("--raw", show_raw, "Print the verbatim table instead");
  fixtures_show->add_option("-o,--output", show_output);
  fixtures_show->callback([&] {
    configure_precision(precision, std::nullopt);
    if (show_raw) {
      emit(std::string(ms::fixture_text(show_name)), show_output);
    } else {
      emit(ms::format_graph(ms::load_fixture(show_name)), show_output);
    }
  });

  // solve
  std::string solve_template, solve_output, solve_tol;
  int solve_n = 0;
  double solve_noise = 0;
  std::uint64_t solve_seed = 1;
  bool solve_no_rigidity = false;
  auto* solve = app.add_subcommand("solve", "Solve the closure of a template at n");
  solve->add_option("--template", solve_template, "g1 or g2")->required();
  solve->add_option("--n", solve_n, "Number of copies")->required()->check(CLI::Range(3, 100000));
  solve->add_option("--tol", solve_tol, "Residual tolerance (default 10^(10-p))");
  solve->add_option("--perturb", solve_noise, "Uniform noise amplitude added to the start");
  solve->add_option("--seed", solve_seed, "Seed for --perturb");
  solve->add_flag("--no-rigidity", solve_no_rigidity, "Skip the singular value check");
  solve->add_option("-o,--output", solve_output, "Solved base graph file");
  solve->callback([&] {
    configure_precision(precision, std::nullopt);
    const ms::NamedTemplate t = ms::named_template(solve_template);
    ms::SolveOptions options;
    if (!solve_tol.empty()) options.tol = ms::parse_scalar(solve_tol);
    options.compute_rigidity = !solve_no_rigidity;
    auto init = t.linkage.initial_state();
    if (solve_noise > 0) {
      std::mt19937_64 rng(solve_seed);
      std::uniform_real_distribution<double> noise(-solve_noise, solve_noise);
      for (auto& x : init) x += noise(rng);
    }
    ms::SolveOptions anchor_options = options;
    if (solve_n != t.anchor_n) anchor_options.compute_rigidity = false;
    ms::SolveResult result = ms::solve(t.linkage, ms::RingSpec::for_n(t.anchor_n), init, anchor_options);
    if (solve_n != t.anchor_n) result = ms::continue_in_n(t.linkage, result, solve_n, options);
    ms::UnitGraph base = ms::mirror_close(t.linkage, result);
    const ms::AngleReadout readout = ms::extract_angles(t.linkage, result);
    for (const auto& [name, value] : readout.angles) base.meta["angle." + name] = ms::format_scalar(value, 20);
    base.meta["angle.GH"] = ms::format_scalar(readout.gh, 20);
    std::cout << "template " << t.linkage.name << "  n " << solve_n << "  iterations "
              << result.iterations << "  residual " << ms::format_scalar(result.residual_norm, 3);
    if (result.sigma_min >= 0) {
      std::cout << "  sigma_min " << ms::format_scalar(result.sigma_min, 6)
                << (result.rank_deficient ? " (rank deficient)" : "");
    }
    std::cout << "\n" << readout_text(readout, ms::find_reference(t.linkage.name, solve_n));
    if (!solve_output.empty()) ms::write_graph(base, solve_output);
  });

  // angles
  std::string angles_input;
  auto* angles = app.add_subcommand("angles", "Print the angle readout against reference values");
  angles->add_option("file", angles_input, "Graph file or fixture:NAME")->required();
  angles->callback([&] {
    const ms::UnitGraph g = load_input(angles_input, precision);
    std::cout << readout_text(ms::extract_angles(g), reference_for(g));
  });

  // assemble
  std::optional<int> ring_n, copies;
  std::string chain_spec, assemble_input, assemble_output;
  auto* assemble = app.add_subcommand("assemble", "Build a ring or a chain");
  auto* ring_opt = assemble->add_option("--ring", ring_n, "Ring of N copies")->check(CLI::Range(3, 100000));
  assemble->add_option("--copies", copies, "Only the first K copies (an arc)")->needs(ring_opt);
  auto* chain_opt = assemble->add_option(
      "--chain", chain_spec,
      "Comma-separated pieces; each a file or fixture:NAME, optionally prefixed by rev:, "
      "adapter: or mirror:");
  ring_opt->excludes(chain_opt);
  assemble->add_option("file", assemble_input, "Solved base graph (with --ring)");
  assemble->add_option("-o,--output", assemble_output)->required();
  assemble->callback([&] {
    ms::UnitGraph out;
    if (ring_n) {
      if (assemble_input.empty()) throw UsageError("--ring needs a base graph file");
      const ms::UnitGraph base = load_input(assemble_input, precision);
      ms::RingSpec spec = ms::RingSpec::for_n(*ring_n);
      spec.apex_x = ms::ring_apex(base).x;
      out = ms::ring_assemble(base, spec, copies);
    } else if (!chain_spec.empty()) {
      std::vector<ms::ChainPiece> pieces;
      for (const std::string& token : split(chain_spec, ',')) pieces.push_back(chain_piece(token, precision));
      if (pieces.empty()) throw UsageError("--chain needs at least one piece");
      out = ms::chain_assemble(pieces);
    } else {
      throw UsageError("assemble needs --ring N FILE or --chain SPEC");
    }
    std::cout << "vertices " << out.vertex_count() << "  edges " << out.edges.size()
              << "  triangles " << out.triangles.size() << "\n";
    ms::write_graph(out, assemble_output);
  });

  // adapter
  std::string adapter_input, adapter_output;
  bool adapter_mirror = false;
  auto* adapter = app.add_subcommand("adapter", "Build the parallel-rail adapter of a base graph");
  adapter->add_option("file", adapter_input, "Graph file or fixture:NAME")->required();
  adapter->add_flag("--mirror", adapter_mirror, "Reflect the adapter across BE");
  adapter->add_option("-o,--output", adapter_output)->required();
  adapter->callback([&] {
    ms::UnitGraph g = ms::make_adapter(load_input(adapter_input, precision));
    if (adapter_mirror) g = ms::mirror_adapter(g);
    const auto [r1, r2] = ms::rail_directions(g);
    std::cout << "rail cross product " << ms::format_scalar(ms::cross(r1, r2), 3) << "\n";
    ms::write_graph(g, adapter_output);
  });

  // verify
  std::string verify_input, verify_profile = "auto", verify_report;
  std::vector<std::string> verify_require;
  int verify_threads = 1;
  auto* verify = app.add_subcommand("verify", "Certify a graph");
  verify->add_option("file", verify_input, "Graph file or fixture:NAME")->required();
  verify->add_option("--profile", verify_profile, "auto, solved, fixture or sketch");
  verify->add_option("--report", verify_report, "Write the JSON report here");
  verify->add_option("--require", verify_require, "Verdicts to enforce (default: all)")->delimiter(',');
  verify->add_option("--threads", verify_threads)->check(CLI::Range(1, 256));
  verify->callback([&] {
    const ms::UnitGraph g = load_input(verify_input, precision);
    const ms::VerdictSet required = parse_requirements(verify_require);
    const ms::VerificationReport report = ms::verify(g, profile_for(verify_profile, g), verify_threads);
    std::cout << ms::report_text(report);
    if (!verify_report.empty()) ms::write_text_file(verify_report, ms::report_json(report));
    exit_code = required_exit_code(report, required);
  });

  // search
  std::string search_template, search_profile = "solved";
  std::vector<std::string> search_require;
  int search_from = 0, search_to = 0, search_threads = 1;
  auto* search = app.add_subcommand("search", "Minimal-n sweep");
  search->add_option("--template", search_template, "g1 or g2")->required();
  search->add_option("--from", search_from)->required()->check(CLI::Range(3, 100000));
  search->add_option("--to", search_to)->required()->check(CLI::Range(3, 100000));
  search->add_option("--profile", search_profile, "solved, fixture or sketch");
  search->add_option("--require", search_require, "Verdicts to enforce (default: all)")->delimiter(',');
  search->add_option("--threads", search_threads)->check(CLI::Range(1, 256));
  search->callback([&] {
    configure_precision(precision, std::nullopt);
    if (search_from > search_to) throw UsageError("--from must not exceed --to");
    ms::SearchOptions options;
    options.profile = profile_for(search_profile, {});
    options.criteria = parse_requirements(search_require);
    options.threads = search_threads;
    const ms::SearchResult result = ms::sweep_n(ms::named_template(search_template), search_from,
                                                search_to, options);
    std::cout << ms::search_table(result);
    if (result.minimal) {
      std::cout << *result.minimal << "\n";
    } else {
      exit_code = kExitNoPassingN;
    }
  });

  // svg
  std::string svg_input, svg_output;
  ms::SvgOptions svg_options;
  bool svg_plain = false;
  auto* svg = app.add_subcommand("svg", "Export an SVG drawing");
  svg->add_option("file", svg_input, "Graph file or fixture:NAME")->required();
  svg->add_option("-o,--output", svg_output)->required();
  svg->add_option("--insets", svg_options.insets, "Number of magnified views")->check(CLI::Range(0, 64));
  svg->add_option("--scale", svg_options.scale, "Pixels per unit")->check(CLI::PositiveNumber);
  svg->add_option("--stroke", svg_options.stroke, "Edge width in units")->check(CLI::PositiveNumber);
  svg->add_flag("--no-highlight", svg_plain, "Do not mark the near misses");
  svg->callback([&] {
    const ms::UnitGraph g = load_input(svg_input, precision);
    svg_options.highlight = !svg_plain;
    ms::write_text_file(svg_output, ms::export_svg(g, svg_options));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ms::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ms::ErrorCode::UnknownFixture:
      case ms::ErrorCode::ParseError:
      case ms::ErrorCode::VersionError:
        return kExitUsage;
      default:
        return kExitInternal;
    }
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return exit_code;
}
