// Copyright 2026 The talex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "talex/cli/commands.hpp"

#include <CLI11.hpp>

#include <map>

namespace talex::cli {

/// Parse argv and dispatch; returns the process exit code.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  RunConfig cfg;
  cfg.precision_bits = default_precision_from_env();
  std::string m_text = "1.2,0.4";
  std::string n_range = "1..5";
  std::vector<std::string> m_list;
  std::optional<std::size_t> root_index;
  std::string presentation = "two-gen";
  std::string format_text = "json";
  std::string method_text = "all";

  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};
  const std::map<std::string, MethodChoice> methods{{"fox", MethodChoice::fox},
                                                    {"theorem", MethodChoice::theorem},
                                                    {"prop32", MethodChoice::prop32},
                                                    {"all", MethodChoice::all}};

  CLI::App app{"Twisted Alexander polynomials of (-2,3,2n+1)-pretzel knots"};
  app.name("talex");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--precision-bits", cfg.precision_bits, "working precision in bits (64..4096)");
    sub->add_option("--format", format_text, "json | csv | text")
        ->check(CLI::IsMember({"json", "csv", "text"}, CLI::ignore_case));
  };

  CLI::App *roots = app.add_subcommand("roots", "list the roots s of r0(m, s)");
  roots->add_option("--n", cfg.n, "knot index n >= 1")->required();
  roots->add_option("--m", m_text, "meridian eigenvalue RE,IM")->required();
  add_common(roots);

  CLI::App *delta = app.add_subcommand("delta", "twisted Alexander polynomial at one root");
  delta->add_option("--n", cfg.n, "knot index n >= 1")->required();
  delta->add_option("--m", m_text, "meridian eigenvalue RE,IM")->required();
  delta->add_option("--method", method_text, "fox | theorem | prop32 | all")
      ->check(CLI::IsMember({"fox", "theorem", "prop32", "all"}, CLI::ignore_case));
  delta->add_option("--root-index", root_index, "index into the roots listing");
  delta->add_option("--presentation", presentation, "fox method: two-gen | three-gen")
      ->check(CLI::IsMember({"two-gen", "three-gen"}));
  delta->add_option("--remove", cfg.remove_generator, "fox method: generator whose column is removed");
  delta->add_option("--division-tolerance", cfg.division_tolerance, "relative remainder allowed in the fox division");
  add_common(delta);

  CLI::App *verify = app.add_subcommand("verify", "certify every nondegenerate root over a sweep");
  verify->add_option("--n-range", n_range, "A..B");
  verify->add_option("--m", m_list, "meridian eigenvalue RE,IM (repeatable)");
  verify->add_option("--perturb-s", cfg.perturb_s, "test hook: offset added to every root before checking");
  add_common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage;
  }

  try {
    cfg.format = formats.at(format_text);
    cfg.method = methods.at(method_text);
    cfg.root_index = root_index;
    cfg.three_gen = presentation == "three-gen";
    if (!roots->parsed() && !delta->parsed()) {
      std::tie(cfg.n_lo, cfg.n_hi) = parse_range(n_range);
    } else {
      cfg.m = parse_complex(m_text);
    }
    for (const auto &mt : m_list)
      cfg.m_values.push_back(parse_complex(mt));
    if (roots->parsed())
      return cmd_roots(cfg, out, err);
    if (delta->parsed())
      return cmd_delta(cfg, out, err);
    return cmd_verify(cfg, out, err);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const std::invalid_argument &e) {
    err << "usage error: " << e.what() << "\n";
    return exit_code::usage;
  }
}

} // namespace talex::cli
