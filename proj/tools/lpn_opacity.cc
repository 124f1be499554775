// Copyright 2026 The lpn-opacity Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// lpn-opacity: decide infinite-step, K-step and current-state opacity of a
// bounded labeled Petri net.
//
//   lpn-opacity check  net.json [--property infinite|k|current] [--k N]
//   lpn-opacity oracle net.json [--property ...] [--k N] [--depth N]
//   lpn-opacity export net.json --dot rg|brg|observer|estimator|tw|ktw [--k N] [--out path]
//
// Common flags: --max-states N, --max-token N, --format text|json.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "opacity/commands.hh"
#include "opacity/errors.hh"

namespace {

using opacity::CommandResult;
using opacity::ExitCode;

struct Flags {
  std::string file;
  std::string property = "infinite";
  std::size_t k = 0;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> max_states;
  std::optional<int> max_token;
  std::string format = "text";
  std::string artifact;
  std::string out;
};

int emit(const CommandResult& r, const std::string& format) {
  if (format == "json")
    std::cout << r.report.dump(2) << "\n";
  else if (r.exit_code == static_cast<int>(ExitCode::kInputError) ||
           r.exit_code == static_cast<int>(ExitCode::kBoundExceeded))
    std::cerr << r.text;
  else
    std::cout << r.text;
  return r.exit_code;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

opacity::RunSettings settings_from(const Flags& f) {
  opacity::RunSettings s;
  if (f.property == "k")
    s.property = opacity::Property::k_step(f.k);
  else if (f.property == "current")
    s.property = opacity::Property::current_state();
  else
    s.property = opacity::Property::infinite();
  // export --dot ktw reads K from here regardless of --property.
  s.property.k = f.property == "current" ? 0 : f.k;
  s.depth = f.depth;
  s.max_states = f.max_states;
  s.max_token = f.max_token;
  return s;
}

int run(const std::string& command, const Flags& f) {
  const std::optional<std::string> text = read_file(f.file);
  if (!text)
    return emit(opacity::error_result(command, ExitCode::kInputError, "IoError",
                                      "cannot read '" + f.file + "'"),
                f.format);
  opacity::NetDocument doc;
  try {
    doc = opacity::parse_net_file(*text);
  } catch (const std::exception& e) {
    return emit(opacity::result_from_exception(command, e), f.format);
  }

  const opacity::RunSettings settings = settings_from(f);
  if (command == "check") return emit(opacity::cmd_check(doc, settings), f.format);
  if (command == "oracle") return emit(opacity::cmd_oracle(doc, settings), f.format);

  const opacity::ExportResult r =
      opacity::cmd_export(doc, *opacity::parse_artifact(f.artifact), settings);
  if (r.exit_code != 0) {
    std::cerr << r.error;
    return r.exit_code;
  }
  if (f.out.empty()) {
    std::cout << r.dot;
  } else {
    std::ofstream out(f.out, std::ios::binary);
    if (!(out << r.dot)) {
      std::cerr << "error (IoError): cannot write '" << f.out << "'\n";
      return static_cast<int>(ExitCode::kInputError);
    }
  }
  return 0;
}

void add_common(CLI::App* sub, Flags& f) {
  sub->add_option("file", f.file, "Net document (JSON)")->required();
  sub->add_option("--max-states", f.max_states, "Cap on explored states")
      ->check(CLI::PositiveNumber);
  sub->add_option("--max-token", f.max_token, "Cap on tokens per place")
      ->check(CLI::NonNegativeNumber);
  sub->add_option("--k", f.k, "K for K-step opacity or the ktw artifact");
}

void add_property(CLI::App* sub, Flags& f) {
  sub->add_option("--property", f.property, "Opacity notion")
      ->check(CLI::IsMember({"infinite", "k", "current"}));
  sub->add_option("--format", f.format, "Report format")->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Opacity verification for bounded labeled Petri nets"};
  app.require_subcommand(1);
  Flags f;

  CLI::App* check = app.add_subcommand("check", "Decide opacity with the two-way observer");
  add_common(check, f);
  add_property(check, f);

  CLI::App* oracle = app.add_subcommand("oracle", "Decide opacity by bounded enumeration");
  add_common(oracle, f);
  add_property(oracle, f);
  oracle->add_option("--depth", f.depth, "Observation length bound");

  CLI::App* exp = app.add_subcommand("export", "Write a Graphviz rendering");
  add_common(exp, f);
  exp->add_option("--dot", f.artifact, "Artifact to render")
      ->required()
      ->check(CLI::IsMember({"rg", "brg", "observer", "estimator", "tw", "ktw"}));
  exp->add_option("--out", f.out, "Output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(ExitCode::kInputError);
  }

  if (check->parsed()) return run("check", f);
  if (oracle->parsed()) return run("oracle", f);
  return run("export", f);
}
