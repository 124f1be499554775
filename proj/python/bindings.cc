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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>

#include "opacity/commands.hh"
#include "opacity/document.hh"
#include "opacity/errors.hh"

namespace py = pybind11;

namespace {

opacity::RunSettings settings(const std::string& property, std::size_t k,
                              std::optional<std::size_t> depth,
                              std::optional<std::size_t> max_states, std::optional<int> max_token) {
  opacity::RunSettings s;
  if (property == "infinite")
    s.property = opacity::Property::infinite();
  else if (property == "k")
    s.property = opacity::Property::k_step(k);
  else if (property == "current")
    s.property = opacity::Property::current_state();
  else
    throw py::value_error("property must be 'infinite', 'k' or 'current'");
  s.property.k = property == "current" ? 0 : k;
  s.depth = depth;
  s.max_states = max_states;
  s.max_token = max_token;
  return s;
}

// Runs a report-producing command; parse failures become reports too, so the
// exit-code contract is the same as the command-line tool's.
template <typename Command>
std::string report(const char* name, const std::string& text, const opacity::RunSettings& s,
                   Command command) {
  opacity::CommandResult r;
  try {
    r = command(opacity::parse_net_file(text), s);
  } catch (const std::exception& e) {
    r = opacity::result_from_exception(name, e);
  }
  return r.report.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Opacity verification for bounded labeled Petri nets";

  py::register_exception<opacity::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<opacity::SemanticError>(m, "SemanticError", PyExc_ValueError);

  m.def(
      "check",
      [](const std::string& text, const std::string& property, std::size_t k,
         std::optional<std::size_t> max_states, std::optional<int> max_token) {
        return report("check", text, settings(property, k, std::nullopt, max_states, max_token),
                      opacity::cmd_check);
      },
      py::arg("text"), py::arg("property") = "infinite", py::arg("k") = 0,
      py::arg("max_states") = py::none(), py::arg("max_token") = py::none(),
      "Two-way observer verdict; returns the JSON report.");

  m.def(
      "oracle",
      [](const std::string& text, const std::string& property, std::size_t k,
         std::optional<std::size_t> depth, std::optional<std::size_t> max_states,
         std::optional<int> max_token) {
        return report("oracle", text, settings(property, k, depth, max_states, max_token),
                      opacity::cmd_oracle);
      },
      py::arg("text"), py::arg("property") = "infinite", py::arg("k") = 0,
      py::arg("depth") = py::none(), py::arg("max_states") = py::none(),
      py::arg("max_token") = py::none(),
      "Bounded definition-level verdict; returns the JSON report.");

  m.def(
      "export_dot",
      [](const std::string& text, const std::string& artifact, std::size_t k) {
        auto which = opacity::parse_artifact(artifact);
        if (!which) throw py::value_error("unknown artifact '" + artifact + "'");
        const opacity::ExportResult r = opacity::cmd_export(
            opacity::parse_net_file(text), *which,
            settings("k", k, std::nullopt, std::nullopt, std::nullopt));
        if (r.exit_code != 0) throw std::runtime_error(r.error);
        return r.dot;
      },
      py::arg("text"), py::arg("artifact"), py::arg("k") = 0,
      "Graphviz text for rg, brg, observer, estimator, tw or ktw.");

  m.def(
      "normalize", [](const std::string& text) { return opacity::serialize(opacity::parse_net_file(text)); },
      py::arg("text"), "Parses a net document and writes it back in canonical form.");
}
