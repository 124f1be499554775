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

#include "opacity/commands.hh"

#include <sstream>

#include "opacity/automata.hh"
#include "opacity/basis.hh"
#include "opacity/dot.hh"
#include "opacity/errors.hh"
#include "opacity/format.hh"
#include "opacity/oracle.hh"
#include "opacity/pipeline.hh"

namespace opacity {

namespace {

using json = nlohmann::ordered_json;

json word_json(const Word& w) { return json(w); }

json markings_json(const PetriNet& net, const MarkingSet& markings) {
  json out = json::array();
  for (const Marking& m : markings) out.push_back(format_marking(net, m));
  return out;
}

json state_set_json(const PetriNet& net, const Lts& lts, const StateSet& states) {
  json out = json::array();
  for (StateId s : states) out.push_back(format_marking(net, lts.payload(s)));
  return out;
}

json property_json(const Property& p) {
  switch (p.kind) {
    case Property::Kind::kInfinite: return "infinite";
    case Property::Kind::kKStep: return "k";
    case Property::Kind::kCurrentState: return "current";
  }
  return nullptr;
}

std::string quoted(const Word& w) { return "\"" + format_word(w) + "\""; }

std::string tw_name(const TwState& q) {
  return "(Xo" + std::to_string(q.first) + ", Xe" + std::to_string(q.second) + ")";
}

json warnings_json(const LabeledPetriNet& lpn) {
  json out = json::array();
  for (const auto& w : validate_net(lpn).warnings) out.push_back(w);
  return out;
}

int verdict_code(const OpacityVerdict& v) {
  return static_cast<int>(v.opaque ? ExitCode::kOpaque : ExitCode::kNotOpaque);
}

}  // namespace

BoundConfig bound_config(const NetDocument& doc, const RunSettings& settings) {
  BoundConfig cfg;
  if (doc.options.max_states) cfg.max_states = *doc.options.max_states;
  if (settings.max_states) cfg.max_states = *settings.max_states;
  cfg.max_token = settings.max_token ? settings.max_token : doc.options.max_token;
  return cfg;
}

CommandResult error_result(std::string_view command, ExitCode code, std::string_view kind,
                           const std::string& message) {
  CommandResult r;
  r.exit_code = static_cast<int>(code);
  r.report["command"] = command;
  r.report["exit_code"] = r.exit_code;
  r.report["error"] = {{"kind", kind}, {"message", message}};
  r.text = "error (" + std::string(kind) + "): " + message + "\n";
  return r;
}

CommandResult result_from_exception(std::string_view command, const std::exception& e) {
  if (dynamic_cast<const BoundExceeded*>(&e))
    return error_result(command, ExitCode::kBoundExceeded, "BoundExceeded", e.what());
  std::string_view kind = "Error";
  if (dynamic_cast<const ParseError*>(&e)) kind = "ParseError";
  else if (dynamic_cast<const SemanticError*>(&e)) kind = "SemanticError";
  else if (dynamic_cast<const InvalidNet*>(&e)) kind = "InvalidNet";
  else if (dynamic_cast<const CyclicUnobservableSubnet*>(&e)) kind = "CyclicUnobservableSubnet";
  else if (dynamic_cast<const A1NotVerified*>(&e)) kind = "A1NotVerified";
  return error_result(command, ExitCode::kInputError, kind, e.what());
}

CommandResult cmd_check(const NetDocument& doc, const RunSettings& settings) {
  try {
    const Model model = to_model(doc);
    const PetriNet& net = model.lpn.net;
    const Analysis a = analyze(model.lpn, model.secret, settings.property,
                               bound_config(doc, settings));
    const Lts& brg = a.brg.graph;

    CommandResult r;
    r.exit_code = verdict_code(a.verdict);
    json& rep = r.report;
    rep["command"] = "check";
    rep["property"] = property_json(settings.property);
    if (settings.property.bounded()) rep["k"] = settings.property.k;
    rep["opaque"] = a.verdict.opaque;
    rep["exit_code"] = r.exit_code;
    rep["sizes"] = {{"basis_markings", brg.state_count()},
                    {"brg_edges", brg.edge_count()},
                    {"observer_states", a.observer.state_count()},
                    {"estimator_states", a.estimator.state_count()},
                    {"tw_states", a.tw.state_count()},
                    {"tw_edges", a.tw.edges().size()}};
    rep["violations"] = json::array();

    std::ostringstream os;
    os << "property: " << settings.property.name() << " opacity\n"
       << "verdict: " << (a.verdict.opaque ? "OPAQUE" : "NOT OPAQUE") << "\n"
       << "basis reachability graph: " << brg.state_count() << " basis markings, "
       << brg.edge_count() << " edges\n"
       << "observer: " << a.observer.state_count() << " states; estimator: "
       << a.estimator.state_count() << " states\n"
       << "two-way observer: " << a.tw.state_count() << " states, " << a.tw.edges().size()
       << " edges\n";

    for (std::size_t i = 0; i < a.verdict.violations.size(); ++i) {
      const Violation& v = a.verdict.violations[i];
      const Witness& w = a.witnesses.at(i);
      const StateSet& first = a.observer.state(v.state->first);
      const StateSet& second = a.estimator.state(v.state->second);
      rep["violations"].push_back(
          {{"state", tw_name(*v.state)},
           {"observer_set", state_set_json(net, brg, first)},
           {"estimator_set", state_set_json(net, brg, second)},
           {"intersection", markings_json(net, v.markings)},
           {"observer_word", word_json(w.observer_word)},
           {"estimator_word", word_json(w.estimator_word)},
           {"revealed_suffix", word_json(w.revealed_suffix)}});
      os << "violation " << tw_name(*v.state) << " = (" << format_state_set(net, brg, first)
         << ", " << format_state_set(net, brg, second) << ")\n"
         << "  intersection " << format_marking_set(net, v.markings) << " is entirely secret\n"
         << "  prefix u = " << quoted(w.observer_word)
         << " reveals the secret; suffix reverse(v) = " << quoted(w.revealed_suffix)
         << " extends it\n";
    }
    rep["warnings"] = warnings_json(model.lpn);
    for (const auto& warning : rep["warnings"]) os << "warning: " << warning.get<std::string>() << "\n";
    r.text = os.str();
    return r;
  } catch (const std::exception& e) {
    return result_from_exception("check", e);
  }
}

CommandResult cmd_oracle(const NetDocument& doc, const RunSettings& settings) {
  try {
    const Model model = to_model(doc);
    const PetriNet& net = model.lpn.net;
    const BoundConfig cfg = bound_config(doc, settings);
    const Lts rg = build_rg(model.lpn, cfg);
    std::size_t depth = settings.depth ? *settings.depth
                        : doc.options.depth ? *doc.options.depth
                                            : default_oracle_depth(rg, settings.property);
    const OpacityVerdict v = brute_force(model.lpn, model.secret, settings.property, depth, cfg);

    CommandResult r;
    r.exit_code = verdict_code(v);
    json& rep = r.report;
    rep["command"] = "oracle";
    rep["property"] = property_json(settings.property);
    if (settings.property.bounded()) rep["k"] = settings.property.k;
    rep["opaque"] = v.opaque;
    rep["exit_code"] = r.exit_code;
    rep["certified_depth"] = depth;
    rep["sizes"] = {{"reachable_markings", rg.state_count()}, {"rg_edges", rg.edge_count()}};
    rep["violations"] = json::array();

    std::ostringstream os;
    os << "property: " << settings.property.name() << " opacity (definition-level check)\n"
       << "verdict: " << (v.opaque ? "OPAQUE" : "NOT OPAQUE");
    if (v.opaque) os << " (certified up to depth " << depth << ")";
    os << "\nreachability graph: " << rg.state_count() << " markings, " << rg.edge_count()
       << " edges\n";
    for (const Violation& viol : v.violations) {
      rep["violations"].push_back({{"observation", word_json(viol.prefix)},
                                   {"secret_consistent", markings_json(net, viol.markings)},
                                   {"suffix", word_json(viol.suffix)}});
      os << "violation after " << quoted(viol.prefix) << ": secret markings "
         << format_marking_set(net, viol.markings) << " generate " << quoted(viol.suffix)
         << ", no non-secret consistent marking does\n";
    }

    json warnings = warnings_json(model.lpn);
    for (const Marking& m : model.secret.members)
      if (!rg.find(m))
        warnings.push_back("secret marking " + format_marking(net, m) + " is not reachable");
    rep["warnings"] = warnings;
    for (const auto& warning : warnings) os << "warning: " << warning.get<std::string>() << "\n";
    r.text = os.str();
    return r;
  } catch (const std::exception& e) {
    return result_from_exception("oracle", e);
  }
}

std::optional<Artifact> parse_artifact(std::string_view name) {
  if (name == "rg") return Artifact::kRg;
  if (name == "brg") return Artifact::kBrg;
  if (name == "observer") return Artifact::kObserver;
  if (name == "estimator") return Artifact::kEstimator;
  if (name == "tw") return Artifact::kTw;
  if (name == "ktw") return Artifact::kKtw;
  return std::nullopt;
}

ExportResult cmd_export(const NetDocument& doc, Artifact artifact, const RunSettings& settings) {
  ExportResult out;
  try {
    const Model model = to_model(doc);
    const PetriNet& net = model.lpn.net;
    const BoundConfig cfg = bound_config(doc, settings);
    switch (artifact) {
      case Artifact::kRg:
        out.dot = lts_to_dot(build_rg(model.lpn, cfg), net, "rg");
        break;
      case Artifact::kBrg:
        out.dot = lts_to_dot(build_brg(model.lpn, cfg).graph, net, "brg");
        break;
      case Artifact::kObserver:
      case Artifact::kEstimator: {
        const Brg brg = build_brg(model.lpn, cfg);
        if (artifact == Artifact::kObserver) {
          out.dot = dfa_to_dot(observer(brg.graph, brg.graph.initial()), brg.graph, net, "observer");
        } else {
          const Lts reversed = reverse(brg.graph);
          out.dot = dfa_to_dot(observer(reversed, reversed.initial()), brg.graph, net, "estimator");
        }
        break;
      }
      case Artifact::kTw:
      case Artifact::kKtw: {
        const Property p = artifact == Artifact::kTw ? Property::infinite()
                                                     : Property::k_step(settings.property.k);
        const Analysis a = analyze(model.lpn, model.secret, p, cfg);
        const bool has_secret = !model.secret.members.empty();
        out.dot = tw_to_dot(a.tw, a.brg.graph, net, artifact == Artifact::kTw ? "tw" : "ktw",
                            has_secret ? &a.labeling : nullptr);
        break;
      }
    }
  } catch (const std::exception& e) {
    CommandResult r = result_from_exception("export", e);
    out.exit_code = r.exit_code;
    out.error = r.text;
    out.dot.clear();
  }
  return out;
}

}  // namespace opacity
