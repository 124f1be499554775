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

#include "opacity/document.hh"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <set>

#include <json.hpp>

#include "opacity/errors.hh"

namespace opacity {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ParseError(field + ": " + message, field);
}

void expect_object(const json& j, const std::string& field) {
  if (!j.is_object()) fail(field, "expected an object");
}

void expect_keys(const json& j, const std::string& field,
                 std::initializer_list<std::string_view> required,
                 std::initializer_list<std::string_view> optional) {
  expect_object(j, field);
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    auto known = [&key](std::initializer_list<std::string_view> keys) {
      return std::find(keys.begin(), keys.end(), key) != keys.end();
    };
    if (!known(required) && !known(optional)) fail(field + "." + key, "unknown field");
  }
  for (std::string_view key : required)
    if (!j.contains(key)) fail(field + "." + std::string(key), "missing required field");
}

long long natural(const json& j, const std::string& field) {
  if (!j.is_number_integer()) fail(field, "expected a non-negative integer");
  long long v = j.get<long long>();
  if (v < 0) fail(field, "expected a non-negative integer, got " + std::to_string(v));
  return v;
}

int small_natural(const json& j, const std::string& field) {
  long long v = natural(j, field);
  if (v > std::numeric_limits<int>::max()) fail(field, "value too large");
  return static_cast<int>(v);
}

std::string string_field(const json& j, const std::string& field) {
  if (!j.is_string()) fail(field, "expected a string");
  return j.get<std::string>();
}

std::map<std::string, int> weight_map(const json& j, const std::string& field) {
  expect_object(j, field);
  std::map<std::string, int> out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out[it.key()] = small_natural(it.value(), field + "." + it.key());
  return out;
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

NetDocument parse_net_file(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is one past the offending character.
    std::size_t line = line_of(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("line " + std::to_string(line) + ": malformed JSON: " + e.what(), "", line);
  }

  NetDocument doc;
  expect_keys(root, "document", {"schema_version", "places", "transitions"},
              {"secret", "options"});
  doc.schema_version = string_field(root["schema_version"], "schema_version");
  if (doc.schema_version != kSchemaVersion)
    fail("schema_version", "unsupported version '" + doc.schema_version + "'");

  const json& places = root["places"];
  if (!places.is_array()) fail("places", "expected an array");
  for (std::size_t i = 0; i < places.size(); ++i) {
    const std::string field = "places[" + std::to_string(i) + "]";
    const json& p = places[i];
    expect_keys(p, field, {"id"}, {"initial_tokens"});
    NetDocument::Place place;
    place.id = string_field(p["id"], field + ".id");
    if (p.contains("initial_tokens"))
      place.initial_tokens = small_natural(p["initial_tokens"], field + ".initial_tokens");
    doc.places.push_back(std::move(place));
  }

  const json& transitions = root["transitions"];
  if (!transitions.is_array()) fail("transitions", "expected an array");
  for (std::size_t i = 0; i < transitions.size(); ++i) {
    const std::string field = "transitions[" + std::to_string(i) + "]";
    const json& t = transitions[i];
    expect_keys(t, field, {"id", "label"}, {"pre", "post"});
    NetDocument::Transition tr;
    tr.id = string_field(t["id"], field + ".id");
    const json& label = t["label"];
    if (!label.is_null()) {
      tr.label = string_field(label, field + ".label");
      if (tr.label->empty())
        fail(field + ".label", "empty label; use null for unobservable transitions");
    }
    if (t.contains("pre")) tr.pre = weight_map(t["pre"], field + ".pre");
    if (t.contains("post")) tr.post = weight_map(t["post"], field + ".post");
    doc.transitions.push_back(std::move(tr));
  }

  if (root.contains("secret")) {
    const json& secret = root["secret"];
    if (!secret.is_array()) fail("secret", "expected an array of markings");
    for (std::size_t i = 0; i < secret.size(); ++i)
      doc.secret.push_back(weight_map(secret[i], "secret[" + std::to_string(i) + "]"));
  }

  if (root.contains("options")) {
    const json& o = root["options"];
    expect_keys(o, "options", {}, {"max_states", "max_token", "depth"});
    if (o.contains("max_states") && !o["max_states"].is_null()) {
      doc.options.max_states = static_cast<std::size_t>(natural(o["max_states"], "options.max_states"));
      if (*doc.options.max_states == 0) fail("options.max_states", "must be at least 1");
    }
    if (o.contains("max_token") && !o["max_token"].is_null())
      doc.options.max_token = small_natural(o["max_token"], "options.max_token");
    if (o.contains("depth") && !o["depth"].is_null())
      doc.options.depth = static_cast<std::size_t>(natural(o["depth"], "options.depth"));
  }
  return doc;
}

std::string serialize(const NetDocument& doc) {
  json root;
  root["schema_version"] = doc.schema_version;
  root["places"] = json::array();
  for (const auto& p : doc.places)
    root["places"].push_back({{"id", p.id}, {"initial_tokens", p.initial_tokens}});
  root["transitions"] = json::array();
  for (const auto& t : doc.transitions) {
    json jt;
    jt["id"] = t.id;
    jt["label"] = t.label ? json(*t.label) : json(nullptr);
    jt["pre"] = json::object();
    for (const auto& [p, w] : t.pre) jt["pre"][p] = w;
    jt["post"] = json::object();
    for (const auto& [p, w] : t.post) jt["post"][p] = w;
    root["transitions"].push_back(std::move(jt));
  }
  root["secret"] = json::array();
  for (const auto& m : doc.secret) {
    json jm = json::object();
    for (const auto& [p, n] : m) jm[p] = n;
    root["secret"].push_back(std::move(jm));
  }
  json options = json::object();
  if (doc.options.max_states) options["max_states"] = *doc.options.max_states;
  if (doc.options.max_token) options["max_token"] = *doc.options.max_token;
  if (doc.options.depth) options["depth"] = *doc.options.depth;
  root["options"] = std::move(options);
  return root.dump(2) + "\n";
}

Model to_model(const NetDocument& doc) {
  Model model;
  PetriNet& net = model.lpn.net;
  std::set<std::string> seen;
  for (const auto& p : doc.places) {
    if (!seen.insert(p.id).second) throw SemanticError("duplicate place id '" + p.id + "'");
    net.places.push_back(p.id);
  }
  seen.clear();
  for (const auto& t : doc.transitions) {
    if (!seen.insert(t.id).second) throw SemanticError("duplicate transition id '" + t.id + "'");
    net.transitions.push_back(t.id);
  }

  const std::size_t m = net.place_count();
  const std::size_t n = net.transition_count();
  net.pre.assign(m, std::vector<int>(n, 0));
  net.post.assign(m, std::vector<int>(n, 0));

  auto place_of = [&net](const std::string& id, const std::string& where) {
    auto p = net.place_index(id);
    if (!p) throw SemanticError(where + " refers to undeclared place '" + id + "'");
    return *p;
  };

  for (TransitionIndex t = 0; t < n; ++t) {
    const auto& decl = doc.transitions[t];
    for (const auto& [id, w] : decl.pre) net.pre[place_of(id, "transition " + decl.id)][t] = w;
    for (const auto& [id, w] : decl.post) net.post[place_of(id, "transition " + decl.id)][t] = w;
    if (!decl.label) {
      model.lpn.labeling.push_back(kEpsilon);
      continue;
    }
    auto e = model.lpn.event_index(*decl.label);
    if (!e) {
      model.lpn.alphabet.push_back(*decl.label);
      e = static_cast<EventId>(model.lpn.alphabet.size() - 1);
    }
    model.lpn.labeling.push_back(*e);
  }

  std::vector<int> initial(m, 0);
  for (PlaceIndex p = 0; p < m; ++p) initial[p] = doc.places[p].initial_tokens;
  model.lpn.initial = Marking(std::move(initial));

  for (std::size_t i = 0; i < doc.secret.size(); ++i) {
    std::vector<int> tokens(m, 0);
    for (const auto& [id, count] : doc.secret[i])
      tokens[place_of(id, "secret marking " + std::to_string(i))] = count;
    model.secret.members.insert(Marking(std::move(tokens)));
  }
  return model;
}

NetDocument from_model(const LabeledPetriNet& lpn, const Secret& secret) {
  NetDocument doc;
  const PetriNet& net = lpn.net;
  for (PlaceIndex p = 0; p < net.place_count(); ++p) doc.places.push_back({net.places[p], lpn.initial[p]});
  for (TransitionIndex t = 0; t < net.transition_count(); ++t) {
    NetDocument::Transition decl;
    decl.id = net.transitions[t];
    if (lpn.labeling[t] != kEpsilon) decl.label = lpn.label_name(lpn.labeling[t]);
    for (PlaceIndex p = 0; p < net.place_count(); ++p) {
      if (net.pre[p][t]) decl.pre[net.places[p]] = net.pre[p][t];
      if (net.post[p][t]) decl.post[net.places[p]] = net.post[p][t];
    }
    doc.transitions.push_back(std::move(decl));
  }
  for (const Marking& m : secret.members) {
    std::map<std::string, int> sparse;
    for (PlaceIndex p = 0; p < m.size(); ++p)
      if (m[p]) sparse[net.places[p]] = m[p];
    doc.secret.push_back(std::move(sparse));
  }
  return doc;
}

}  // namespace opacity
