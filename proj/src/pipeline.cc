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

#include "opacity/pipeline.hh"

#include "opacity/errors.hh"
#include "opacity/format.hh"

namespace opacity {

Analysis analyze(const LabeledPetriNet& lpn, const Secret& secret, const Property& property,
                 const BoundConfig& cfg) {
  require_acyclic_unobservable(lpn);
  Analysis a;
  a.brg = build_brg(lpn, cfg);

  a.a1 = check_assumption_a1(lpn, a.brg, secret, cfg);
  if (!a.a1.holds()) {
    std::string what = "assumption A1 fails: secret basis markings reach non-secret markings";
    for (const auto& v : a.a1.violations)
      what += "\n  " + format_marking(lpn.net, v.basis_marking) + " reaches " +
              format_marking(lpn.net, v.escaped);
    throw A1NotVerified(what);
  }
  a.labeling = secret_basis_partition(a.brg, secret);
  attest_a1(a.labeling, a.a1);

  a.observer = observer(a.brg.graph, a.brg.graph.initial());
  const Lts reversed = reverse(a.brg.graph);
  a.estimator = observer(reversed, reversed.initial());

  switch (property.kind) {
    case Property::Kind::kInfinite:
      a.tw = build_modified_tw(a.observer, a.estimator);
      a.verdict = check_infinite_step(a.tw, a.brg, a.labeling);
      break;
    case Property::Kind::kKStep:
    case Property::Kind::kCurrentState:
      a.tw = build_k_reduced_tw(a.observer, a.estimator, property.k);
      a.verdict = check_k_step(a.tw, a.brg, a.labeling);
      break;
  }
  a.verdict.property = property;
  if (!a.verdict.opaque) a.witnesses = extract_witness(a.verdict, a.tw);
  return a;
}

}  // namespace opacity
