//  Copyright 2026 The ifckit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include "ifckit/facets.hpp"

#include "ifckit/universe.hpp"

namespace ifc::facets {

FacTree fac_bind(const FacTree& f, const Continuation& k) {
  if (f.is_leaf()) return k(f.value());
  return FacTree::node(f.guard(), fac_bind(f.priv(), k), fac_bind(f.pub(), k));
}

const Value& project(Label observer, const FacTree& f) {
  const LatticeSpec* spec = observer.lattice();
  if (spec == nullptr) throw HarnessError("projection at a label with no lattice");
  const FacTree* node = &f;
  while (!node->is_leaf()) {
    node = spec->leq(node->guard(), observer) ? &node->priv() : &node->pub();
  }
  return node->value();
}

bool fac_equiv(Label observer, const Univ& u, const FacTree& f0, const FacTree& f1) {
  const LatticeSpec* spec = observer.lattice();
  if (spec == nullptr) throw HarnessError("equivalence at a label with no lattice");
  return equiv(*spec, observer, u, project(observer, f0), project(observer, f1));
}

StdFac std_bind(const StdFac& f, const StdContinuation& k) {
  if (!f.is_just()) return StdFac::nothing();
  return k(f.value());
}

}  // namespace ifc::facets
