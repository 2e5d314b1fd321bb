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

#ifndef IFCKIT_FACETS_HPP_
#define IFCKIT_FACETS_HPP_

#include <functional>

#include "ifckit/value.hpp"

namespace ifc {

class Univ;

namespace facets {

using Continuation = std::function<FacTree(const Value&)>;
using StdContinuation = std::function<StdFac(const Value&)>;

inline FacTree fac_return(Value v) { return FacTree::leaf(std::move(v)); }

inline FacTree fac_facet(Label guard, FacTree priv, FacTree pub) {
  return FacTree::node(guard, std::move(priv), std::move(pub));
}

// Applies k at every leaf; the facet nodes above the leaves are kept.
FacTree fac_bind(const FacTree& f, const Continuation& k);

// What f looks like to an observer: at each node the private branch is taken
// iff the guard flows to the observer.
const Value& project(Label observer, const FacTree& f);

// Projections of f0 and f1 at observer are equivalent at type u.
bool fac_equiv(Label observer, const Univ& u, const FacTree& f0, const FacTree& f1);

// Facet-erasing semantics.
inline StdFac std_return(Value v) { return StdFac::just(std::move(v)); }
inline StdFac std_facet(Label, const StdFac&, const StdFac&) { return StdFac::nothing(); }
StdFac std_bind(const StdFac& f, const StdContinuation& k);

}  // namespace facets
}  // namespace ifc

#endif  // IFCKIT_FACETS_HPP_
