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

#ifndef IFCKIT_INTERP_HPP_
#define IFCKIT_INTERP_HPP_

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ifckit/lio.hpp"
#include "ifckit/term.hpp"

namespace ifc {

// The Multef interface record. Faceted values are opaque Values of the
// backend's carrier kind; the interpreter never looks inside them.
class MultefBackend {
 public:
  using Cont = std::function<Value(const Value&)>;

  virtual ~MultefBackend() = default;
  virtual std::string_view name() const = 0;
  virtual Value ret(Value v) const = 0;
  virtual Value facet(Label guard, const Value& priv, const Value& pub) const = 0;
  virtual Value bind(const Value& m, const Cont& k) const = 0;

  // Facet trees.
  static const MultefBackend& secure();
  // Facet-erasing: carrier is just/nothing.
  static const MultefBackend& standard();
};

using ValueEnv = std::vector<std::pair<std::string, Value>>;

// Big-step evaluation of a well-typed facets-family or neutral term.
Value eval_facets(const MultefBackend& backend, const Term& t, const ValueEnv& inputs);

// Evaluation of the pure fragment of an LIO-family term. Lio-typed results
// are deferred computations; run them with lio::run under the same `sem`.
Value eval_lio(const Term& t, const ValueEnv& inputs,
               const LioSemantics& sem = LioSemantics::standard());

}  // namespace ifc

#endif  // IFCKIT_INTERP_HPP_
