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

#ifndef IFCKIT_MUTANTS_HPP_
#define IFCKIT_MUTANTS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "ifckit/interp.hpp"
#include "ifckit/lio.hpp"

namespace ifc {

// Seeded faults in the core operations, used as negative controls.
enum class Mutant : std::uint8_t {
  None,
  ProjectIgnoresGuard,
  BindSwapsBranches,
  UnlabelNoRaise,
  ToLabeledNoRestore,
  ToLabeledSkipsCheck,
  LabelOfReturnsBottom,
};

const char* mutant_name(Mutant m);
std::optional<Mutant> mutant_from_name(std::string_view name);
// Every mutant except None.
const std::vector<Mutant>& all_mutants();

using Projection = const Value& (*)(Label observer, const FacTree& f);

// The implementation of each interface under mutant m; the correct one when
// m does not touch that interface.
const MultefBackend& multef_backend(Mutant m);
const LioSemantics& lio_semantics(Mutant m);
Projection projection(Mutant m);

}  // namespace ifc

#endif  // IFCKIT_MUTANTS_HPP_
