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

#ifndef IFCKIT_TERMGEN_HPP_
#define IFCKIT_TERMGEN_HPP_

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "ifckit/interp.hpp"
#include "ifckit/rng.hpp"
#include "ifckit/term.hpp"

namespace ifc {

// Relative production weights, indexed by Op.
struct GenWeights {
  std::array<unsigned, kOpCount> op;
  GenWeights();
  unsigned& operator[](Op o) { return op[static_cast<std::size_t>(o)]; }
  unsigned operator[](Op o) const { return op[static_cast<std::size_t>(o)]; }
};

// Random well-typed term of type `out` over `inputs`, at most `budget` AST
// nodes. Throws HarnessError if no term of that type fits the budget.
// Binders are named v0, v1, ... by nesting level.
Term gen_term(Rng& rng, const LatticeSpec& spec, const TypeEnv& inputs, const Univ& out,
              std::size_t budget, const GenWeights& weights = GenWeights());

// Smallest term size of type `out` over `inputs`, or 0 if there is none.
std::size_t min_term_size(const LatticeSpec& spec, const TypeEnv& inputs, const Univ& out);

struct EnumLimits {
  std::size_t max_depth = 5;
  // Cap on the number of terms materialized per (type, scope, depth) cell.
  std::size_t max_terms = 2'000'000;
  // Whether nat joins the type set when no input or output mentions it.
  bool implicit_nat = true;
};

// Every well-typed term of type `out` up to nesting depth `depth` (literals
// and variables have depth 0), once each,
// in a fixed order. Literals range over {false, true} and {0, 1}, throw uses
// the message "e", and intermediate types (scrutinees, bound monadic values)
// are drawn from the type set of the grammar.
std::vector<Term> enum_terms(const LatticeSpec& spec, const TypeEnv& inputs, const Univ& out,
                             std::size_t depth, const EnumLimits& limits = EnumLimits());

// One representative per class of terms that produce identical results in
// every environment of a finite domain.
struct TermClass {
  Term rep;
  // Number of terms in the class (saturating).
  std::uint64_t count = 0;
  // Result per input tuple, tuples in lexicographic order of the input
  // domains with the first input most significant.
  std::vector<Value> results;
};

using TermEvaluator = std::function<Value(const Term&, const ValueEnv&)>;

// The terms of enum_terms grouped into classes. Subterms are combined by
// class representative, which is exact because evaluation is compositional
// and every binder ranges over a finite type whose values are all visited.
// Throws HarnessError if some binder type has an unbounded value space
// (nat, error, labeled, fac); callers fall back to enum_terms.
std::vector<TermClass> enum_classes(const LatticeSpec& spec, const TypeEnv& inputs,
                                    const std::vector<std::vector<Value>>& domains,
                                    const Univ& out, std::size_t depth,
                                    const TermEvaluator& eval,
                                    const EnumLimits& limits = EnumLimits());

// True when every binder the grammar can introduce has a complete_domain,
// so enum_classes applies.
bool class_enumerable(const LatticeSpec& spec, const TypeEnv& inputs, const Univ& out,
                      bool implicit_nat = true);

// Every value of a type built from bool, label, plus and times; nullopt for
// any other type.
std::optional<std::vector<Value>> complete_domain(const LatticeSpec& spec, const Univ& u);

// The finite type set the grammar draws intermediate types from.
std::vector<Univ> grammar_types(const TypeEnv& inputs, const Univ& out, bool implicit_nat = true);

}  // namespace ifc

#endif  // IFCKIT_TERMGEN_HPP_
