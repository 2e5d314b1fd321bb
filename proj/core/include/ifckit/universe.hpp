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

#ifndef IFCKIT_UNIVERSE_HPP_
#define IFCKIT_UNIVERSE_HPP_

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ifckit/lio.hpp"
#include "ifckit/rng.hpp"
#include "ifckit/value.hpp"

namespace ifc {

// First-order types. `label` is the type of labelOf results; `fac` is the
// faceted-value type of the Multef interface.
class Univ {
 public:
  enum class Kind : std::uint8_t { Bool, Nat, Label, Error, Labeled, Lio, Plus, Times, Fac };

  static Univ boolean();
  static Univ nat();
  static Univ label();
  static Univ error();
  static Univ labeled(Univ inner);
  static Univ lio(Univ inner);
  static Univ fac(Univ inner);
  static Univ plus(Univ left, Univ right);
  static Univ times(Univ left, Univ right);

  Kind kind() const;
  // Operand of labeled/lio/fac.
  const Univ& inner() const;
  const Univ& left() const;
  const Univ& right() const;

  bool is_base() const {
    return kind() == Kind::Bool || kind() == Kind::Nat || kind() == Kind::Label ||
           kind() == Kind::Error;
  }
  // Constructor nesting depth; base types have depth 1.
  std::size_t depth() const;
  bool mentions(Kind k) const;
  // Canonical text, e.g. "(labeled (plus bool nat))".
  const std::string& text() const;

  friend bool operator==(const Univ& a, const Univ& b);
  friend bool operator<(const Univ& a, const Univ& b);

 private:
  struct Node;
  explicit Univ(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Univ make(Kind k, const Univ* l, const Univ* r);

  std::shared_ptr<const Node> node_;
};

struct Univ::Node {
  Kind kind;
  std::optional<Univ> left;
  std::optional<Univ> right;
  std::size_t depth;
  std::string text;
};

inline Univ::Kind Univ::kind() const { return node_->kind; }
inline std::size_t Univ::depth() const { return node_->depth; }
inline const std::string& Univ::text() const { return node_->text; }
inline bool operator==(const Univ& a, const Univ& b) {
  return a.node_ == b.node_ || a.node_->text == b.node_->text;
}
inline bool operator<(const Univ& a, const Univ& b) { return a.node_->text < b.node_->text; }

inline const std::string& to_string(const Univ& u) { return u.text(); }

// The two client-interface families. A program uses exactly one.
enum class Family : std::uint8_t { Neutral, Facets, Lio };

const char* family_name(Family f);
// Facets if the type mentions fac, Lio if it mentions labeled/lio/label.
// Throws TypeError if it mentions both.
Family family_of(const Univ& u);

// Structural check that v inhabits u. With a lattice, lio-typed values are
// also run from every label and their successful results checked.
bool el_check(const Univ& u, const Value& v, const LatticeSpec* deep = nullptr,
              const LioSemantics& sem = LioSemantics::standard());

// Observer-indexed indistinguishability at type u. Lio computations are
// compared by running both from every pair of equivalent current labels.
// Throws HarnessError if a value does not have the shape of u.
// Runs made while comparing lio values are counted in *stats when given.
bool equiv(const LatticeSpec& spec, Label observer, const Univ& u, const Value& v0,
           const Value& v1, const LioSemantics& sem = LioSemantics::standard(),
           RunStats* stats = nullptr);

bool labels_equiv(const LatticeSpec& spec, Label observer, Label a, Label b);
bool config_equiv(const LatticeSpec& spec, Label observer, const Univ& u, const Config& c0,
                  const Config& c1, const LioSemantics& sem = LioSemantics::standard(),
                  RunStats* stats = nullptr);

// Random inhabitant of an input type (no lio anywhere inside u).
Value gen_value(Rng& rng, const LatticeSpec& spec, const Univ& u);

// A pair equivalent at observer by construction: observable structure is
// shared and unobservable payloads are drawn independently.
std::pair<Value, Value> gen_equiv_pair(Rng& rng, const LatticeSpec& spec, Label observer,
                                       const Univ& u);

// Every value of a bounded input space for u: nat in {0,1}, a single user
// error, facet trees of height at most one.
std::vector<Value> enum_values(const LatticeSpec& spec, const Univ& u);

// Random input types for a family, at most max_depth deep. Lio-family input
// types draw from bool, nat, labeled, plus, times.
Univ gen_input_type(Rng& rng, Family family, std::size_t max_depth);
// Random output types; lio-family outputs include lio, labeled and label.
Univ gen_output_type(Rng& rng, Family family, std::size_t max_depth);

}  // namespace ifc

#endif  // IFCKIT_UNIVERSE_HPP_
