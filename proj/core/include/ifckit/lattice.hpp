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

#ifndef IFCKIT_LATTICE_HPP_
#define IFCKIT_LATTICE_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ifckit/errors.hpp"
#include "ifckit/rng.hpp"

namespace ifc {

class LatticeSpec;

// A security label: an interned index into the table of its owning lattice.
// Equality compares the index and the owning lattice.
class Label {
 public:
  Label() = default;

  std::uint32_t id() const { return id_; }
  const LatticeSpec* lattice() const { return spec_; }
  const std::string& name() const;

  friend bool operator==(const Label& a, const Label& b) {
    return a.id_ == b.id_ && a.spec_ == b.spec_;
  }
  friend bool operator<(const Label& a, const Label& b) { return a.id_ < b.id_; }

 private:
  friend class LatticeSpec;
  Label(std::uint32_t id, const LatticeSpec* spec) : id_(id), spec_(spec) {}

  std::uint32_t id_ = 0;
  const LatticeSpec* spec_ = nullptr;
};

using LatticePtr = std::shared_ptr<const LatticeSpec>;

// A finite join-semilattice with its order and join fully tabulated.
// Immutable after construction.
class LatticeSpec : public std::enable_shared_from_this<LatticeSpec> {
 public:
  using Edge = std::pair<std::string, std::string>;

  // Parses the line-oriented lattice file format:
  //   labels: L H
  //   bottom: L        (optional when derivable)
  //   order: L<H, ...  (reflexive-transitive closure implied)
  static LatticePtr parse(std::string_view text);

  // Builds from declared strict edges a<b. Throws LatticeError on cycles,
  // missing joins, or a missing/incorrect bottom.
  static LatticePtr from_edges(std::vector<std::string> names,
                               const std::vector<Edge>& edges,
                               std::optional<std::string> bottom = std::nullopt);

  static LatticePtr two_point();
  static LatticePtr diamond();
  // Subsets of k principals ordered by inclusion. Principals are named A, B,
  // C, ...; a set is the concatenation of its members, the empty set is "∅".
  static LatticePtr powerset(unsigned k);
  // A random join-semilattice of at most max_labels elements: a union-closed
  // family of subsets, declared through its covering edges.
  static LatticePtr random(Rng& rng, unsigned max_labels);

  // Looks up a builtin by name: two-point, diamond, powerset-<k>.
  static LatticePtr builtin(std::string_view name);

  std::size_t size() const { return names_.size(); }
  Label label(std::uint32_t id) const;
  std::optional<Label> find(std::string_view name) const;
  // Like find, but throws HarnessError naming the missing label.
  Label at(std::string_view name) const;
  const std::string& name(Label l) const;
  std::vector<Label> labels() const;

  bool leq(Label a, Label b) const {
    return leq_[index(a) * size() + index(b)];
  }
  Label join(Label a, Label b) const {
    return label(join_[index(a) * size() + index(b)]);
  }
  Label bottom() const { return label(bottom_); }
  std::optional<Label> top() const;

  // True iff l was issued by this lattice.
  bool owns(Label l) const { return l.lattice() == this; }

  // Serializes back to the file format (cover edges only).
  std::string to_text() const;
  // Covering relation: pairs (a, b) with a < b and nothing strictly between.
  std::vector<std::pair<Label, Label>> covers() const;

 private:
  LatticeSpec() = default;
  std::uint32_t index(Label l) const {
    if (l.lattice() != this) {
      throw HarnessError("label used with a lattice that did not issue it");
    }
    return l.id();
  }

  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<std::uint32_t> join_;
  std::uint32_t bottom_ = 0;
};

}  // namespace ifc

#endif  // IFCKIT_LATTICE_HPP_
