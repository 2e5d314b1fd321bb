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

#ifndef IFCKIT_TERM_HPP_
#define IFCKIT_TERM_HPP_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ifckit/universe.hpp"
#include "ifckit/value.hpp"

namespace ifc {

// Client-program constructs. The Multef family can reach faceted values only
// through fac-return/fac-facet/fac-bind, and the LIO family can reach labeled
// payloads only through unlabel.
enum class Op : std::uint8_t {
  Var, Bool, Nat, If, Pair, Fst, Snd, Inl, Inr, Case, NatOp,
  FacReturn, FacFacet, FacBind,
  LioReturn, LioBind, Label, LabelOf, Unlabel, ToLabeled, Throw, Catch,
};
inline constexpr std::size_t kOpCount = static_cast<std::size_t>(Op::Catch) + 1;

enum class NatOp : std::uint8_t { Add, LeqNat, Eq };

const char* op_keyword(Op op, NatOp nat_op = NatOp::Add);
const char* nat_op_keyword(NatOp op);

class Term {
 public:
  struct Node;

  static Term var(std::string name);
  static Term lit_bool(bool b);
  static Term lit_nat(Nat n);
  static Term if_(Term c, Term then_, Term else_);
  static Term pair(Term a, Term b);
  static Term fst(Term e);
  static Term snd(Term e);
  // `sum` is the full plus type of the injection.
  static Term inl(Univ sum, Term e);
  static Term inr(Univ sum, Term e);
  static Term case_(Term scrutinee, std::string left_binder, Term left, std::string right_binder,
                    Term right);
  static Term nat_op(NatOp op, Term a, Term b);
  static Term fac_return(Term e);
  static Term fac_facet(Label guard, Term priv, Term pub);
  static Term fac_bind(Term m, std::string binder, Term body);
  static Term lio_return(Term e);
  static Term lio_bind(Term m, std::string binder, Term body);
  static Term label(Label l, Term e);
  static Term label_of(Term e);
  static Term unlabel(Term e);
  static Term to_labeled(Label l, Term m);
  // `result` is A in the thrown computation's type (lio A).
  static Term raise(Univ result, std::string message);
  static Term catch_(Term m, std::string binder, Term handler);

  Op op() const;
  NatOp nat_op() const;
  std::size_t arity() const;
  const Term& kid(std::size_t i) const;
  const std::string& binder(std::size_t i) const;
  // Variable name, or the message of a throw.
  const std::string& name() const;
  Nat nat() const;
  bool flag() const;
  Label label() const;
  const Univ& annot() const;

  // AST node count and height.
  std::size_t size() const;
  std::size_t height() const;

  int line() const;
  int col() const;
  Term at(int line, int col) const;
  // This node with kid i replaced.
  Term with_kid(std::size_t i, Term k) const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Term make(Node n);

  std::shared_ptr<const Node> node_;
};

struct Term::Node {
  Op op = Op::Var;
  NatOp nat_op = NatOp::Add;
  std::vector<Term> kids;
  std::vector<std::string> binders;
  std::string name;
  Nat nat = 0;
  bool flag = false;
  ifc::Label label;
  std::optional<Univ> annot;
  int line = 0;
  int col = 0;
  std::size_t size = 1;
  std::size_t height = 1;
};

using TypeEnv = std::vector<std::pair<std::string, Univ>>;

// A program file: named typed inputs, a declared output type, a body.
struct Program {
  TypeEnv inputs;
  Univ output = Univ::boolean();
  Term body = Term::lit_bool(false);
};

// Program syntax, parseable by parse_term.
std::string to_string(const Term& t);
std::string to_string(const Program& p);

}  // namespace ifc

#endif  // IFCKIT_TERM_HPP_
