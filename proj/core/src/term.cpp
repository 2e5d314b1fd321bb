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

#include "ifckit/term.hpp"

#include <sstream>

namespace ifc {
namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

const char* nat_op_keyword(NatOp op) {
  switch (op) {
    case NatOp::Add: return "add";
    case NatOp::LeqNat: return "leq-nat";
    case NatOp::Eq: return "eq";
  }
  return "?";
}

const char* op_keyword(Op op, NatOp nat_op) {
  switch (op) {
    case Op::Var: return "var";
    case Op::Bool: return "bool-literal";
    case Op::Nat: return "nat-literal";
    case Op::If: return "if";
    case Op::Pair: return "pair";
    case Op::Fst: return "fst";
    case Op::Snd: return "snd";
    case Op::Inl: return "inl";
    case Op::Inr: return "inr";
    case Op::Case: return "case";
    case Op::NatOp: return nat_op_keyword(nat_op);
    case Op::FacReturn: return "fac-return";
    case Op::FacFacet: return "fac-facet";
    case Op::FacBind: return "fac-bind";
    case Op::LioReturn: return "lio-return";
    case Op::LioBind: return "lio-bind";
    case Op::Label: return "label";
    case Op::LabelOf: return "label-of";
    case Op::Unlabel: return "unlabel";
    case Op::ToLabeled: return "to-labeled";
    case Op::Throw: return "throw";
    case Op::Catch: return "catch";
  }
  return "?";
}

Term Term::make(Node n) {
  for (const auto& k : n.kids) {
    n.size += k.size();
    n.height = std::max(n.height, k.height() + 1);
  }
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::var(std::string name) {
  Node n;
  n.op = Op::Var;
  n.name = std::move(name);
  return make(std::move(n));
}

Term Term::lit_bool(bool b) {
  Node n;
  n.op = Op::Bool;
  n.flag = b;
  return make(std::move(n));
}

Term Term::lit_nat(Nat v) {
  Node n;
  n.op = Op::Nat;
  n.nat = v;
  return make(std::move(n));
}

Term Term::if_(Term c, Term then_, Term else_) {
  Node n;
  n.op = Op::If;
  n.kids = {std::move(c), std::move(then_), std::move(else_)};
  return make(std::move(n));
}

Term Term::pair(Term a, Term b) {
  Node n;
  n.op = Op::Pair;
  n.kids = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Term Term::fst(Term e) {
  Node n;
  n.op = Op::Fst;
  n.kids = {std::move(e)};
  return make(std::move(n));
}

Term Term::snd(Term e) {
  Node n;
  n.op = Op::Snd;
  n.kids = {std::move(e)};
  return make(std::move(n));
}

Term Term::inl(Univ sum, Term e) {
  Node n;
  n.op = Op::Inl;
  n.annot = std::move(sum);
  n.kids = {std::move(e)};
  return make(std::move(n));
}

Term Term::inr(Univ sum, Term e) {
  Node n;
  n.op = Op::Inr;
  n.annot = std::move(sum);
  n.kids = {std::move(e)};
  return make(std::move(n));
}

Term Term::case_(Term scrutinee, std::string left_binder, Term left, std::string right_binder,
                 Term right) {
  Node n;
  n.op = Op::Case;
  n.kids = {std::move(scrutinee), std::move(left), std::move(right)};
  n.binders = {std::move(left_binder), std::move(right_binder)};
  return make(std::move(n));
}

Term Term::nat_op(NatOp op, Term a, Term b) {
  Node n;
  n.op = Op::NatOp;
  n.nat_op = op;
  n.kids = {std::move(a), std::move(b)};
  return make(std::move(n));
}

Term Term::fac_return(Term e) {
  Node n;
  n.op = Op::FacReturn;
  n.kids = {std::move(e)};
  return make(std::move(n));
}

Term Term::fac_facet(Label guard, Term priv, Term pub) {
  Node n;
  n.op = Op::FacFacet;
  n.label = guard;
  n.kids = {std::move(priv), std::move(pub)};
  return make(std::move(n));
}

Term Term::fac_bind(Term m, std::string binder, Term body) {
  Node n;
  n.op = Op::FacBind;
  n.kids = {std::move(m), std::move(body)};
  n.binders = {std::move(binder)};
  return make(std::move(n));
}

Term Term::lio_return(Term e) {
  Node n;
  n.op = Op::LioReturn;
  n.kids = {std::move(e)};
  return make(std::move(n));
}

Term Term::lio_bind(Term m, std::string binder, Term body) {
  Node n;
  n.op = Op::LioBind;
  n.kids = {std::move(m), std::move(body)};
  n.binders = {std::move(binder)};
  return make(std::move(n));
}

Term Term::label(ifc::Label l, Term e) {
  Node n;
  n.op = Op::Label;
  n.label = l;
  n.kids = {std::move(e)};
  return make(std::move(n));
}

Term Term::label_of(Term e) {
  Node n;
  n.op = Op::LabelOf;
  n.kids = {std::move(e)};
  return make(std::move(n));
}

Term Term::unlabel(Term e) {
  Node n;
  n.op = Op::Unlabel;
  n.kids = {std::move(e)};
  return make(std::move(n));
}

Term Term::to_labeled(ifc::Label l, Term m) {
  Node n;
  n.op = Op::ToLabeled;
  n.label = l;
  n.kids = {std::move(m)};
  return make(std::move(n));
}

Term Term::raise(Univ result, std::string message) {
  Node n;
  n.op = Op::Throw;
  n.annot = std::move(result);
  n.name = std::move(message);
  return make(std::move(n));
}

Term Term::catch_(Term m, std::string binder, Term handler) {
  Node n;
  n.op = Op::Catch;
  n.kids = {std::move(m), std::move(handler)};
  n.binders = {std::move(binder)};
  return make(std::move(n));
}

Op Term::op() const { return node_->op; }
NatOp Term::nat_op() const { return node_->nat_op; }
std::size_t Term::arity() const { return node_->kids.size(); }
const Term& Term::kid(std::size_t i) const { return node_->kids.at(i); }
const std::string& Term::binder(std::size_t i) const { return node_->binders.at(i); }
const std::string& Term::name() const { return node_->name; }
Nat Term::nat() const { return node_->nat; }
bool Term::flag() const { return node_->flag; }
Label Term::label() const { return node_->label; }

const Univ& Term::annot() const {
  if (!node_->annot) throw HarnessError(std::string(op_keyword(op())) + " has no annotation");
  return *node_->annot;
}

std::size_t Term::size() const { return node_->size; }
std::size_t Term::height() const { return node_->height; }
int Term::line() const { return node_->line; }
int Term::col() const { return node_->col; }

Term Term::at(int line, int col) const {
  Node n = *node_;
  n.line = line;
  n.col = col;
  return Term(std::make_shared<const Node>(std::move(n)));
}

Term Term::with_kid(std::size_t i, Term k) const {
  Node n = *node_;
  n.kids.at(i) = std::move(k);
  n.size = 1;
  n.height = 1;
  return make(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.op != y.op || x.kids.size() != y.kids.size() || x.binders != y.binders) return false;
  switch (x.op) {
    case Op::Var:
      if (x.name != y.name) return false;
      break;
    case Op::Bool:
      if (x.flag != y.flag) return false;
      break;
    case Op::Nat:
      if (x.nat != y.nat) return false;
      break;
    case Op::NatOp:
      if (x.nat_op != y.nat_op) return false;
      break;
    case Op::Inl:
    case Op::Inr:
      if (*x.annot != *y.annot) return false;
      break;
    case Op::Throw:
      if (*x.annot != *y.annot || x.name != y.name) return false;
      break;
    case Op::FacFacet:
    case Op::Label:
    case Op::ToLabeled:
      if (x.label != y.label) return false;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < x.kids.size(); ++i) {
    if (!(x.kids[i] == y.kids[i])) return false;
  }
  return true;
}

std::string to_string(const Term& t) {
  switch (t.op()) {
    case Op::Var: return "(var " + t.name() + ")";
    case Op::Bool: return t.flag() ? "true" : "false";
    case Op::Nat: return std::to_string(t.nat());
    case Op::Inl:
    case Op::Inr:
      return std::string("(") + op_keyword(t.op()) + " " + t.annot().text() + " " +
             to_string(t.kid(0)) + ")";
    case Op::Throw: return "(throw " + t.annot().text() + " " + quote(t.name()) + ")";
    case Op::Case:
      return "(case " + to_string(t.kid(0)) + " " + t.binder(0) + " " + to_string(t.kid(1)) + " " +
             t.binder(1) + " " + to_string(t.kid(2)) + ")";
    case Op::FacBind:
    case Op::LioBind:
    case Op::Catch:
      return std::string("(") + op_keyword(t.op()) + " " + to_string(t.kid(0)) + " " +
             t.binder(0) + " " + to_string(t.kid(1)) + ")";
    case Op::FacFacet:
    case Op::Label:
    case Op::ToLabeled: {
      std::string s = std::string("(") + op_keyword(t.op()) + " " + t.label().name();
      for (std::size_t i = 0; i < t.arity(); ++i) s += " " + to_string(t.kid(i));
      return s + ")";
    }
    default: {
      std::string s = std::string("(") + op_keyword(t.op(), t.nat_op());
      for (std::size_t i = 0; i < t.arity(); ++i) s += " " + to_string(t.kid(i));
      return s + ")";
    }
  }
}

std::string to_string(const Program& p) {
  std::ostringstream out;
  out << "(program (inputs";
  for (const auto& [name, type] : p.inputs) out << " (" << name << " " << type.text() << ")";
  out << ") (output " << p.output.text() << ")\n  " << to_string(p.body) << ")\n";
  return out.str();
}

}  // namespace ifc
