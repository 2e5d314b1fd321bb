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

#include "ifckit/parser.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace ifc {
namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  std::vector<SExpr> read_all() {
    std::vector<SExpr> out;
    skip_space();
    while (pos_ < text_.size()) {
      out.push_back(read());
      skip_space();
    }
    return out;
  }

 private:
  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of input", line_, col_);
    SExpr e;
    e.line = line_;
    e.col = col_;
    const char c = text_[pos_];
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    if (c == '(') {
      advance();
      e.kind = SExpr::Kind::List;
      while (true) {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError("unclosed '('", e.line, e.col);
        if (text_[pos_] == ')') {
          advance();
          break;
        }
        e.items.push_back(read());
      }
      return e;
    }
    if (c == '"') {
      advance();
      e.kind = SExpr::Kind::String;
      while (true) {
        if (pos_ >= text_.size()) throw ParseError("unterminated string", e.line, e.col);
        char ch = text_[pos_];
        advance();
        if (ch == '"') break;
        if (ch == '\\') {
          if (pos_ >= text_.size()) throw ParseError("unterminated string", e.line, e.col);
          ch = text_[pos_];
          advance();
        }
        e.text.push_back(ch);
      }
      return e;
    }
    e.kind = SExpr::Kind::Atom;
    while (pos_ < text_.size() && !is_delim(text_[pos_])) {
      e.text.push_back(text_[pos_]);
      advance();
    }
    return e;
  }

  static bool is_delim(char c) {
    return c == '(' || c == ')' || c == '"' || c == ';' || c == ' ' || c == '\t' || c == '\n' ||
           c == '\r';
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else {
        break;
      }
    }
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else if ((static_cast<unsigned char>(text_[pos_]) & 0xC0) != 0x80) {
      ++col_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

[[noreturn]] void fail(const SExpr& e, const std::string& what) {
  throw ParseError(what, e.line, e.col);
}

const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> kw{
      "var", "if", "pair", "fst", "snd", "inl", "inr", "case", "add", "leq-nat", "eq",
      "fac-return", "fac-facet", "fac-bind", "lio-return", "lio-bind", "label", "label-of",
      "unlabel", "to-labeled", "throw", "catch", "true", "false", "program", "inputs", "output"};
  return kw;
}

bool is_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Nat parse_nat(const SExpr& e) {
  if (e.text.size() > 19) fail(e, "natural literal out of range");
  return std::stoull(e.text);
}

std::string identifier(const SExpr& e, const char* role) {
  if (e.kind != SExpr::Kind::Atom) fail(e, std::string("expected ") + role + " name");
  if (e.text.empty() || is_digits(e.text) || keywords().count(e.text) ||
      e.text.find_first_of("<>\"") != std::string::npos) {
    fail(e, std::string("invalid ") + role + " name '" + e.text + "'");
  }
  return e.text;
}

Label resolve_label(const SExpr& e, const LatticeSpec& spec) {
  if (e.kind != SExpr::Kind::Atom) fail(e, "expected a label name");
  if (auto l = spec.find(e.text)) return *l;
  fail(e, "unknown label '" + e.text + "'");
}

void arity(const SExpr& e, std::size_t n) {
  if (e.items.size() != n + 1) {
    fail(e, "'" + e.items[0].text + "' takes " + std::to_string(n) + " operand" +
                (n == 1 ? "" : "s") + ", got " + std::to_string(e.items.size() - 1));
  }
}

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).read_all(); }

SExpr read_sexpr(std::string_view text) {
  auto all = read_sexprs(text);
  if (all.size() != 1) {
    throw ParseError("expected exactly one expression, found " + std::to_string(all.size()), 1, 1);
  }
  return std::move(all[0]);
}

Univ parse_type(const SExpr& e) {
  if (e.kind == SExpr::Kind::Atom) {
    if (e.text == "bool") return Univ::boolean();
    if (e.text == "nat") return Univ::nat();
    if (e.text == "error") return Univ::error();
    if (e.text == "label") return Univ::label();
    fail(e, "unknown type '" + e.text + "'");
  }
  if (e.kind != SExpr::Kind::List || e.items.empty() || e.items[0].kind != SExpr::Kind::Atom) {
    fail(e, "malformed type");
  }
  const std::string& head = e.items[0].text;
  if (head == "labeled" || head == "lio" || head == "fac") {
    arity(e, 1);
    Univ inner = parse_type(e.items[1]);
    if (head == "labeled") return Univ::labeled(inner);
    if (head == "lio") return Univ::lio(inner);
    return Univ::fac(inner);
  }
  if (head == "plus" || head == "times") {
    arity(e, 2);
    Univ l = parse_type(e.items[1]);
    Univ r = parse_type(e.items[2]);
    return head == "plus" ? Univ::plus(l, r) : Univ::times(l, r);
  }
  fail(e, "unknown type constructor '" + head + "'");
}

Univ parse_type(std::string_view text) { return parse_type(read_sexpr(text)); }

Term parse_term(const SExpr& e, const LatticeSpec& spec) {
  auto sub = [&](std::size_t i) { return parse_term(e.items[i], spec); };
  Term t = [&]() -> Term {
    switch (e.kind) {
      case SExpr::Kind::String:
        fail(e, "unexpected string literal");
      case SExpr::Kind::Atom:
        if (e.text == "true") return Term::lit_bool(true);
        if (e.text == "false") return Term::lit_bool(false);
        if (is_digits(e.text)) return Term::lit_nat(parse_nat(e));
        return Term::var(identifier(e, "variable"));
      case SExpr::Kind::List:
        break;
    }
    if (e.items.empty()) fail(e, "empty expression");
    const SExpr& h = e.items[0];
    if (h.kind != SExpr::Kind::Atom) fail(h, "expected a construct name");
    const std::string& head = h.text;

    if (head == "var") {
      arity(e, 1);
      return Term::var(identifier(e.items[1], "variable"));
    }
    if (head == "if") {
      arity(e, 3);
      return Term::if_(sub(1), sub(2), sub(3));
    }
    if (head == "pair") {
      arity(e, 2);
      return Term::pair(sub(1), sub(2));
    }
    if (head == "fst" || head == "snd") {
      arity(e, 1);
      return head == "fst" ? Term::fst(sub(1)) : Term::snd(sub(1));
    }
    if (head == "inl" || head == "inr") {
      arity(e, 2);
      Univ sum = parse_type(e.items[1]);
      if (sum.kind() != Univ::Kind::Plus) fail(e.items[1], "injection needs a plus type");
      return head == "inl" ? Term::inl(sum, sub(2)) : Term::inr(sum, sub(2));
    }
    if (head == "case") {
      arity(e, 5);
      return Term::case_(sub(1), identifier(e.items[2], "binder"), sub(3),
                         identifier(e.items[4], "binder"), sub(5));
    }
    if (head == "add" || head == "leq-nat" || head == "eq") {
      arity(e, 2);
      const NatOp op = head == "add" ? NatOp::Add : head == "leq-nat" ? NatOp::LeqNat : NatOp::Eq;
      return Term::nat_op(op, sub(1), sub(2));
    }
    if (head == "fac-return") {
      arity(e, 1);
      return Term::fac_return(sub(1));
    }
    if (head == "fac-facet") {
      arity(e, 3);
      return Term::fac_facet(resolve_label(e.items[1], spec), sub(2), sub(3));
    }
    if (head == "fac-bind") {
      arity(e, 3);
      return Term::fac_bind(sub(1), identifier(e.items[2], "binder"), sub(3));
    }
    if (head == "lio-return") {
      arity(e, 1);
      return Term::lio_return(sub(1));
    }
    if (head == "lio-bind") {
      arity(e, 3);
      return Term::lio_bind(sub(1), identifier(e.items[2], "binder"), sub(3));
    }
    if (head == "label") {
      arity(e, 2);
      return Term::label(resolve_label(e.items[1], spec), sub(2));
    }
    if (head == "label-of") {
      arity(e, 1);
      return Term::label_of(sub(1));
    }
    if (head == "unlabel") {
      arity(e, 1);
      return Term::unlabel(sub(1));
    }
    if (head == "to-labeled") {
      arity(e, 2);
      return Term::to_labeled(resolve_label(e.items[1], spec), sub(2));
    }
    if (head == "throw") {
      arity(e, 2);
      if (e.items[2].kind != SExpr::Kind::String) fail(e.items[2], "throw takes a message string");
      return Term::raise(parse_type(e.items[1]), e.items[2].text);
    }
    if (head == "catch") {
      arity(e, 3);
      return Term::catch_(sub(1), identifier(e.items[2], "binder"), sub(3));
    }
    fail(h, "unknown construct '" + head + "'");
  }();
  return t.at(e.line, e.col);
}

Term parse_term(std::string_view text, const LatticeSpec& spec) {
  return parse_term(read_sexpr(text), spec);
}

Program parse_program(std::string_view text, const LatticeSpec& spec) {
  const SExpr e = read_sexpr(text);
  if (e.kind != SExpr::Kind::List || e.items.size() != 4 || !e.items[0].is_atom("program")) {
    fail(e, "expected (program (inputs ...) (output T) body)");
  }
  const SExpr& inputs = e.items[1];
  if (inputs.kind != SExpr::Kind::List || inputs.items.empty() || !inputs.items[0].is_atom("inputs")) {
    fail(inputs, "expected (inputs (name type) ...)");
  }
  Program p;
  std::set<std::string> seen;
  for (std::size_t i = 1; i < inputs.items.size(); ++i) {
    const SExpr& decl = inputs.items[i];
    if (decl.kind != SExpr::Kind::List || decl.items.size() != 2) {
      fail(decl, "expected (name type)");
    }
    std::string name = identifier(decl.items[0], "input");
    if (!seen.insert(name).second) fail(decl, "duplicate input '" + name + "'");
    p.inputs.emplace_back(std::move(name), parse_type(decl.items[1]));
  }
  const SExpr& output = e.items[2];
  if (output.kind != SExpr::Kind::List || output.items.size() != 2 ||
      !output.items[0].is_atom("output")) {
    fail(output, "expected (output T)");
  }
  p.output = parse_type(output.items[1]);
  p.body = parse_term(e.items[3], spec);
  return p;
}

Value parse_value(const SExpr& e, const Univ& type, const LatticeSpec& spec) {
  auto head_is = [&](std::string_view kw, std::size_t n) {
    if (e.kind != SExpr::Kind::List || e.items.empty() || !e.items[0].is_atom(kw)) return false;
    arity(e, n);
    return true;
  };
  switch (type.kind()) {
    case Univ::Kind::Bool:
      if (e.is_atom("true")) return Value::boolean(true);
      if (e.is_atom("false")) return Value::boolean(false);
      break;
    case Univ::Kind::Nat:
      if (e.kind == SExpr::Kind::Atom && is_digits(e.text)) return Value::nat(parse_nat(e));
      break;
    case Univ::Kind::Label:
      if (head_is("lbl", 1)) return Value::label(resolve_label(e.items[1], spec));
      break;
    case Univ::Kind::Error:
      if (head_is("user-error", 1)) {
        if (e.items[1].kind != SExpr::Kind::String) fail(e.items[1], "expected a message string");
        return Value::error(Exception::user(e.items[1].text));
      }
      if (head_is("ifc-error", 1)) {
        return Value::error(Exception::ifc(resolve_label(e.items[1], spec)));
      }
      break;
    case Univ::Kind::Labeled:
      if (head_is("labeled", 2)) {
        const Label tag = resolve_label(e.items[1], spec);
        const SExpr& payload = e.items[2];
        if (payload.kind == SExpr::Kind::List && !payload.items.empty() &&
            payload.items[0].is_atom("delayed")) {
          if (payload.items.size() != 2) fail(payload, "'delayed' takes 1 operand");
          return Value::labeled(LabeledValue::delayed(
              parse_value(payload.items[1], Univ::error(), spec).as_error(), tag));
        }
        return Value::labeled(LabeledValue::ok(parse_value(payload, type.inner(), spec), tag));
      }
      break;
    case Univ::Kind::Plus:
      if (head_is("inl", 1)) return Value::inl(parse_value(e.items[1], type.left(), spec));
      if (head_is("inr", 1)) return Value::inr(parse_value(e.items[1], type.right(), spec));
      break;
    case Univ::Kind::Times:
      if (head_is("pair", 2)) {
        return Value::pair(parse_value(e.items[1], type.left(), spec),
                           parse_value(e.items[2], type.right(), spec));
      }
      break;
    case Univ::Kind::Fac: {
      if (e.is_atom("nothing")) return Value::maybe(StdFac::nothing());
      if (head_is("just", 1)) return Value::maybe(StdFac::just(parse_value(e.items[1], type.inner(), spec)));
      // Faceted trees: (return v) | (facet L p q).
      if (head_is("return", 1)) {
        return Value::fac(FacTree::leaf(parse_value(e.items[1], type.inner(), spec)));
      }
      if (head_is("facet", 3)) {
        const Label guard = resolve_label(e.items[1], spec);
        Value p = parse_value(e.items[2], type, spec);
        Value q = parse_value(e.items[3], type, spec);
        if (p.kind() != Value::Kind::Fac || q.kind() != Value::Kind::Fac) {
          fail(e, "facet branches must be faceted trees");
        }
        return Value::fac(FacTree::node(guard, p.as_fac(), q.as_fac()));
      }
      break;
    }
    case Univ::Kind::Lio:
      fail(e, "computations cannot be written as values");
  }
  fail(e, "expected a value of type " + type.text());
}

Value parse_value(std::string_view text, const Univ& type, const LatticeSpec& spec) {
  return parse_value(read_sexpr(text), type, spec);
}

}  // namespace ifc
