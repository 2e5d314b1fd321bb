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

#include "ifckit/typecheck.hpp"

namespace ifc {
namespace {

struct Scope {
  const std::string& name;
  const Univ& type;
  const Scope* next;
};

class Checker {
 public:
  explicit Checker(const TypeEnv& inputs) : inputs_(inputs) {}

  Univ check(const Term& t, const Scope* scope) {
    switch (t.op()) {
      case Op::Var: return lookup(t, scope);
      case Op::Bool: return Univ::boolean();
      case Op::Nat: return Univ::nat();
      case Op::If: {
        expect(t, check(t.kid(0), scope), Univ::boolean(), "if condition");
        Univ a = check(t.kid(1), scope);
        expect(t, check(t.kid(2), scope), a, "else branch");
        return a;
      }
      case Op::Pair: return Univ::times(check(t.kid(0), scope), check(t.kid(1), scope));
      case Op::Fst:
      case Op::Snd: {
        Univ p = check(t.kid(0), scope);
        if (p.kind() != Univ::Kind::Times) fail(t, "expected a pair, got " + p.text());
        return t.op() == Op::Fst ? p.left() : p.right();
      }
      case Op::Inl:
      case Op::Inr: {
        const Univ& sum = t.annot();
        if (sum.kind() != Univ::Kind::Plus) fail(t, "injection annotated with " + sum.text());
        note(sum);
        expect(t, check(t.kid(0), scope), t.op() == Op::Inl ? sum.left() : sum.right(),
               "injected value");
        return sum;
      }
      case Op::Case: {
        Univ s = check(t.kid(0), scope);
        if (s.kind() != Univ::Kind::Plus) fail(t, "case on non-sum type " + s.text());
        const Scope left{t.binder(0), s.left(), scope};
        const Scope right{t.binder(1), s.right(), scope};
        Univ a = check(t.kid(1), &left);
        expect(t, check(t.kid(2), &right), a, "right branch");
        return a;
      }
      case Op::NatOp: {
        Univ a = check(t.kid(0), scope);
        Univ b = check(t.kid(1), scope);
        if (t.nat_op() == NatOp::Eq) {
          if (a.kind() != Univ::Kind::Bool && a.kind() != Univ::Kind::Nat &&
              a.kind() != Univ::Kind::Label) {
            fail(t, "eq compares bool, nat or label, got " + a.text());
          }
          expect(t, b, a, "right operand");
          return Univ::boolean();
        }
        expect(t, a, Univ::nat(), "left operand");
        expect(t, b, Univ::nat(), "right operand");
        return t.nat_op() == NatOp::Add ? Univ::nat() : Univ::boolean();
      }
      case Op::FacReturn:
        join(t, Family::Facets);
        return Univ::fac(check(t.kid(0), scope));
      case Op::FacFacet: {
        join(t, Family::Facets);
        Univ a = check(t.kid(0), scope);
        if (a.kind() != Univ::Kind::Fac) fail(t, "facet branch has type " + a.text());
        expect(t, check(t.kid(1), scope), a, "public branch");
        return a;
      }
      case Op::FacBind: {
        join(t, Family::Facets);
        Univ m = check(t.kid(0), scope);
        if (m.kind() != Univ::Kind::Fac) fail(t, "fac-bind on non-faceted type " + m.text());
        const Scope inner{t.binder(0), m.inner(), scope};
        Univ body = check(t.kid(1), &inner);
        if (body.kind() != Univ::Kind::Fac) fail(t, "fac-bind body has type " + body.text());
        return body;
      }
      case Op::LioReturn:
        join(t, Family::Lio);
        return Univ::lio(check(t.kid(0), scope));
      case Op::LioBind:
      case Op::Catch: {
        join(t, Family::Lio);
        Univ m = check(t.kid(0), scope);
        if (m.kind() != Univ::Kind::Lio) {
          fail(t, std::string(op_keyword(t.op())) + " on non-computation type " + m.text());
        }
        const Univ bound = t.op() == Op::Catch ? Univ::error() : m.inner();
        const Scope inner{t.binder(0), bound, scope};
        Univ body = check(t.kid(1), &inner);
        if (body.kind() != Univ::Kind::Lio) {
          fail(t, std::string(op_keyword(t.op())) + " body has type " + body.text());
        }
        if (t.op() == Op::Catch) expect(t, body, m, "handler");
        return body;
      }
      case Op::Label:
        join(t, Family::Lio);
        return Univ::labeled(check(t.kid(0), scope));
      case Op::LabelOf:
        join(t, Family::Lio);
        labeled(t, check(t.kid(0), scope));
        return Univ::label();
      case Op::Unlabel:
        join(t, Family::Lio);
        return Univ::lio(labeled(t, check(t.kid(0), scope)).inner());
      case Op::ToLabeled: {
        join(t, Family::Lio);
        Univ m = check(t.kid(0), scope);
        if (m.kind() != Univ::Kind::Lio) fail(t, "to-labeled on non-computation type " + m.text());
        return Univ::lio(Univ::labeled(m.inner()));
      }
      case Op::Throw:
        join(t, Family::Lio);
        note(t.annot());
        return Univ::lio(t.annot());
    }
    fail(t, "unhandled construct");
  }

  Family family() const { return family_; }

  void note(const Univ& u) {
    const Family f = family_of(u);
    if (f != Family::Neutral) join_family(f, nullptr);
  }

 private:
  [[noreturn]] static void fail(const Term& t, const std::string& what) {
    if (t.line() > 0) {
      throw TypeError(std::to_string(t.line()) + ":" + std::to_string(t.col()) + ": " + what);
    }
    throw TypeError(what);
  }

  static void expect(const Term& t, const Univ& got, const Univ& want, const char* what) {
    if (!(got == want)) {
      fail(t, std::string(what) + " has type " + got.text() + ", expected " + want.text());
    }
  }

  static const Univ& labeled(const Term& t, const Univ& u) {
    if (u.kind() != Univ::Kind::Labeled) fail(t, "expected a labeled value, got " + u.text());
    return u;
  }

  Univ lookup(const Term& t, const Scope* scope) {
    for (const Scope* s = scope; s; s = s->next) {
      if (s->name == t.name()) return s->type;
    }
    for (const auto& [name, type] : inputs_) {
      if (name == t.name()) return type;
    }
    fail(t, "unbound variable '" + t.name() + "'");
  }

  void join(const Term& t, Family f) { join_family(f, &t); }

  void join_family(Family f, const Term* t) {
    if (family_ == Family::Neutral) {
      family_ = f;
    } else if (family_ != f) {
      const std::string what = std::string("mixed-interface term: ") + family_name(family_) +
                               " and " + family_name(f) + " constructs";
      if (t) fail(*t, what);
      throw TypeError(what);
    }
  }

  const TypeEnv& inputs_;
  Family family_ = Family::Neutral;
};

}  // namespace

TypeResult typecheck(const Term& t, const TypeEnv& inputs) {
  Checker c(inputs);
  for (const auto& [name, type] : inputs) c.note(type);
  Univ u = c.check(t, nullptr);
  c.note(u);
  return {u, c.family()};
}

Family typecheck_program(const Program& p) {
  TypeResult r = typecheck(p.body, p.inputs);
  if (!(r.type == p.output)) {
    throw TypeError("program body has type " + r.type.text() + ", declared output " +
                    p.output.text());
  }
  return r.family;
}

}  // namespace ifc
