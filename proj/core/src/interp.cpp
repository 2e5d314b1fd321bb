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

#include "ifckit/interp.hpp"

#include <memory>

#include "ifckit/facets.hpp"

namespace ifc {
namespace {

class SecureBackend final : public MultefBackend {
 public:
  std::string_view name() const override { return "sec"; }
  Value ret(Value v) const override { return Value::fac(facets::fac_return(std::move(v))); }
  Value facet(Label guard, const Value& priv, const Value& pub) const override {
    return Value::fac(facets::fac_facet(guard, priv.as_fac(), pub.as_fac()));
  }
  Value bind(const Value& m, const Cont& k) const override {
    return Value::fac(facets::fac_bind(m.as_fac(), [&](const Value& v) { return k(v).as_fac(); }));
  }
};

class StandardBackend final : public MultefBackend {
 public:
  std::string_view name() const override { return "std"; }
  Value ret(Value v) const override { return Value::maybe(facets::std_return(std::move(v))); }
  Value facet(Label guard, const Value& priv, const Value& pub) const override {
    return Value::maybe(facets::std_facet(guard, priv.as_maybe(), pub.as_maybe()));
  }
  Value bind(const Value& m, const Cont& k) const override {
    return Value::maybe(
        facets::std_bind(m.as_maybe(), [&](const Value& v) { return k(v).as_maybe(); }));
  }
};

// Persistent environment; closures captured by LIO continuations share tails.
struct Frame {
  std::string name;
  Value value;
  std::shared_ptr<const Frame> next;
};
using Env = std::shared_ptr<const Frame>;

Env extend(Env env, const std::string& name, Value v) {
  return std::make_shared<const Frame>(Frame{name, std::move(v), std::move(env)});
}

[[noreturn]] void stuck(const Term& t, const std::string& why) {
  throw HarnessError(std::string("evaluation stuck at ") + op_keyword(t.op(), t.nat_op()) + ": " +
                     why);
}

class Evaluator {
 public:
  Evaluator(const MultefBackend* backend, const LioSemantics* sem) : backend_(backend), sem_(sem) {}

  Value eval(const Term& t, const Env& env) const {
    switch (t.op()) {
      case Op::Var:
        for (const Frame* f = env.get(); f; f = f->next.get()) {
          if (f->name == t.name()) return f->value;
        }
        stuck(t, "unbound variable " + t.name());
      case Op::Bool: return Value::boolean(t.flag());
      case Op::Nat: return Value::nat(t.nat());
      case Op::If:
        return eval(t.kid(0), env).as_bool() ? eval(t.kid(1), env) : eval(t.kid(2), env);
      case Op::Pair: return Value::pair(eval(t.kid(0), env), eval(t.kid(1), env));
      case Op::Fst: return eval(t.kid(0), env).first();
      case Op::Snd: return eval(t.kid(0), env).second();
      case Op::Inl: return Value::inl(eval(t.kid(0), env));
      case Op::Inr: return Value::inr(eval(t.kid(0), env));
      case Op::Case: {
        const Value s = eval(t.kid(0), env);
        if (s.kind() == Value::Kind::Inl) return eval(t.kid(1), extend(env, t.binder(0), s.inner()));
        return eval(t.kid(2), extend(env, t.binder(1), s.inner()));
      }
      case Op::NatOp: {
        const Value a = eval(t.kid(0), env);
        const Value b = eval(t.kid(1), env);
        switch (t.nat_op()) {
          case NatOp::Add: return Value::nat(a.as_nat() + b.as_nat());
          case NatOp::LeqNat: return Value::boolean(a.as_nat() <= b.as_nat());
          case NatOp::Eq: return Value::boolean(a == b);
        }
        stuck(t, "unknown operator");
      }
      case Op::FacReturn: return multef(t).ret(eval(t.kid(0), env));
      case Op::FacFacet:
        return multef(t).facet(t.label(), eval(t.kid(0), env), eval(t.kid(1), env));
      case Op::FacBind: {
        const Term& body = t.kid(1);
        const std::string& x = t.binder(0);
        return multef(t).bind(eval(t.kid(0), env),
                              [&](const Value& v) { return eval(body, extend(env, x, v)); });
      }
      case Op::LioReturn:
        lio(t);
        return Value::lio(LioComp::ret(eval(t.kid(0), env)));
      case Op::LioBind:
      case Op::Catch: {
        lio(t);
        const LioComp m = eval(t.kid(0), env).as_lio();
        LioCont k = [self = *this, body = t.kid(1), x = t.binder(0), env](const Value& v) {
          return self.eval(body, extend(env, x, v)).as_lio();
        };
        if (t.op() == Op::Catch) return Value::lio(LioComp::catch_(m, std::move(k)));
        return Value::lio(LioComp::bind(m, std::move(k)));
      }
      case Op::Label: return Value::labeled(lio(t).label(t.label(), eval(t.kid(0), env)));
      case Op::LabelOf: return Value::label(lio(t).label_of(eval(t.kid(0), env).as_labeled()));
      case Op::Unlabel:
        lio(t);
        return Value::lio(LioComp::unlabel(eval(t.kid(0), env).as_labeled()));
      case Op::ToLabeled:
        lio(t);
        return Value::lio(LioComp::to_labeled(t.label(), eval(t.kid(0), env).as_lio()));
      case Op::Throw:
        lio(t);
        return Value::lio(LioComp::raise(Exception::user(t.name())));
    }
    stuck(t, "unhandled construct");
  }

 private:
  const MultefBackend& multef(const Term& t) const {
    if (!backend_) stuck(t, "faceted construct in an LIO evaluation");
    return *backend_;
  }
  const LioSemantics& lio(const Term& t) const {
    if (!sem_) stuck(t, "LIO construct in a faceted evaluation");
    return *sem_;
  }

  const MultefBackend* backend_;
  const LioSemantics* sem_;
};

Env make_env(const ValueEnv& inputs) {
  Env env;
  for (auto it = inputs.rbegin(); it != inputs.rend(); ++it) env = extend(env, it->first, it->second);
  return env;
}

}  // namespace

const MultefBackend& MultefBackend::secure() {
  static const SecureBackend instance;
  return instance;
}

const MultefBackend& MultefBackend::standard() {
  static const StandardBackend instance;
  return instance;
}

Value eval_facets(const MultefBackend& backend, const Term& t, const ValueEnv& inputs) {
  return Evaluator(&backend, nullptr).eval(t, make_env(inputs));
}

Value eval_lio(const Term& t, const ValueEnv& inputs, const LioSemantics& sem) {
  return Evaluator(nullptr, &sem).eval(t, make_env(inputs));
}

}  // namespace ifc
