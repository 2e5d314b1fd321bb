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

#include "ifckit/lio.hpp"

namespace ifc {

const Value& Config::value() const {
  if (!value_) throw HarnessError("configuration holds a thrown exception");
  return *value_;
}

const Exception& Config::exception() const {
  if (!exception_) throw HarnessError("configuration holds no exception");
  return *exception_;
}

std::string to_string(const Config& c) {
  const std::string result =
      c.is_ok() ? "(ok " + to_string(c.value()) + ")" : "(thrown " + to_string(c.exception()) + ")";
  return "(config " + result + " " + c.out_label().name() + ")";
}

Config LioSemantics::unlabel(const LabeledValue& lv, Label current) const {
  const Label raised = current.lattice()->join(current, label_of(lv));
  if (lv.is_ok()) return Config::ok(lv.value(), raised);
  return Config::thrown(lv.exception(), raised);
}

Config LioSemantics::to_labeled(Label target, const Config& inner, Label entry) const {
  const LatticeSpec& spec = *entry.lattice();
  if (!spec.leq(inner.out_label(), target)) {
    return Config::ok(Value::labeled(LabeledValue::delayed(Exception::ifc(target), target)), entry);
  }
  if (inner.is_ok()) {
    return Config::ok(Value::labeled(LabeledValue::ok(inner.value(), target)), entry);
  }
  return Config::ok(Value::labeled(LabeledValue::delayed(inner.exception(), target)), entry);
}

const LioSemantics& LioSemantics::standard() {
  static const LioSemantics instance;
  return instance;
}

namespace lio {
namespace {

class Runner {
 public:
  Runner(const LioSemantics& sem, RunStats* stats) : sem_(sem), stats_(stats) {}

  Config run(const LioComp& comp, Label current) {
    if (current.lattice() == nullptr) throw HarnessError("run from a label with no lattice");
    if (stats_) ++stats_->steps;
    Config out = step(comp, current);
    if (stats_) ++stats_->sentinel_checks;
    if (!current.lattice()->leq(current, out.out_label())) {
      throw SoundnessViolation("current label lowered from " + current.name() + " to " +
                               out.out_label().name());
    }
    return out;
  }

 private:
  Config step(const LioComp& comp, Label current) {
    const LioComp::Node& n = comp.node();
    switch (n.kind) {
      case LioComp::Kind::Return:
        return Config::ok(*n.value, current);
      case LioComp::Kind::Throw:
        return Config::thrown(*n.exception, current);
      case LioComp::Kind::Bind: {
        Config first = run(*n.inner, current);
        if (!first.is_ok()) return first;
        return run(n.cont(first.value()), first.out_label());
      }
      case LioComp::Kind::Catch: {
        Config first = run(*n.inner, current);
        if (first.is_ok()) return first;
        // The handler resumes at the label where the exception surfaced.
        return run(n.cont(Value::error(first.exception())), first.out_label());
      }
      case LioComp::Kind::Unlabel:
        return sem_.unlabel(*n.labeled, current);
      case LioComp::Kind::ToLabeled: {
        const Config inner = run(*n.inner, current);
        Config out = sem_.to_labeled(n.target, inner, current);
        if (stats_) ++stats_->sentinel_checks;
        if (out.out_label() != current) {
          throw SoundnessViolation("toLabeled " + n.target.name() + " did not restore " +
                                   current.name() + " (exited at " + out.out_label().name() +
                                   ")");
        }
        if (!out.is_ok() || out.value().kind() != Value::Kind::Labeled ||
            out.value().as_labeled().tag() != n.target) {
          throw SoundnessViolation("toLabeled " + n.target.name() +
                                   " did not yield a value labeled " + n.target.name());
        }
        return out;
      }
    }
    throw HarnessError("corrupt LIO computation node");
  }

  const LioSemantics& sem_;
  RunStats* stats_;
};

}  // namespace

Config run(const LioComp& comp, Label current, const LioSemantics& sem, RunStats* stats) {
  return Runner(sem, stats).run(comp, current);
}

}  // namespace lio
}  // namespace ifc
