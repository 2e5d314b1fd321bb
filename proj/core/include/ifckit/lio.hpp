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

#ifndef IFCKIT_LIO_HPP_
#define IFCKIT_LIO_HPP_

#include <cstdint>
#include <string_view>

#include "ifckit/value.hpp"

namespace ifc {

// Outcome of running an LIO computation: a value or a thrown exception, and
// the current label on exit.
class Config {
 public:
  static Config ok(Value v, Label out) { return Config(std::move(v), std::nullopt, out); }
  static Config thrown(Exception e, Label out) { return Config(std::nullopt, std::move(e), out); }

  bool is_ok() const { return value_.has_value(); }
  const Value& value() const;
  const Exception& exception() const;
  Label out_label() const { return out_; }

  friend bool operator==(const Config&, const Config&) = default;

 private:
  Config(std::optional<Value> v, std::optional<Exception> e, Label out)
      : value_(std::move(v)), exception_(std::move(e)), out_(out) {}

  std::optional<Value> value_;
  std::optional<Exception> exception_;
  Label out_;
};

std::string to_string(const Config& c);

// The label-sensitive primitives of LIO. The run engine owns sequencing
// (return, bind, throw, catch) and delegates these operations here; the
// harness substitutes faulty subclasses as negative controls.
class LioSemantics {
 public:
  virtual ~LioSemantics() = default;

  virtual std::string_view name() const { return "sec"; }
  virtual LabeledValue label(Label l, Value v) const { return LabeledValue::ok(std::move(v), l); }
  virtual Label label_of(const LabeledValue& lv) const { return lv.tag(); }
  // Raises the current label by label_of(lv), then yields the payload or
  // re-throws the delayed exception.
  virtual Config unlabel(const LabeledValue& lv, Label current) const;
  // Packages the inner outcome at `target` and restores `entry`, the current
  // label toLabeled started from. Failures become delayed exceptions.
  virtual Config to_labeled(Label target, const Config& inner, Label entry) const;

  static const LioSemantics& standard();
};

// Counters filled in by run; sentinel checks are the monotonicity and
// restoration assertions.
struct RunStats {
  std::uint64_t steps = 0;
  std::uint64_t sentinel_checks = 0;
};

namespace lio {

// Runs comp from current label `current`. Throws SoundnessViolation if any
// step lowers the current label or a toLabeled fails to restore it.
Config run(const LioComp& comp, Label current,
           const LioSemantics& sem = LioSemantics::standard(), RunStats* stats = nullptr);

inline LioComp lio_return(Value v) { return LioComp::ret(std::move(v)); }
inline LioComp lio_bind(LioComp m, LioCont k) { return LioComp::bind(std::move(m), std::move(k)); }
inline LabeledValue label(Label l, Value v) { return LabeledValue::ok(std::move(v), l); }
inline Label label_of(const LabeledValue& lv) { return lv.tag(); }
inline LioComp unlabel(LabeledValue lv) { return LioComp::unlabel(std::move(lv)); }
inline LioComp to_labeled(Label l, LioComp m) { return LioComp::to_labeled(l, std::move(m)); }
inline LioComp lio_throw(Exception e) { return LioComp::raise(std::move(e)); }
inline LioComp lio_catch(LioComp m, LioCont h) { return LioComp::catch_(std::move(m), std::move(h)); }

}  // namespace lio
}  // namespace ifc

#endif  // IFCKIT_LIO_HPP_
