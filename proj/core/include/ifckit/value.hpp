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

#ifndef IFCKIT_VALUE_HPP_
#define IFCKIT_VALUE_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>

#include "ifckit/lattice.hpp"

namespace ifc {

using Nat = std::uint64_t;

class Value;
using ValuePtr = std::shared_ptr<const Value>;

// LIO exceptions. An IFC error records only the target label of the failed
// toLabeled.
class Exception {
 public:
  static Exception user(std::string message) { return Exception(User{std::move(message)}); }
  static Exception ifc(Label target) { return Exception(Ifc{target}); }

  bool is_user() const { return std::holds_alternative<User>(rep_); }
  const std::string& message() const { return std::get<User>(rep_).message; }
  Label target() const { return std::get<Ifc>(rep_).target; }

  friend bool operator==(const Exception&, const Exception&) = default;

 private:
  struct User {
    std::string message;
    friend bool operator==(const User&, const User&) = default;
  };
  struct Ifc {
    Label target;
    friend bool operator==(const Ifc&, const Ifc&) = default;
  };
  explicit Exception(std::variant<User, Ifc> rep) : rep_(std::move(rep)) {}

  std::variant<User, Ifc> rep_;
};

// A payload (value or delayed exception) together with its public label.
class LabeledValue {
 public:
  static LabeledValue ok(Value value, Label tag);
  static LabeledValue delayed(Exception e, Label tag);

  Label tag() const { return tag_; }
  bool is_ok() const { return value_ != nullptr; }
  const Value& value() const;
  const Exception& exception() const;

  friend bool operator==(const LabeledValue& a, const LabeledValue& b);

 private:
  LabeledValue() = default;
  ValuePtr value_;
  std::optional<Exception> exception_;
  Label tag_;
};

// Faceted value: a label-guarded binary tree over values. Trees are kept
// exactly as built; no node is ever collapsed or pruned.
class FacTree {
 public:
  static FacTree leaf(Value v);
  static FacTree node(Label guard, FacTree priv, FacTree pub);

  bool is_leaf() const;
  const Value& value() const;
  Label guard() const;
  const FacTree& priv() const;
  const FacTree& pub() const;
  std::size_t size() const;

  friend bool operator==(const FacTree& a, const FacTree& b);

  struct Node;

 private:
  explicit FacTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Facet-erasing carrier: just a value, or nothing once any facet was built.
class StdFac {
 public:
  static StdFac just(Value v);
  static StdFac nothing() { return StdFac(); }

  bool is_just() const { return value_ != nullptr; }
  const Value& value() const;

  friend bool operator==(const StdFac& a, const StdFac& b);

 private:
  StdFac() = default;
  ValuePtr value_;
};

class LioComp;
using LioCont = std::function<LioComp(const Value&)>;

// A deferred LIO computation. Nodes are data; lio::run interprets them from a
// given current label.
class LioComp {
 public:
  enum class Kind : std::uint8_t { Return, Bind, Unlabel, ToLabeled, Throw, Catch };
  struct Node;

  static LioComp ret(Value v);
  static LioComp bind(LioComp m, LioCont k);
  static LioComp unlabel(LabeledValue lv);
  static LioComp to_labeled(Label target, LioComp m);
  static LioComp raise(Exception e);
  // The handler receives the exception as an error-typed value.
  static LioComp catch_(LioComp m, LioCont handler);

  Kind kind() const;
  const Node& node() const { return *node_; }

  // Identity, not behaviour: computations are compared semantically only by
  // the equivalence engine.
  friend bool operator==(const LioComp& a, const LioComp& b) { return a.node_ == b.node_; }

 private:
  explicit LioComp(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class Value {
 public:
  enum class Kind : std::uint8_t {
    Bool, Nat, Label, Error, Labeled, Lio, Inl, Inr, Pair, Fac, Maybe
  };

  static Value boolean(bool b) { return Value(Rep(std::in_place_index<0>, b)); }
  static Value nat(Nat n) { return Value(Rep(std::in_place_index<1>, n)); }
  static Value label(Label l) { return Value(Rep(std::in_place_index<2>, l)); }
  static Value error(Exception e) { return Value(Rep(std::in_place_index<3>, std::move(e))); }
  static Value labeled(LabeledValue lv) { return Value(Rep(std::in_place_index<4>, std::move(lv))); }
  static Value lio(LioComp c) { return Value(Rep(std::in_place_index<5>, std::move(c))); }
  static Value inl(Value v);
  static Value inr(Value v);
  static Value pair(Value a, Value b);
  static Value fac(FacTree f) { return Value(Rep(std::in_place_index<9>, std::move(f))); }
  static Value maybe(StdFac f) { return Value(Rep(std::in_place_index<10>, std::move(f))); }

  Kind kind() const { return static_cast<Kind>(rep_.index()); }

  bool as_bool() const;
  Nat as_nat() const;
  Label as_label() const;
  const Exception& as_error() const;
  const LabeledValue& as_labeled() const;
  const LioComp& as_lio() const;
  // Payload of an inl/inr.
  const Value& inner() const;
  const Value& first() const;
  const Value& second() const;
  const FacTree& as_fac() const;
  const StdFac& as_maybe() const;

  friend bool operator==(const Value& a, const Value& b);

 private:
  struct Inl {
    ValuePtr inner;
  };
  struct Inr {
    ValuePtr inner;
  };
  struct Pair {
    ValuePtr first;
    ValuePtr second;
  };
  using Rep = std::variant<bool, Nat, Label, Exception, LabeledValue, LioComp, Inl, Inr, Pair,
                           FacTree, StdFac>;
  explicit Value(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

struct FacTree::Node {
  std::optional<Value> leaf;
  Label guard;
  std::optional<FacTree> priv;
  std::optional<FacTree> pub;
  std::size_t size = 1;
};

struct LioComp::Node {
  Kind kind;
  std::optional<Value> value;          // Return
  std::optional<LioComp> inner;        // Bind, ToLabeled, Catch
  LioCont cont;                        // Bind continuation, Catch handler
  std::optional<LabeledValue> labeled; // Unlabel
  Label target;                        // ToLabeled
  std::optional<Exception> exception;  // Throw
};

const char* kind_name(Value::Kind k);

// Text forms, in the same s-expression syntax the value parser accepts:
//   true 3 (lbl H) (user-error "m") (ifc-error H) (labeled H v)
//   (labeled H (delayed e)) (inl v) (inr v) (pair a b)
//   (return v) (facet H p q) (just v) nothing <lio>
std::string to_string(const Value& v);
std::string to_string(const Exception& e);
std::string to_string(const FacTree& f);
std::string to_string(const StdFac& f);
std::string to_string(const LabeledValue& lv);

}  // namespace ifc

#endif  // IFCKIT_VALUE_HPP_
