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

#include "ifckit/value.hpp"

#include <sstream>

namespace ifc {
namespace {

[[noreturn]] void wrong_kind(const char* wanted, Value::Kind got) {
  throw HarnessError(std::string("expected ") + wanted + " value, got " + kind_name(got));
}

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

const char* kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::Bool: return "bool";
    case Value::Kind::Nat: return "nat";
    case Value::Kind::Label: return "label";
    case Value::Kind::Error: return "error";
    case Value::Kind::Labeled: return "labeled";
    case Value::Kind::Lio: return "lio";
    case Value::Kind::Inl: return "inl";
    case Value::Kind::Inr: return "inr";
    case Value::Kind::Pair: return "pair";
    case Value::Kind::Fac: return "fac";
    case Value::Kind::Maybe: return "maybe";
  }
  return "?";
}

// LabeledValue

LabeledValue LabeledValue::ok(Value value, Label tag) {
  LabeledValue lv;
  lv.value_ = std::make_shared<const Value>(std::move(value));
  lv.tag_ = tag;
  return lv;
}

LabeledValue LabeledValue::delayed(Exception e, Label tag) {
  LabeledValue lv;
  lv.exception_ = std::move(e);
  lv.tag_ = tag;
  return lv;
}

const Value& LabeledValue::value() const {
  if (!value_) throw HarnessError("labeled value holds a delayed exception");
  return *value_;
}

const Exception& LabeledValue::exception() const {
  if (!exception_) throw HarnessError("labeled value holds no delayed exception");
  return *exception_;
}

bool operator==(const LabeledValue& a, const LabeledValue& b) {
  if (a.tag_ != b.tag_ || a.is_ok() != b.is_ok()) return false;
  return a.is_ok() ? *a.value_ == *b.value_ : *a.exception_ == *b.exception_;
}

// FacTree

FacTree FacTree::leaf(Value v) {
  auto n = std::make_shared<Node>();
  n->leaf.emplace(std::move(v));
  return FacTree(std::move(n));
}

FacTree FacTree::node(Label guard, FacTree priv, FacTree pub) {
  auto n = std::make_shared<Node>();
  n->guard = guard;
  n->size = 1 + priv.size() + pub.size();
  n->priv.emplace(std::move(priv));
  n->pub.emplace(std::move(pub));
  return FacTree(std::move(n));
}

bool FacTree::is_leaf() const { return node_->leaf.has_value(); }

const Value& FacTree::value() const {
  if (!node_->leaf) throw HarnessError("facet node has no leaf value");
  return *node_->leaf;
}

Label FacTree::guard() const {
  if (node_->leaf) throw HarnessError("leaf has no guard");
  return node_->guard;
}

const FacTree& FacTree::priv() const {
  if (node_->leaf) throw HarnessError("leaf has no branches");
  return *node_->priv;
}

const FacTree& FacTree::pub() const {
  if (node_->leaf) throw HarnessError("leaf has no branches");
  return *node_->pub;
}

std::size_t FacTree::size() const { return node_->size; }

bool operator==(const FacTree& a, const FacTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.value() == b.value();
  return a.guard() == b.guard() && a.priv() == b.priv() && a.pub() == b.pub();
}

// StdFac

StdFac StdFac::just(Value v) {
  StdFac f;
  f.value_ = std::make_shared<const Value>(std::move(v));
  return f;
}

const Value& StdFac::value() const {
  if (!value_) throw HarnessError("nothing has no value");
  return *value_;
}

bool operator==(const StdFac& a, const StdFac& b) {
  if (a.is_just() != b.is_just()) return false;
  return !a.is_just() || *a.value_ == *b.value_;
}

// LioComp

LioComp LioComp::ret(Value v) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Return;
  n->value.emplace(std::move(v));
  return LioComp(std::move(n));
}

LioComp LioComp::bind(LioComp m, LioCont k) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Bind;
  n->inner.emplace(std::move(m));
  n->cont = std::move(k);
  return LioComp(std::move(n));
}

LioComp LioComp::unlabel(LabeledValue lv) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Unlabel;
  n->labeled.emplace(std::move(lv));
  return LioComp(std::move(n));
}

LioComp LioComp::to_labeled(Label target, LioComp m) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::ToLabeled;
  n->target = target;
  n->inner.emplace(std::move(m));
  return LioComp(std::move(n));
}

LioComp LioComp::raise(Exception e) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Throw;
  n->exception.emplace(std::move(e));
  return LioComp(std::move(n));
}

LioComp LioComp::catch_(LioComp m, LioCont handler) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Catch;
  n->inner.emplace(std::move(m));
  n->cont = std::move(handler);
  return LioComp(std::move(n));
}

LioComp::Kind LioComp::kind() const { return node_->kind; }

// Value

Value Value::inl(Value v) {
  return Value(Rep(std::in_place_index<6>, Inl{std::make_shared<const Value>(std::move(v))}));
}

Value Value::inr(Value v) {
  return Value(Rep(std::in_place_index<7>, Inr{std::make_shared<const Value>(std::move(v))}));
}

Value Value::pair(Value a, Value b) {
  return Value(Rep(std::in_place_index<8>, Pair{std::make_shared<const Value>(std::move(a)),
                                                 std::make_shared<const Value>(std::move(b))}));
}

bool Value::as_bool() const {
  if (kind() != Kind::Bool) wrong_kind("bool", kind());
  return std::get<0>(rep_);
}

Nat Value::as_nat() const {
  if (kind() != Kind::Nat) wrong_kind("nat", kind());
  return std::get<1>(rep_);
}

Label Value::as_label() const {
  if (kind() != Kind::Label) wrong_kind("label", kind());
  return std::get<2>(rep_);
}

const Exception& Value::as_error() const {
  if (kind() != Kind::Error) wrong_kind("error", kind());
  return std::get<3>(rep_);
}

const LabeledValue& Value::as_labeled() const {
  if (kind() != Kind::Labeled) wrong_kind("labeled", kind());
  return std::get<4>(rep_);
}

const LioComp& Value::as_lio() const {
  if (kind() != Kind::Lio) wrong_kind("lio", kind());
  return std::get<5>(rep_);
}

const Value& Value::inner() const {
  if (kind() == Kind::Inl) return *std::get<6>(rep_).inner;
  if (kind() == Kind::Inr) return *std::get<7>(rep_).inner;
  wrong_kind("inl/inr", kind());
}

const Value& Value::first() const {
  if (kind() != Kind::Pair) wrong_kind("pair", kind());
  return *std::get<8>(rep_).first;
}

const Value& Value::second() const {
  if (kind() != Kind::Pair) wrong_kind("pair", kind());
  return *std::get<8>(rep_).second;
}

const FacTree& Value::as_fac() const {
  if (kind() != Kind::Fac) wrong_kind("fac", kind());
  return std::get<9>(rep_);
}

const StdFac& Value::as_maybe() const {
  if (kind() != Kind::Maybe) wrong_kind("maybe", kind());
  return std::get<10>(rep_);
}

bool operator==(const Value& a, const Value& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Value::Kind::Bool: return a.as_bool() == b.as_bool();
    case Value::Kind::Nat: return a.as_nat() == b.as_nat();
    case Value::Kind::Label: return a.as_label() == b.as_label();
    case Value::Kind::Error: return a.as_error() == b.as_error();
    case Value::Kind::Labeled: return a.as_labeled() == b.as_labeled();
    case Value::Kind::Lio: return a.as_lio() == b.as_lio();
    case Value::Kind::Inl:
    case Value::Kind::Inr: return a.inner() == b.inner();
    case Value::Kind::Pair: return a.first() == b.first() && a.second() == b.second();
    case Value::Kind::Fac: return a.as_fac() == b.as_fac();
    case Value::Kind::Maybe: return a.as_maybe() == b.as_maybe();
  }
  return false;
}

// Printing

std::string to_string(const Exception& e) {
  if (e.is_user()) return "(user-error " + quote(e.message()) + ")";
  return "(ifc-error " + e.target().name() + ")";
}

std::string to_string(const LabeledValue& lv) {
  const std::string payload =
      lv.is_ok() ? to_string(lv.value()) : "(delayed " + to_string(lv.exception()) + ")";
  return "(labeled " + lv.tag().name() + " " + payload + ")";
}

std::string to_string(const FacTree& f) {
  if (f.is_leaf()) return "(return " + to_string(f.value()) + ")";
  return "(facet " + f.guard().name() + " " + to_string(f.priv()) + " " + to_string(f.pub()) +
         ")";
}

std::string to_string(const StdFac& f) {
  return f.is_just() ? "(just " + to_string(f.value()) + ")" : "nothing";
}

std::string to_string(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Bool: return v.as_bool() ? "true" : "false";
    case Value::Kind::Nat: return std::to_string(v.as_nat());
    case Value::Kind::Label: return "(lbl " + v.as_label().name() + ")";
    case Value::Kind::Error: return to_string(v.as_error());
    case Value::Kind::Labeled: return to_string(v.as_labeled());
    case Value::Kind::Lio: return "<lio>";
    case Value::Kind::Inl: return "(inl " + to_string(v.inner()) + ")";
    case Value::Kind::Inr: return "(inr " + to_string(v.inner()) + ")";
    case Value::Kind::Pair:
      return "(pair " + to_string(v.first()) + " " + to_string(v.second()) + ")";
    case Value::Kind::Fac: return to_string(v.as_fac());
    case Value::Kind::Maybe: return to_string(v.as_maybe());
  }
  return "?";
}

}  // namespace ifc
