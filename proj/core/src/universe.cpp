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

#include "ifckit/universe.hpp"

#include "ifckit/facets.hpp"

namespace ifc {
namespace {

const std::vector<std::string>& message_pool() {
  static const std::vector<std::string> pool{"e0", "e1", "e2"};
  return pool;
}

[[noreturn]] void shape_mismatch(const Univ& u, const Value& v) {
  throw HarnessError("value " + to_string(v) + " does not have type " + u.text());
}

void expect(const Univ& u, const Value& v, Value::Kind k) {
  if (v.kind() != k) shape_mismatch(u, v);
}

Label random_label(Rng& rng, const LatticeSpec& spec) {
  return spec.label(static_cast<std::uint32_t>(rng.below(spec.size())));
}

FacTree gen_tree(Rng& rng, const LatticeSpec& spec, const Univ& leaf_type, int depth) {
  if (depth == 0 || rng.chance(2, 5)) return FacTree::leaf(gen_value(rng, spec, leaf_type));
  const Label guard = random_label(rng, spec);
  FacTree priv = gen_tree(rng, spec, leaf_type, depth - 1);
  FacTree pub = gen_tree(rng, spec, leaf_type, depth - 1);
  return FacTree::node(guard, std::move(priv), std::move(pub));
}

// Random tree whose projection at observer is exactly `graft`.
FacTree gen_tree_grafted(Rng& rng, const LatticeSpec& spec, Label observer,
                         const Univ& leaf_type, const Value& graft, int depth, bool on_path) {
  if (depth == 0 || rng.chance(2, 5)) {
    return FacTree::leaf(on_path ? graft : gen_value(rng, spec, leaf_type));
  }
  const Label guard = random_label(rng, spec);
  const bool visible = spec.leq(guard, observer);
  FacTree priv =
      gen_tree_grafted(rng, spec, observer, leaf_type, graft, depth - 1, on_path && visible);
  FacTree pub =
      gen_tree_grafted(rng, spec, observer, leaf_type, graft, depth - 1, on_path && !visible);
  return FacTree::node(guard, std::move(priv), std::move(pub));
}

bool result_equiv(const LatticeSpec& spec, Label observer, const Univ& u, const Config& c0,
                  const Config& c1, const LioSemantics& sem, RunStats* stats) {
  if (c0.is_ok() != c1.is_ok()) return false;
  if (!c0.is_ok()) return c0.exception() == c1.exception();
  return equiv(spec, observer, u, c0.value(), c1.value(), sem, stats);
}

}  // namespace

Univ Univ::make(Kind k, const Univ* l, const Univ* r) {
  auto n = std::make_shared<Node>();
  n->kind = k;
  if (l) n->left = *l;
  if (r) n->right = *r;
  n->depth = 1 + std::max(l ? l->depth() : 0, r ? r->depth() : 0);
  switch (k) {
    case Kind::Bool: n->text = "bool"; break;
    case Kind::Nat: n->text = "nat"; break;
    case Kind::Label: n->text = "label"; break;
    case Kind::Error: n->text = "error"; break;
    case Kind::Labeled: n->text = "(labeled " + l->text() + ")"; break;
    case Kind::Lio: n->text = "(lio " + l->text() + ")"; break;
    case Kind::Fac: n->text = "(fac " + l->text() + ")"; break;
    case Kind::Plus: n->text = "(plus " + l->text() + " " + r->text() + ")"; break;
    case Kind::Times: n->text = "(times " + l->text() + " " + r->text() + ")"; break;
  }
  return Univ(std::move(n));
}

Univ Univ::boolean() {
  static const Univ u = make(Kind::Bool, nullptr, nullptr);
  return u;
}
Univ Univ::nat() {
  static const Univ u = make(Kind::Nat, nullptr, nullptr);
  return u;
}
Univ Univ::label() {
  static const Univ u = make(Kind::Label, nullptr, nullptr);
  return u;
}
Univ Univ::error() {
  static const Univ u = make(Kind::Error, nullptr, nullptr);
  return u;
}
Univ Univ::labeled(Univ inner) { return make(Kind::Labeled, &inner, nullptr); }
Univ Univ::lio(Univ inner) { return make(Kind::Lio, &inner, nullptr); }
Univ Univ::fac(Univ inner) { return make(Kind::Fac, &inner, nullptr); }
Univ Univ::plus(Univ left, Univ right) { return make(Kind::Plus, &left, &right); }
Univ Univ::times(Univ left, Univ right) { return make(Kind::Times, &left, &right); }

const Univ& Univ::inner() const {
  if (kind() != Kind::Labeled && kind() != Kind::Lio && kind() != Kind::Fac) {
    throw HarnessError("type " + text() + " has no inner type");
  }
  return *node_->left;
}

const Univ& Univ::left() const {
  if (kind() != Kind::Plus && kind() != Kind::Times) {
    throw HarnessError("type " + text() + " has no operands");
  }
  return *node_->left;
}

const Univ& Univ::right() const {
  if (kind() != Kind::Plus && kind() != Kind::Times) {
    throw HarnessError("type " + text() + " has no operands");
  }
  return *node_->right;
}

bool Univ::mentions(Kind k) const {
  if (kind() == k) return true;
  if (node_->left && node_->left->mentions(k)) return true;
  return node_->right && node_->right->mentions(k);
}

const char* family_name(Family f) {
  switch (f) {
    case Family::Neutral: return "neutral";
    case Family::Facets: return "facets";
    case Family::Lio: return "lio";
  }
  return "?";
}

Family family_of(const Univ& u) {
  const bool fac = u.mentions(Univ::Kind::Fac);
  const bool lio = u.mentions(Univ::Kind::Lio) || u.mentions(Univ::Kind::Labeled) ||
                   u.mentions(Univ::Kind::Label);
  if (fac && lio) throw TypeError("type " + u.text() + " mixes faceted and LIO types");
  if (fac) return Family::Facets;
  if (lio) return Family::Lio;
  return Family::Neutral;
}

bool el_check(const Univ& u, const Value& v, const LatticeSpec* deep, const LioSemantics& sem) {
  switch (u.kind()) {
    case Univ::Kind::Bool: return v.kind() == Value::Kind::Bool;
    case Univ::Kind::Nat: return v.kind() == Value::Kind::Nat;
    case Univ::Kind::Label: return v.kind() == Value::Kind::Label;
    case Univ::Kind::Error: return v.kind() == Value::Kind::Error;
    case Univ::Kind::Labeled: {
      if (v.kind() != Value::Kind::Labeled) return false;
      const auto& lv = v.as_labeled();
      return !lv.is_ok() || el_check(u.inner(), lv.value(), deep, sem);
    }
    case Univ::Kind::Lio: {
      if (v.kind() != Value::Kind::Lio) return false;
      if (deep == nullptr) return true;
      const Univ inner = u.inner();
      for (const Label l : deep->labels()) {
        const Config c = lio::run(v.as_lio(), l, sem);
        if (c.is_ok() && !el_check(inner, c.value(), deep, sem)) return false;
      }
      return true;
    }
    case Univ::Kind::Plus:
      if (v.kind() == Value::Kind::Inl) return el_check(u.left(), v.inner(), deep, sem);
      if (v.kind() == Value::Kind::Inr) return el_check(u.right(), v.inner(), deep, sem);
      return false;
    case Univ::Kind::Times: {
      if (v.kind() != Value::Kind::Pair) return false;
      const Univ l = u.left();
      const Univ r = u.right();
      return el_check(l, v.first(), deep, sem) && el_check(r, v.second(), deep, sem);
    }
    case Univ::Kind::Fac: {
      const Univ inner = u.inner();
      if (v.kind() == Value::Kind::Maybe) {
        return !v.as_maybe().is_just() || el_check(inner, v.as_maybe().value(), deep, sem);
      }
      if (v.kind() != Value::Kind::Fac) return false;
      std::vector<const FacTree*> stack{&v.as_fac()};
      while (!stack.empty()) {
        const FacTree* t = stack.back();
        stack.pop_back();
        if (t->is_leaf()) {
          if (!el_check(inner, t->value(), deep, sem)) return false;
        } else {
          stack.push_back(&t->priv());
          stack.push_back(&t->pub());
        }
      }
      return true;
    }
  }
  return false;
}

bool labels_equiv(const LatticeSpec& spec, Label observer, Label a, Label b) {
  if (spec.leq(a, observer) || spec.leq(b, observer)) return a == b;
  return true;
}

bool config_equiv(const LatticeSpec& spec, Label observer, const Univ& u, const Config& c0,
                  const Config& c1, const LioSemantics& sem, RunStats* stats) {
  if (!labels_equiv(spec, observer, c0.out_label(), c1.out_label())) return false;
  if (spec.leq(c0.out_label(), observer) && spec.leq(c1.out_label(), observer)) {
    return result_equiv(spec, observer, u, c0, c1, sem, stats);
  }
  return true;
}

bool equiv(const LatticeSpec& spec, Label observer, const Univ& u, const Value& v0,
           const Value& v1, const LioSemantics& sem, RunStats* stats) {
  switch (u.kind()) {
    case Univ::Kind::Bool:
      expect(u, v0, Value::Kind::Bool);
      expect(u, v1, Value::Kind::Bool);
      return v0 == v1;
    case Univ::Kind::Nat:
      expect(u, v0, Value::Kind::Nat);
      expect(u, v1, Value::Kind::Nat);
      return v0 == v1;
    case Univ::Kind::Label:
      expect(u, v0, Value::Kind::Label);
      expect(u, v1, Value::Kind::Label);
      return v0 == v1;
    case Univ::Kind::Error:
      expect(u, v0, Value::Kind::Error);
      expect(u, v1, Value::Kind::Error);
      return v0 == v1;
    case Univ::Kind::Times: {
      expect(u, v0, Value::Kind::Pair);
      expect(u, v1, Value::Kind::Pair);
      const Univ l = u.left();
      const Univ r = u.right();
      return equiv(spec, observer, l, v0.first(), v1.first(), sem, stats) &&
             equiv(spec, observer, r, v0.second(), v1.second(), sem, stats);
    }
    case Univ::Kind::Plus: {
      for (const Value* v : {&v0, &v1}) {
        if (v->kind() != Value::Kind::Inl && v->kind() != Value::Kind::Inr) shape_mismatch(u, *v);
      }
      if (v0.kind() != v1.kind()) return false;
      const Univ side = v0.kind() == Value::Kind::Inl ? u.left() : u.right();
      return equiv(spec, observer, side, v0.inner(), v1.inner(), sem, stats);
    }
    case Univ::Kind::Labeled: {
      expect(u, v0, Value::Kind::Labeled);
      expect(u, v1, Value::Kind::Labeled);
      const auto& lv0 = v0.as_labeled();
      const auto& lv1 = v1.as_labeled();
      if (lv0.tag() != lv1.tag()) return false;
      if (!spec.leq(lv0.tag(), observer)) return true;
      if (lv0.is_ok() != lv1.is_ok()) return false;
      if (!lv0.is_ok()) return lv0.exception() == lv1.exception();
      return equiv(spec, observer, u.inner(), lv0.value(), lv1.value(), sem, stats);
    }
    case Univ::Kind::Lio: {
      expect(u, v0, Value::Kind::Lio);
      expect(u, v1, Value::Kind::Lio);
      const Univ inner = u.inner();
      std::vector<Config> runs0;
      std::vector<Config> runs1;
      const auto labels = spec.labels();
      for (const Label l : labels) {
        runs0.push_back(lio::run(v0.as_lio(), l, sem, stats));
        runs1.push_back(lio::run(v1.as_lio(), l, sem, stats));
      }
      for (std::size_t a = 0; a < labels.size(); ++a) {
        for (std::size_t b = 0; b < labels.size(); ++b) {
          if (!labels_equiv(spec, observer, labels[a], labels[b])) continue;
          if (!config_equiv(spec, observer, inner, runs0[a], runs1[b], sem, stats)) return false;
        }
      }
      return true;
    }
    case Univ::Kind::Fac: {
      const Univ inner = u.inner();
      if (v0.kind() == Value::Kind::Fac && v1.kind() == Value::Kind::Fac) {
        return equiv(spec, observer, inner, facets::project(observer, v0.as_fac()),
                     facets::project(observer, v1.as_fac()), sem, stats);
      }
      if (v0.kind() == Value::Kind::Maybe && v1.kind() == Value::Kind::Maybe) {
        const auto& m0 = v0.as_maybe();
        const auto& m1 = v1.as_maybe();
        if (m0.is_just() != m1.is_just()) return false;
        return !m0.is_just() || equiv(spec, observer, inner, m0.value(), m1.value(), sem, stats);
      }
      shape_mismatch(u, v0.kind() == Value::Kind::Fac ? v1 : v0);
    }
  }
  return false;
}

Value gen_value(Rng& rng, const LatticeSpec& spec, const Univ& u) {
  switch (u.kind()) {
    case Univ::Kind::Bool: return Value::boolean(rng.coin());
    case Univ::Kind::Nat: return Value::nat(rng.chance(3, 5) ? rng.below(4) : rng.below(256));
    case Univ::Kind::Label: return Value::label(random_label(rng, spec));
    case Univ::Kind::Error: return Value::error(Exception::user(rng.pick(message_pool())));
    case Univ::Kind::Labeled: {
      const Label tag = random_label(rng, spec);
      if (rng.chance(17, 20)) {
        return Value::labeled(LabeledValue::ok(gen_value(rng, spec, u.inner()), tag));
      }
      return Value::labeled(LabeledValue::delayed(Exception::user(rng.pick(message_pool())), tag));
    }
    case Univ::Kind::Plus: {
      const Univ l = u.left();
      const Univ r = u.right();
      return rng.coin() ? Value::inl(gen_value(rng, spec, l)) : Value::inr(gen_value(rng, spec, r));
    }
    case Univ::Kind::Times: {
      const Univ l = u.left();
      const Univ r = u.right();
      Value a = gen_value(rng, spec, l);
      Value b = gen_value(rng, spec, r);
      return Value::pair(std::move(a), std::move(b));
    }
    case Univ::Kind::Fac: return Value::fac(gen_tree(rng, spec, u.inner(), 2));
    case Univ::Kind::Lio: break;
  }
  throw HarnessError("no generator for input type " + u.text());
}

std::pair<Value, Value> gen_equiv_pair(Rng& rng, const LatticeSpec& spec, Label observer,
                                       const Univ& u) {
  switch (u.kind()) {
    case Univ::Kind::Bool:
    case Univ::Kind::Nat:
    case Univ::Kind::Label:
    case Univ::Kind::Error: {
      Value v = gen_value(rng, spec, u);
      return {v, v};
    }
    case Univ::Kind::Times: {
      const Univ l = u.left();
      const Univ r = u.right();
      auto [a0, a1] = gen_equiv_pair(rng, spec, observer, l);
      auto [b0, b1] = gen_equiv_pair(rng, spec, observer, r);
      return {Value::pair(a0, b0), Value::pair(a1, b1)};
    }
    case Univ::Kind::Plus: {
      const bool left = rng.coin();
      const Univ side = left ? u.left() : u.right();
      auto [a0, a1] = gen_equiv_pair(rng, spec, observer, side);
      if (left) return {Value::inl(a0), Value::inl(a1)};
      return {Value::inr(a0), Value::inr(a1)};
    }
    case Univ::Kind::Labeled: {
      const Label tag = random_label(rng, spec);
      const Univ inner = u.inner();
      if (!spec.leq(tag, observer)) {
        auto draw = [&] {
          if (rng.chance(17, 20)) return LabeledValue::ok(gen_value(rng, spec, inner), tag);
          return LabeledValue::delayed(Exception::user(rng.pick(message_pool())), tag);
        };
        LabeledValue a = draw();
        LabeledValue b = draw();
        return {Value::labeled(std::move(a)), Value::labeled(std::move(b))};
      }
      if (rng.chance(17, 20)) {
        auto [a0, a1] = gen_equiv_pair(rng, spec, observer, inner);
        return {Value::labeled(LabeledValue::ok(a0, tag)), Value::labeled(LabeledValue::ok(a1, tag))};
      }
      const Exception e = Exception::user(rng.pick(message_pool()));
      return {Value::labeled(LabeledValue::delayed(e, tag)),
              Value::labeled(LabeledValue::delayed(e, tag))};
    }
    case Univ::Kind::Fac: {
      const Univ inner = u.inner();
      auto [a0, a1] = gen_equiv_pair(rng, spec, observer, inner);
      FacTree t0 = gen_tree_grafted(rng, spec, observer, inner, a0, 2, true);
      FacTree t1 = gen_tree_grafted(rng, spec, observer, inner, a1, 2, true);
      return {Value::fac(std::move(t0)), Value::fac(std::move(t1))};
    }
    case Univ::Kind::Lio: break;
  }
  throw HarnessError("no equivalent-pair generator for input type " + u.text());
}

std::vector<Value> enum_values(const LatticeSpec& spec, const Univ& u) {
  std::vector<Value> out;
  switch (u.kind()) {
    case Univ::Kind::Bool:
      out = {Value::boolean(false), Value::boolean(true)};
      break;
    case Univ::Kind::Nat:
      out = {Value::nat(0), Value::nat(1)};
      break;
    case Univ::Kind::Label:
      for (const Label l : spec.labels()) out.push_back(Value::label(l));
      break;
    case Univ::Kind::Error:
      out = {Value::error(Exception::user("e"))};
      break;
    case Univ::Kind::Labeled: {
      const auto inner = enum_values(spec, u.inner());
      for (const Label tag : spec.labels()) {
        for (const auto& v : inner) out.push_back(Value::labeled(LabeledValue::ok(v, tag)));
        out.push_back(Value::labeled(LabeledValue::delayed(Exception::user("e"), tag)));
      }
      break;
    }
    case Univ::Kind::Plus: {
      for (const auto& v : enum_values(spec, u.left())) out.push_back(Value::inl(v));
      for (const auto& v : enum_values(spec, u.right())) out.push_back(Value::inr(v));
      break;
    }
    case Univ::Kind::Times: {
      const auto ls = enum_values(spec, u.left());
      const auto rs = enum_values(spec, u.right());
      for (const auto& a : ls) {
        for (const auto& b : rs) out.push_back(Value::pair(a, b));
      }
      break;
    }
    case Univ::Kind::Fac: {
      const auto leaves = enum_values(spec, u.inner());
      for (const auto& v : leaves) out.push_back(Value::fac(FacTree::leaf(v)));
      for (const Label guard : spec.labels()) {
        for (const auto& p : leaves) {
          for (const auto& q : leaves) {
            out.push_back(Value::fac(FacTree::node(guard, FacTree::leaf(p), FacTree::leaf(q))));
          }
        }
      }
      break;
    }
    case Univ::Kind::Lio:
      throw HarnessError("lio-typed inputs are not enumerated");
  }
  return out;
}

namespace {

Univ gen_base(Rng& rng) { return rng.coin() ? Univ::boolean() : Univ::nat(); }

}  // namespace

Univ gen_input_type(Rng& rng, Family family, std::size_t max_depth) {
  if (max_depth <= 1) return gen_base(rng);
  // base, wrapper (fac or labeled), plus, times
  const unsigned weights[] = {3, family == Family::Neutral ? 0u : 4u, 1, 1};
  switch (rng.weighted(weights)) {
    case 0: return gen_base(rng);
    case 1: {
      Univ inner = gen_input_type(rng, family, max_depth - 1);
      return family == Family::Facets ? Univ::fac(inner) : Univ::labeled(inner);
    }
    case 2: {
      Univ l = gen_input_type(rng, family, max_depth - 1);
      Univ r = gen_input_type(rng, family, max_depth - 1);
      return Univ::plus(l, r);
    }
    default: {
      Univ l = gen_input_type(rng, family, max_depth - 1);
      Univ r = gen_input_type(rng, family, max_depth - 1);
      return Univ::times(l, r);
    }
  }
}

Univ gen_output_type(Rng& rng, Family family, std::size_t max_depth) {
  if (family != Family::Lio) return gen_input_type(rng, family, max_depth);
  if (max_depth <= 1) {
    const unsigned weights[] = {2, 2, 1};
    switch (rng.weighted(weights)) {
      case 0: return Univ::boolean();
      case 1: return Univ::nat();
      default: return Univ::label();
    }
  }
  // lio, labeled, label, base, plus, times
  const unsigned weights[] = {6, 2, 1, 2, 1, 1};
  switch (rng.weighted(weights)) {
    case 0: return Univ::lio(gen_output_type(rng, family, max_depth - 1));
    case 1: return Univ::labeled(gen_input_type(rng, family, max_depth - 1));
    case 2: return Univ::label();
    case 3: return gen_base(rng);
    case 4: {
      Univ l = gen_output_type(rng, family, max_depth - 1);
      Univ r = gen_output_type(rng, family, max_depth - 1);
      return Univ::plus(l, r);
    }
    default: {
      Univ l = gen_output_type(rng, family, max_depth - 1);
      Univ r = gen_output_type(rng, family, max_depth - 1);
      return Univ::times(l, r);
    }
  }
}

}  // namespace ifc
