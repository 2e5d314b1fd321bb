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

#include "ifckit/mutants.hpp"

#include <array>
#include <utility>

#include "ifckit/facets.hpp"

namespace ifc {
namespace {

constexpr std::array<std::pair<Mutant, const char*>, 7> kNames{{
    {Mutant::None, "none"},
    {Mutant::ProjectIgnoresGuard, "project-ignores-guard"},
    {Mutant::BindSwapsBranches, "bind-swaps-branches"},
    {Mutant::UnlabelNoRaise, "unlabel-no-raise"},
    {Mutant::ToLabeledNoRestore, "toLabeled-no-restore"},
    {Mutant::ToLabeledSkipsCheck, "toLabeled-skips-check"},
    {Mutant::LabelOfReturnsBottom, "labelOf-returns-bottom"},
}};

// Always follows the public branch.
const Value& project_ignoring_guard(Label, const FacTree& f) {
  const FacTree* t = &f;
  while (!t->is_leaf()) t = &t->pub();
  return t->value();
}

FacTree swapped_bind(const FacTree& f, const facets::Continuation& k) {
  if (f.is_leaf()) return k(f.value());
  return FacTree::node(f.guard(), swapped_bind(f.pub(), k), swapped_bind(f.priv(), k));
}

class BindSwapsBranches final : public MultefBackend {
 public:
  std::string_view name() const override { return "bind-swaps-branches"; }
  Value ret(Value v) const override { return MultefBackend::secure().ret(std::move(v)); }
  Value facet(Label guard, const Value& priv, const Value& pub) const override {
    return MultefBackend::secure().facet(guard, priv, pub);
  }
  Value bind(const Value& m, const Cont& k) const override {
    return Value::fac(swapped_bind(m.as_fac(), [&](const Value& v) { return k(v).as_fac(); }));
  }
};

class UnlabelNoRaise final : public LioSemantics {
 public:
  std::string_view name() const override { return "unlabel-no-raise"; }
  Config unlabel(const LabeledValue& lv, Label current) const override {
    if (lv.is_ok()) return Config::ok(lv.value(), current);
    return Config::thrown(lv.exception(), current);
  }
};

class ToLabeledNoRestore final : public LioSemantics {
 public:
  std::string_view name() const override { return "toLabeled-no-restore"; }
  Config to_labeled(Label target, const Config& inner, Label entry) const override {
    Config restored = LioSemantics::to_labeled(target, inner, entry);
    return Config::ok(restored.value(), inner.out_label());
  }
};

class ToLabeledSkipsCheck final : public LioSemantics {
 public:
  std::string_view name() const override { return "toLabeled-skips-check"; }
  Config to_labeled(Label target, const Config& inner, Label entry) const override {
    if (inner.is_ok()) return Config::ok(Value::labeled(LabeledValue::ok(inner.value(), target)), entry);
    return Config::ok(Value::labeled(LabeledValue::delayed(inner.exception(), target)), entry);
  }
};

class LabelOfReturnsBottom final : public LioSemantics {
 public:
  std::string_view name() const override { return "labelOf-returns-bottom"; }
  Label label_of(const LabeledValue& lv) const override { return lv.tag().lattice()->bottom(); }
};

}  // namespace

const char* mutant_name(Mutant m) {
  for (const auto& [k, name] : kNames) {
    if (k == m) return name;
  }
  return "?";
}

std::optional<Mutant> mutant_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames) {
    if (name == n) return k;
  }
  return std::nullopt;
}

const std::vector<Mutant>& all_mutants() {
  static const std::vector<Mutant> all{
      Mutant::ProjectIgnoresGuard,  Mutant::BindSwapsBranches,   Mutant::UnlabelNoRaise,
      Mutant::ToLabeledNoRestore,   Mutant::ToLabeledSkipsCheck, Mutant::LabelOfReturnsBottom,
  };
  return all;
}

const MultefBackend& multef_backend(Mutant m) {
  static const BindSwapsBranches swaps;
  if (m == Mutant::BindSwapsBranches) return swaps;
  return MultefBackend::secure();
}

const LioSemantics& lio_semantics(Mutant m) {
  static const UnlabelNoRaise no_raise;
  static const ToLabeledNoRestore no_restore;
  static const ToLabeledSkipsCheck skips_check;
  static const LabelOfReturnsBottom bottom;
  switch (m) {
    case Mutant::UnlabelNoRaise: return no_raise;
    case Mutant::ToLabeledNoRestore: return no_restore;
    case Mutant::ToLabeledSkipsCheck: return skips_check;
    case Mutant::LabelOfReturnsBottom: return bottom;
    default: return LioSemantics::standard();
  }
}

Projection projection(Mutant m) {
  if (m == Mutant::ProjectIgnoresGuard) return &project_ignoring_guard;
  return &facets::project;
}

}  // namespace ifc
