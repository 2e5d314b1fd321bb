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

#include "ifckit/termgen.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>

namespace ifc {
namespace {

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) { return (a == kInf || b == kInf) ? kInf : a + b; }

void close_over(const Univ& u, std::set<Univ>& out) {
  if (!out.insert(u).second) return;
  switch (u.kind()) {
    case Univ::Kind::Labeled:
    case Univ::Kind::Lio:
    case Univ::Kind::Fac:
      close_over(u.inner(), out);
      break;
    case Univ::Kind::Plus:
    case Univ::Kind::Times:
      close_over(u.left(), out);
      close_over(u.right(), out);
      break;
    default:
      break;
  }
}

Family family_for(const TypeEnv& inputs, const Univ& out) {
  Family f = family_of(out);
  for (const auto& [name, type] : inputs) {
    const Family g = family_of(type);
    if (g == Family::Neutral) continue;
    if (f != Family::Neutral && f != g) throw TypeError("inputs and output mix interface families");
    f = g;
  }
  return f;
}

std::vector<Univ> type_set(const TypeEnv& inputs, const Univ& out, Family family,
                           bool implicit_nat) {
  std::set<Univ> s;
  for (const auto& [name, type] : inputs) close_over(type, s);
  close_over(out, s);
  close_over(Univ::boolean(), s);
  if (implicit_nat) close_over(Univ::nat(), s);
  if (family == Family::Facets) {
    const std::vector<Univ> base(s.begin(), s.end());
    for (const Univ& a : base) {
      if (!a.mentions(Univ::Kind::Fac)) close_over(Univ::fac(a), s);
    }
  } else if (family == Family::Lio) {
    close_over(Univ::label(), s);
    close_over(Univ::error(), s);
    const std::vector<Univ> plain(s.begin(), s.end());
    for (const Univ& a : plain) {
      if (!a.mentions(Univ::Kind::Lio) && !a.mentions(Univ::Kind::Labeled) && a.depth() <= 2) {
        close_over(Univ::labeled(a), s);
      }
    }
    const std::vector<Univ> pure(s.begin(), s.end());
    for (const Univ& a : pure) {
      if (a.kind() != Univ::Kind::Lio) close_over(Univ::lio(a), s);
    }
  }
  return {s.begin(), s.end()};
}

struct Slot {
  std::size_t type;
  // Type of the variable the slot binds, if any.
  std::optional<std::size_t> bound;
};

struct Prod {
  Op op;
  NatOp nat_op = NatOp::Add;
  bool labeled = false;  // takes a lattice label (fac-facet, label, to-labeled)
  std::vector<Slot> slots;
};

struct Scope {
  std::vector<std::pair<std::string, std::size_t>> vars;  // name, type index
  std::size_t binders = 0;
};

class Grammar {
 public:
  Grammar(const LatticeSpec& spec, const TypeEnv& inputs, const Univ& out,
          bool implicit_nat = true)
      : spec_(spec),
        family_(family_for(inputs, out)),
        types_(type_set(inputs, out, family_, implicit_nat)) {
    for (std::size_t i = 0; i < types_.size(); ++i) index_.emplace(types_[i].text(), i);
    prods_.resize(types_.size());
    for (std::size_t g = 0; g < types_.size(); ++g) build(g);
    for (const auto& [name, type] : inputs) top_.vars.emplace_back(name, id(type));
  }

  std::size_t id(const Univ& u) const {
    auto it = index_.find(u.text());
    if (it == index_.end()) throw HarnessError("type " + u.text() + " outside the grammar");
    return it->second;
  }
  const Univ& type(std::size_t i) const { return types_[i]; }
  const std::vector<Univ>& types() const { return types_; }
  const std::vector<Prod>& prods(std::size_t g) const { return prods_[g]; }
  const Scope& top() const { return top_; }
  const LatticeSpec& spec() const { return spec_; }
  Family family() const { return family_; }

  Scope bind(const Scope& s, std::size_t type, std::string* name) const {
    Scope inner = s;
    *name = "v" + std::to_string(s.binders);
    inner.vars.emplace_back(*name, type);
    ++inner.binders;
    return inner;
  }

  // Leaf alternatives for goal g: literals and throw ignore the scope.
  bool has_bool_lit(std::size_t g) const { return types_[g].kind() == Univ::Kind::Bool; }
  bool has_nat_lit(std::size_t g) const { return types_[g].kind() == Univ::Kind::Nat; }
  bool has_throw(std::size_t g) const {
    return family_ == Family::Lio && types_[g].kind() == Univ::Kind::Lio;
  }

  // Minimum term sizes per type in scope s, ignoring variables bound inside
  // the term. This over-approximates the true minimum, so a slot budget of at
  // least this size can always be filled.
  const std::vector<std::size_t>& min_sizes(const Scope& s) const {
    std::vector<std::size_t> key;
    for (const auto& v : s.vars) key.push_back(v.second);
    std::sort(key.begin(), key.end());
    key.erase(std::unique(key.begin(), key.end()), key.end());
    auto it = min_cache_.find(key);
    if (it != min_cache_.end()) return it->second;

    std::vector<std::size_t> m(types_.size(), kInf);
    for (std::size_t g = 0; g < types_.size(); ++g) {
      if (has_bool_lit(g) || has_nat_lit(g) || has_throw(g)) m[g] = 1;
    }
    for (std::size_t t : key) m[t] = 1;
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t g = 0; g < types_.size(); ++g) {
        for (const Prod& p : prods_[g]) {
          std::size_t total = 1;
          for (const Slot& sl : p.slots) total = sat_add(total, m[sl.type]);
          if (total < m[g]) {
            m[g] = total;
            changed = true;
          }
        }
      }
    }
    return min_cache_.emplace(std::move(key), std::move(m)).first->second;
  }

 private:
  std::optional<std::size_t> find(const Univ& u) const {
    auto it = index_.find(u.text());
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  void add(std::size_t g, Op op, std::vector<Slot> slots, NatOp nop = NatOp::Add,
           bool labeled = false) {
    prods_[g].push_back(Prod{op, nop, labeled, std::move(slots)});
  }

  void build(std::size_t g) {
    const Univ& G = types_[g];
    const std::size_t b = id(Univ::boolean());
    const std::optional<std::size_t> n = find(Univ::nat());
    add(g, Op::If, {{b, {}}, {g, {}}, {g, {}}});
    if (G.kind() == Univ::Kind::Nat) add(g, Op::NatOp, {{*n, {}}, {*n, {}}}, NatOp::Add);
    if (G.kind() == Univ::Kind::Bool) {
      if (n) add(g, Op::NatOp, {{*n, {}}, {*n, {}}}, NatOp::LeqNat);
      for (const Univ& t : {Univ::boolean(), Univ::nat(), Univ::label()}) {
        if (auto i = find(t)) add(g, Op::NatOp, {{*i, {}}, {*i, {}}}, NatOp::Eq);
      }
    }
    if (G.kind() == Univ::Kind::Times) add(g, Op::Pair, {{id(G.left()), {}}, {id(G.right()), {}}});
    if (G.kind() == Univ::Kind::Plus) {
      add(g, Op::Inl, {{id(G.left()), {}}});
      add(g, Op::Inr, {{id(G.right()), {}}});
    }
    for (std::size_t i = 0; i < types_.size(); ++i) {
      const Univ& T = types_[i];
      if (T.kind() == Univ::Kind::Times) {
        if (T.left() == G) add(g, Op::Fst, {{i, {}}});
        if (T.right() == G) add(g, Op::Snd, {{i, {}}});
      }
      if (T.kind() == Univ::Kind::Plus) {
        add(g, Op::Case, {{i, {}}, {g, id(T.left())}, {g, id(T.right())}});
      }
    }
    if (family_ == Family::Facets && G.kind() == Univ::Kind::Fac) {
      add(g, Op::FacReturn, {{id(G.inner()), {}}});
      add(g, Op::FacFacet, {{g, {}}, {g, {}}}, NatOp::Add, true);
      for (std::size_t i = 0; i < types_.size(); ++i) {
        if (types_[i].kind() == Univ::Kind::Fac) {
          add(g, Op::FacBind, {{i, {}}, {g, id(types_[i].inner())}});
        }
      }
    }
    if (family_ != Family::Lio) return;
    if (G.kind() == Univ::Kind::Labeled) add(g, Op::Label, {{id(G.inner()), {}}}, NatOp::Add, true);
    if (G.kind() == Univ::Kind::Label) {
      for (std::size_t i = 0; i < types_.size(); ++i) {
        if (types_[i].kind() == Univ::Kind::Labeled) add(g, Op::LabelOf, {{i, {}}});
      }
    }
    if (G.kind() != Univ::Kind::Lio) return;
    const Univ& A = G.inner();
    add(g, Op::LioReturn, {{id(A), {}}});
    for (std::size_t i = 0; i < types_.size(); ++i) {
      if (types_[i].kind() == Univ::Kind::Lio) {
        add(g, Op::LioBind, {{i, {}}, {g, id(types_[i].inner())}});
      }
    }
    if (auto l = find(Univ::labeled(A))) add(g, Op::Unlabel, {{*l, {}}});
    if (A.kind() == Univ::Kind::Labeled) {
      if (auto m = find(Univ::lio(A.inner()))) add(g, Op::ToLabeled, {{*m, {}}}, NatOp::Add, true);
    }
    add(g, Op::Catch, {{g, {}}, {g, id(Univ::error())}});
  }

  const LatticeSpec& spec_;
  Family family_;
  std::vector<Univ> types_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<Prod>> prods_;
  Scope top_;
  mutable std::map<std::vector<std::size_t>, std::vector<std::size_t>> min_cache_;
};

Term build(const Grammar& gr, const Prod& p, std::size_t goal, Label label, std::vector<Term> k,
           const std::vector<std::string>& names) {
  const Univ& G = gr.type(goal);
  switch (p.op) {
    case Op::If: return Term::if_(k[0], k[1], k[2]);
    case Op::NatOp: return Term::nat_op(p.nat_op, k[0], k[1]);
    case Op::Pair: return Term::pair(k[0], k[1]);
    case Op::Fst: return Term::fst(k[0]);
    case Op::Snd: return Term::snd(k[0]);
    case Op::Inl: return Term::inl(G, k[0]);
    case Op::Inr: return Term::inr(G, k[0]);
    case Op::Case: return Term::case_(k[0], names[1], k[1], names[2], k[2]);
    case Op::FacReturn: return Term::fac_return(k[0]);
    case Op::FacFacet: return Term::fac_facet(label, k[0], k[1]);
    case Op::FacBind: return Term::fac_bind(k[0], names[1], k[1]);
    case Op::LioReturn: return Term::lio_return(k[0]);
    case Op::LioBind: return Term::lio_bind(k[0], names[1], k[1]);
    case Op::Label: return Term::label(label, k[0]);
    case Op::LabelOf: return Term::label_of(k[0]);
    case Op::Unlabel: return Term::unlabel(k[0]);
    case Op::ToLabeled: return Term::to_labeled(label, k[0]);
    case Op::Catch: return Term::catch_(k[0], names[1], k[1]);
    default: break;
  }
  throw HarnessError(std::string("not a composite production: ") + op_keyword(p.op));
}

class Generator {
 public:
  Generator(Rng& rng, const Grammar& gr, const GenWeights& w) : rng_(rng), gr_(gr), w_(w) {}

  Term gen(std::size_t goal, const Scope& s, std::size_t budget) {
    const auto& mins = gr_.min_sizes(s);
    // Candidate groups, one per op: leaves first, then composite productions.
    struct Group {
      Op op;
      std::vector<const Prod*> alts;
    };
    std::vector<Group> groups;
    std::vector<unsigned> weights;
    auto offer = [&](Op op, const Prod* p) {
      for (auto& g : groups) {
        if (g.op == op) {
          g.alts.push_back(p);
          return;
        }
      }
      groups.push_back({op, {p}});
      weights.push_back(w_[op]);
    };
    std::vector<std::size_t> vars;
    for (std::size_t i = 0; i < s.vars.size(); ++i) {
      if (s.vars[i].second == goal) vars.push_back(i);
    }
    if (!vars.empty()) offer(Op::Var, nullptr);
    if (gr_.has_bool_lit(goal)) offer(Op::Bool, nullptr);
    if (gr_.has_nat_lit(goal)) offer(Op::Nat, nullptr);
    if (gr_.has_throw(goal)) offer(Op::Throw, nullptr);
    for (const Prod& p : gr_.prods(goal)) {
      std::size_t need = 1;
      for (const Slot& sl : p.slots) need = sat_add(need, mins[sl.type]);
      if (need <= budget) offer(p.op, &p);
    }
    bool any = false;
    for (unsigned w : weights) any = any || w > 0;
    if (!any) {
      throw HarnessError("no term of type " + gr_.type(goal).text() + " fits in " +
                         std::to_string(budget) + " nodes");
    }
    const Group& grp = groups[rng_.weighted(weights)];
    switch (grp.op) {
      case Op::Var: return Term::var(s.vars[vars[rng_.below(vars.size())]].first);
      case Op::Bool: return Term::lit_bool(rng_.coin());
      case Op::Nat: return Term::lit_nat(rng_.chance(3, 4) ? rng_.range(0, 3) : rng_.range(0, 40));
      case Op::Throw:
        return Term::raise(gr_.type(goal).inner(), "e" + std::to_string(rng_.below(2)));
      default: break;
    }
    const Prod& p = *grp.alts[rng_.below(grp.alts.size())];

    // Split the slack left after every slot's minimum across the slots.
    std::size_t slack = budget - 1;
    for (const Slot& sl : p.slots) slack -= mins[sl.type];
    std::vector<std::size_t> share(p.slots.size());
    std::vector<std::size_t> order(p.slots.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    for (std::size_t i = order.size(); i > 1; --i) std::swap(order[i - 1], order[rng_.below(i)]);
    for (std::size_t j = 0; j < order.size(); ++j) {
      const std::size_t extra = j + 1 == order.size() ? slack : rng_.range(0, slack);
      share[order[j]] = extra;
      slack -= extra;
    }

    std::vector<Term> kids;
    std::vector<std::string> names(p.slots.size());
    for (std::size_t i = 0; i < p.slots.size(); ++i) {
      const Slot& sl = p.slots[i];
      const std::size_t b = mins[sl.type] + share[i];
      if (sl.bound) {
        const Scope inner = gr_.bind(s, *sl.bound, &names[i]);
        kids.push_back(gen(sl.type, inner, b));
      } else {
        kids.push_back(gen(sl.type, s, b));
      }
    }
    Label label;
    if (p.labeled) label = gr_.spec().label(static_cast<std::uint32_t>(rng_.below(gr_.spec().size())));
    return build(gr_, p, goal, label, std::move(kids), names);
  }

 private:
  Rng& rng_;
  const Grammar& gr_;
  const GenWeights& w_;
};

class Enumerator {
 public:
  Enumerator(const Grammar& gr, const EnumLimits& limits) : gr_(gr), limits_(limits) {}

  using Terms = std::shared_ptr<const std::vector<Term>>;

  Terms all(std::size_t goal, const Scope& s, std::size_t depth) {
    std::string key = std::to_string(goal) + "/" + std::to_string(depth);
    for (const auto& [name, type] : s.vars) key += "/" + name + ":" + std::to_string(type);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    auto out = std::make_shared<std::vector<Term>>();
    if (depth >= 1) {
      for (const auto& [name, type] : s.vars) {
        if (type == goal) out->push_back(Term::var(name));
      }
      if (gr_.has_bool_lit(goal)) {
        out->push_back(Term::lit_bool(false));
        out->push_back(Term::lit_bool(true));
      }
      if (gr_.has_nat_lit(goal)) {
        out->push_back(Term::lit_nat(0));
        out->push_back(Term::lit_nat(1));
      }
      if (gr_.has_throw(goal)) out->push_back(Term::raise(gr_.type(goal).inner(), "e"));
    }
    if (depth >= 2) {
      for (const Prod& p : gr_.prods(goal)) expand(p, goal, s, depth, *out);
    }
    memo_.emplace(key, out);
    return out;
  }

 private:
  void expand(const Prod& p, std::size_t goal, const Scope& s, std::size_t depth,
              std::vector<Term>& out) {
    std::vector<Terms> kids;
    std::vector<std::string> names(p.slots.size());
    for (std::size_t i = 0; i < p.slots.size(); ++i) {
      const Slot& sl = p.slots[i];
      if (sl.bound) {
        const Scope inner = gr_.bind(s, *sl.bound, &names[i]);
        kids.push_back(all(sl.type, inner, depth - 1));
      } else {
        kids.push_back(all(sl.type, s, depth - 1));
      }
      if (kids.back()->empty()) return;
    }
    std::vector<Label> labels{Label()};
    if (p.labeled) labels = gr_.spec().labels();
    for (const Label& l : labels) {
      std::vector<std::size_t> pos(kids.size(), 0);
      while (true) {
        std::vector<Term> args;
        for (std::size_t i = 0; i < kids.size(); ++i) args.push_back((*kids[i])[pos[i]]);
        out.push_back(build(gr_, p, goal, l, std::move(args), names));
        if (out.size() > limits_.max_terms) {
          throw HarnessError("term enumeration exceeds " + std::to_string(limits_.max_terms) +
                             " terms");
        }
        std::size_t i = kids.size();
        while (i > 0) {
          --i;
          if (++pos[i] < kids[i]->size()) break;
          pos[i] = 0;
          if (i == 0) goto next_label;
        }
        if (kids.empty()) break;
      }
    next_label:;
    }
  }

  const Grammar& gr_;
  const EnumLimits& limits_;
  std::map<std::string, Terms> memo_;
};

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

std::uint64_t sat_sum(std::uint64_t a, std::uint64_t b) {
  return b > std::numeric_limits<std::uint64_t>::max() - a ? std::numeric_limits<std::uint64_t>::max()
                                                          : a + b;
}

// A scope together with every environment it ranges over.
struct DomScope {
  Scope scope;
  std::vector<ValueEnv> envs;
  std::string key;
};

class ClassEnumerator {
 public:
  ClassEnumerator(const Grammar& gr, const TermEvaluator& eval, const EnumLimits& limits)
      : gr_(gr), eval_(eval), limits_(limits) {}

  using Classes = std::shared_ptr<const std::vector<TermClass>>;

  Classes all(std::size_t goal, const DomScope& s, std::size_t depth) {
    const std::string key = std::to_string(goal) + "/" + std::to_string(depth) + s.key;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    Builder b(*this, s);
    if (depth >= 1) {
      for (const auto& [name, type] : s.scope.vars) {
        if (type == goal) b.add(Term::var(name), 1);
      }
      if (gr_.has_bool_lit(goal)) {
        b.add(Term::lit_bool(false), 1);
        b.add(Term::lit_bool(true), 1);
      }
      if (gr_.has_nat_lit(goal)) {
        b.add(Term::lit_nat(0), 1);
        b.add(Term::lit_nat(1), 1);
      }
      if (gr_.has_throw(goal)) b.add(Term::raise(gr_.type(goal).inner(), "e"), 1);
    }
    if (depth >= 2) {
      for (const Prod& p : gr_.prods(goal)) expand(p, goal, s, depth, b);
    }
    auto out = std::make_shared<const std::vector<TermClass>>(std::move(b.classes));
    memo_.emplace(key, out);
    return out;
  }

  DomScope extend(const DomScope& s, std::size_t type, std::string* name) {
    DomScope inner;
    inner.scope = gr_.bind(s.scope, type, name);
    const auto dom = complete_domain(gr_.spec(), gr_.type(type));
    if (!dom) {
      throw HarnessError("binder of type " + gr_.type(type).text() +
                         " ranges over an unbounded value space");
    }
    for (const ValueEnv& env : s.envs) {
      for (const Value& v : *dom) {
        ValueEnv e = env;
        e.emplace_back(*name, v);
        inner.envs.push_back(std::move(e));
      }
    }
    inner.key = s.key + "/" + *name + ":" + std::to_string(type);
    return inner;
  }

 private:
  struct Builder {
    ClassEnumerator& self;
    const DomScope& scope;
    std::vector<TermClass> classes;
    std::map<std::string, std::size_t> index;

    Builder(ClassEnumerator& e, const DomScope& s) : self(e), scope(s) {}

    void add(Term t, std::uint64_t count) {
      std::vector<Value> results;
      std::string key;
      results.reserve(scope.envs.size());
      for (const ValueEnv& env : scope.envs) {
        results.push_back(self.eval_(t, env));
        key += to_string(results.back());
        key += '|';
      }
      auto [it, fresh] = index.emplace(std::move(key), classes.size());
      if (fresh) {
        classes.push_back(TermClass{std::move(t), count, std::move(results)});
        if (++self.reps_ > self.limits_.max_terms) {
          throw HarnessError("class enumeration exceeds " + std::to_string(self.limits_.max_terms) +
                             " representatives");
        }
      } else {
        classes[it->second].count = sat_sum(classes[it->second].count, count);
      }
    }
  };

  void expand(const Prod& p, std::size_t goal, const DomScope& s, std::size_t depth, Builder& b) {
    std::vector<Classes> kids;
    std::vector<std::string> names(p.slots.size());
    for (std::size_t i = 0; i < p.slots.size(); ++i) {
      const Slot& sl = p.slots[i];
      if (sl.bound) {
        const DomScope inner = extend(s, *sl.bound, &names[i]);
        kids.push_back(all(sl.type, inner, depth - 1));
      } else {
        kids.push_back(all(sl.type, s, depth - 1));
      }
      if (kids.back()->empty()) return;
    }
    std::vector<Label> labels{Label()};
    if (p.labeled) labels = gr_.spec().labels();
    for (const Label& l : labels) {
      std::vector<std::size_t> pos(kids.size(), 0);
      for (bool more = true; more;) {
        std::vector<Term> args;
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < kids.size(); ++i) {
          const TermClass& c = (*kids[i])[pos[i]];
          args.push_back(c.rep);
          count = sat_mul(count, c.count);
        }
        b.add(build(gr_, p, goal, l, std::move(args), names), count);
        more = false;
        for (std::size_t i = kids.size(); i > 0; --i) {
          if (++pos[i - 1] < kids[i - 1]->size()) {
            more = true;
            break;
          }
          pos[i - 1] = 0;
        }
      }
    }
  }

  const Grammar& gr_;
  const TermEvaluator& eval_;
  const EnumLimits& limits_;
  std::size_t reps_ = 0;
  std::map<std::string, Classes> memo_;
};

}  // namespace

GenWeights::GenWeights() {
  op.fill(4);
  (*this)[Op::Var] = 6;
  (*this)[Op::Bool] = 3;
  (*this)[Op::Nat] = 3;
  (*this)[Op::Throw] = 2;
  (*this)[Op::Catch] = 3;
  (*this)[Op::Unlabel] = 8;
  (*this)[Op::ToLabeled] = 8;
}

Term gen_term(Rng& rng, const LatticeSpec& spec, const TypeEnv& inputs, const Univ& out,
              std::size_t budget, const GenWeights& weights) {
  if (budget == 0) throw HarnessError("term budget must be at least 1");
  const Grammar gr(spec, inputs, out);
  const std::size_t goal = gr.id(out);
  const std::size_t need = gr.min_sizes(gr.top())[goal];
  if (need > budget) {
    throw HarnessError("no term of type " + out.text() + " fits in " + std::to_string(budget) +
                       " nodes");
  }
  return Generator(rng, gr, weights).gen(goal, gr.top(), budget);
}

std::size_t min_term_size(const LatticeSpec& spec, const TypeEnv& inputs, const Univ& out) {
  const Grammar gr(spec, inputs, out);
  const std::size_t m = gr.min_sizes(gr.top())[gr.id(out)];
  return m == kInf ? 0 : m;
}

std::vector<Term> enum_terms(const LatticeSpec& spec, const TypeEnv& inputs, const Univ& out,
                             std::size_t depth, const EnumLimits& limits) {
  if (depth > limits.max_depth) {
    throw HarnessError("enumeration depth " + std::to_string(depth) + " exceeds the maximum " +
                       std::to_string(limits.max_depth));
  }
  const Grammar gr(spec, inputs, out, limits.implicit_nat);
  Enumerator en(gr, limits);
  return *en.all(gr.id(out), gr.top(), depth + 1);
}

std::optional<std::vector<Value>> complete_domain(const LatticeSpec& spec, const Univ& u) {
  switch (u.kind()) {
    case Univ::Kind::Bool:
    case Univ::Kind::Label:
      return enum_values(spec, u);
    case Univ::Kind::Plus: {
      auto l = complete_domain(spec, u.left());
      auto r = complete_domain(spec, u.right());
      if (!l || !r) return std::nullopt;
      std::vector<Value> out;
      for (const Value& v : *l) out.push_back(Value::inl(v));
      for (const Value& v : *r) out.push_back(Value::inr(v));
      return out;
    }
    case Univ::Kind::Times: {
      auto l = complete_domain(spec, u.left());
      auto r = complete_domain(spec, u.right());
      if (!l || !r) return std::nullopt;
      std::vector<Value> out;
      for (const Value& a : *l) {
        for (const Value& b : *r) out.push_back(Value::pair(a, b));
      }
      return out;
    }
    default:
      return std::nullopt;
  }
}

std::vector<TermClass> enum_classes(const LatticeSpec& spec, const TypeEnv& inputs,
                                    const std::vector<std::vector<Value>>& domains,
                                    const Univ& out, std::size_t depth,
                                    const TermEvaluator& eval, const EnumLimits& limits) {
  if (depth > limits.max_depth) {
    throw HarnessError("enumeration depth " + std::to_string(depth) + " exceeds the maximum " +
                       std::to_string(limits.max_depth));
  }
  if (domains.size() != inputs.size()) throw HarnessError("one domain per input is required");
  const Grammar gr(spec, inputs, out, limits.implicit_nat);
  DomScope top;
  top.scope = gr.top();
  top.envs.emplace_back();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    std::vector<ValueEnv> next;
    for (const ValueEnv& env : top.envs) {
      for (const Value& v : domains[i]) {
        ValueEnv e = env;
        e.emplace_back(inputs[i].first, v);
        next.push_back(std::move(e));
      }
    }
    top.envs = std::move(next);
    top.key += "/" + inputs[i].first + ":" + std::to_string(gr.id(inputs[i].second));
  }
  ClassEnumerator en(gr, eval, limits);
  return *en.all(gr.id(out), top, depth + 1);
}

bool class_enumerable(const LatticeSpec& spec, const TypeEnv& inputs, const Univ& out,
                      bool implicit_nat) {
  const Grammar gr(spec, inputs, out, implicit_nat);
  for (std::size_t g = 0; g < gr.types().size(); ++g) {
    for (const Prod& p : gr.prods(g)) {
      for (const Slot& sl : p.slots) {
        if (sl.bound && !complete_domain(spec, gr.type(*sl.bound))) return false;
      }
    }
  }
  return true;
}

std::vector<Univ> grammar_types(const TypeEnv& inputs, const Univ& out, bool implicit_nat) {
  return type_set(inputs, out, family_for(inputs, out), implicit_nat);
}

}  // namespace ifc
