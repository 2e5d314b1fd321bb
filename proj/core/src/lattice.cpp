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

#include "ifckit/lattice.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace ifc {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool valid_name(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    switch (c) {
      case ' ': case '\t': case '\r': case '\n':
      case '<': case ',': case '#': case ':': case '(': case ')': case '"':
        return false;
      default:
        break;
    }
  }
  return true;
}

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw LatticeError(LatticeError::Kind::Parse,
                     "line " + std::to_string(line) + ": " + what);
}

[[noreturn]] void invalid(const std::string& what) {
  throw LatticeError(LatticeError::Kind::Validation, what);
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

const std::string& Label::name() const {
  if (spec_ == nullptr) throw HarnessError("default-constructed label has no name");
  return spec_->name(*this);
}

LatticePtr LatticeSpec::parse(std::string_view text) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  std::optional<std::string> bottom;
  bool saw_labels = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) parse_fail(line_no, "expected 'key: value'");
    const auto key = trim(line.substr(0, colon));
    const auto value = trim(line.substr(colon + 1));

    if (key == "labels") {
      saw_labels = true;
      for (auto& w : split_words(value)) {
        if (!valid_name(w)) parse_fail(line_no, "invalid label name '" + w + "'");
        names.push_back(std::move(w));
      }
    } else if (key == "bottom") {
      auto words = split_words(value);
      if (words.size() != 1) parse_fail(line_no, "bottom takes exactly one label");
      if (bottom) parse_fail(line_no, "bottom declared twice");
      bottom = words[0];
    } else if (key == "order") {
      if (value.empty()) continue;
      std::vector<std::string_view> items;
      std::size_t start = 0;
      while (true) {
        const auto comma = value.find(',', start);
        items.push_back(trim(value.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
      }
      for (const auto item : items) {
        if (item.empty()) parse_fail(line_no, "empty order entry");
        // a<b<c is shorthand for a<b, b<c.
        std::vector<std::string> chain;
        std::size_t s = 0;
        while (true) {
          const auto lt = item.find('<', s);
          auto part = trim(item.substr(
              s, lt == std::string_view::npos ? std::string_view::npos : lt - s));
          if (!valid_name(part)) {
            parse_fail(line_no, "malformed order entry '" + std::string(item) + "'");
          }
          chain.emplace_back(part);
          if (lt == std::string_view::npos) break;
          s = lt + 1;
        }
        if (chain.size() < 2) {
          parse_fail(line_no, "order entry '" + std::string(item) + "' needs a<b");
        }
        for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
          edges.emplace_back(chain[i], chain[i + 1]);
        }
      }
    } else {
      parse_fail(line_no, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!saw_labels || names.empty()) {
    throw LatticeError(LatticeError::Kind::Parse, "no labels declared");
  }
  std::set<std::string> declared(names.begin(), names.end());
  if (declared.size() != names.size()) {
    throw LatticeError(LatticeError::Kind::Parse, "duplicate label name");
  }
  for (const auto& [a, b] : edges) {
    for (const auto* n : {&a, &b}) {
      if (!declared.count(*n)) {
        throw LatticeError(LatticeError::Kind::Parse,
                           "order mentions undeclared label '" + *n + "'");
      }
    }
  }
  if (bottom && !declared.count(*bottom)) {
    throw LatticeError(LatticeError::Kind::Parse,
                       "bottom is undeclared label '" + *bottom + "'");
  }
  return from_edges(std::move(names), edges, bottom);
}

LatticePtr LatticeSpec::from_edges(std::vector<std::string> names,
                                   const std::vector<Edge>& edges,
                                   std::optional<std::string> bottom) {
  if (names.empty()) invalid("lattice has no labels");
  const std::size_t n = names.size();
  auto index_of = [&](const std::string& name) -> std::size_t {
    const auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end()) invalid("unknown label '" + name + "'");
    return static_cast<std::size_t>(it - names.begin());
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!valid_name(names[i])) invalid("invalid label name '" + names[i] + "'");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) invalid("duplicate label name '" + names[i] + "'");
    }
  }

  std::vector<bool> leq(n * n, false);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = true;
  for (const auto& [a, b] : edges) leq[index_of(a) * n + index_of(b)] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        invalid("cycle: " + names[i] + " and " + names[j] + " are mutually ordered");
      }
    }
  }

  // Least upper bound by brute force over all upper bounds.
  std::vector<std::uint32_t> join(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      std::optional<std::size_t> least;
      for (std::size_t c = 0; c < n && !least; ++c) {
        if (!leq[a * n + c] || !leq[b * n + c]) continue;
        bool below_all = true;
        for (std::size_t u = 0; u < n && below_all; ++u) {
          if (leq[a * n + u] && leq[b * n + u] && !leq[c * n + u]) below_all = false;
        }
        if (below_all) least = c;
      }
      if (!least) invalid("no join for " + names[a] + "," + names[b]);
      join[a * n + b] = static_cast<std::uint32_t>(*least);
    }
  }

  std::optional<std::size_t> least_element;
  for (std::size_t c = 0; c < n && !least_element; ++c) {
    bool below_all = true;
    for (std::size_t u = 0; u < n && below_all; ++u) below_all = leq[c * n + u];
    if (below_all) least_element = c;
  }
  if (bottom) {
    const auto declared = index_of(*bottom);
    for (std::size_t u = 0; u < n; ++u) {
      if (!leq[declared * n + u]) {
        invalid("declared bottom " + *bottom + " is not below " + names[u]);
      }
    }
    least_element = declared;
  }
  if (!least_element) invalid("no unique bottom");

  auto spec = std::shared_ptr<LatticeSpec>(new LatticeSpec());
  spec->names_ = std::move(names);
  spec->leq_ = std::move(leq);
  spec->join_ = std::move(join);
  spec->bottom_ = static_cast<std::uint32_t>(*least_element);
  return spec;
}

LatticePtr LatticeSpec::two_point() { return parse("labels: L H\nbottom: L\norder: L<H\n"); }

LatticePtr LatticeSpec::diamond() {
  return parse(
      "labels: ⊥ Alice Bob ⊤\n"
      "bottom: ⊥\n"
      "order: ⊥<Alice, ⊥<Bob, Alice<⊤, Bob<⊤\n");
}

LatticePtr LatticeSpec::powerset(unsigned k) {
  if (k == 0 || k > 6) throw HarnessError("powerset lattice supports 1..6 principals");
  const unsigned count = 1u << k;
  auto set_name = [](unsigned mask) {
    if (mask == 0) return std::string("∅");
    std::string s;
    for (unsigned bit = 0; mask >> bit; ++bit) {
      if (mask & (1u << bit)) s.push_back(static_cast<char>('A' + bit));
    }
    return s;
  };
  std::vector<std::string> names;
  for (unsigned m = 0; m < count; ++m) names.push_back(set_name(m));
  std::vector<Edge> edges;
  for (unsigned m = 0; m < count; ++m) {
    for (unsigned bit = 0; bit < k; ++bit) {
      if (!(m & (1u << bit))) edges.emplace_back(names[m], names[m | (1u << bit)]);
    }
  }
  return from_edges(std::move(names), edges, std::string("∅"));
}

LatticePtr LatticeSpec::random(Rng& rng, unsigned max_labels) {
  if (max_labels == 0) throw HarnessError("random lattice needs at least one label");
  constexpr unsigned kUniverse = 5;
  std::vector<unsigned> family;
  while (true) {
    std::set<unsigned> closed{0};
    const auto gens = rng.range(0, max_labels > 1 ? max_labels - 1 : 0);
    for (std::uint64_t g = 0; g < gens; ++g) {
      const auto s = static_cast<unsigned>(rng.below(1u << kUniverse));
      std::set<unsigned> next = closed;
      for (unsigned t : closed) next.insert(t | s);
      closed = std::move(next);
    }
    if (closed.size() <= max_labels) {
      family.assign(closed.begin(), closed.end());
      break;
    }
  }
  // Shuffle so that label ids do not follow the order.
  for (std::size_t i = family.size(); i > 1; --i) {
    std::swap(family[i - 1], family[rng.below(i)]);
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < family.size(); ++i) names.push_back("x" + std::to_string(i));
  auto subset = [](unsigned a, unsigned b) { return (a & b) == a; };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j || !subset(family[i], family[j])) continue;
      bool cover = true;
      for (std::size_t m = 0; m < family.size() && cover; ++m) {
        if (m != i && m != j && subset(family[i], family[m]) && subset(family[m], family[j])) {
          cover = false;
        }
      }
      if (cover) edges.emplace_back(names[i], names[j]);
    }
  }
  return from_edges(std::move(names), edges);
}

LatticePtr LatticeSpec::builtin(std::string_view name) {
  if (name == "two-point") return two_point();
  if (name == "diamond") return diamond();
  constexpr std::string_view prefix = "powerset-";
  if (name.substr(0, prefix.size()) == prefix) {
    const auto digits = name.substr(prefix.size());
    if (digits.size() == 1 && digits[0] >= '1' && digits[0] <= '6') {
      return powerset(static_cast<unsigned>(digits[0] - '0'));
    }
  }
  throw HarnessError("unknown builtin lattice '" + std::string(name) + "'");
}

Label LatticeSpec::label(std::uint32_t id) const {
  if (id >= size()) throw HarnessError("label id out of range");
  return Label(id, this);
}

std::optional<Label> LatticeSpec::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Label(static_cast<std::uint32_t>(i), this);
  }
  return std::nullopt;
}

Label LatticeSpec::at(std::string_view name) const {
  if (auto l = find(name)) return *l;
  throw HarnessError("unknown label '" + std::string(name) + "'");
}

const std::string& LatticeSpec::name(Label l) const { return names_[index(l)]; }

std::vector<Label> LatticeSpec::labels() const {
  std::vector<Label> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(Label(static_cast<std::uint32_t>(i), this));
  return out;
}

std::optional<Label> LatticeSpec::top() const {
  for (const Label c : labels()) {
    bool above_all = true;
    for (const Label u : labels()) above_all = above_all && leq(u, c);
    if (above_all) return c;
  }
  return std::nullopt;
}

std::vector<std::pair<Label, Label>> LatticeSpec::covers() const {
  std::vector<std::pair<Label, Label>> out;
  for (const Label a : labels()) {
    for (const Label b : labels()) {
      if (a == b || !leq(a, b)) continue;
      bool cover = true;
      for (const Label m : labels()) {
        if (m != a && m != b && leq(a, m) && leq(m, b)) cover = false;
      }
      if (cover) out.emplace_back(a, b);
    }
  }
  return out;
}

std::string LatticeSpec::to_text() const {
  std::ostringstream out;
  out << "labels:";
  for (const auto& n : names_) out << ' ' << n;
  out << "\nbottom: " << names_[bottom_] << '\n';
  const auto edges = covers();
  if (!edges.empty()) {
    out << "order: ";
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i) out << ", ";
      out << name(edges[i].first) << '<' << name(edges[i].second);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace ifc
