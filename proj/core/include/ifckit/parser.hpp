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

#ifndef IFCKIT_PARSER_HPP_
#define IFCKIT_PARSER_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "ifckit/term.hpp"

namespace ifc {

struct SExpr {
  enum class Kind { Atom, String, List };
  Kind kind = Kind::Atom;
  std::string text;
  std::vector<SExpr> items;
  int line = 1;
  int col = 1;

  bool is_atom(std::string_view s) const { return kind == Kind::Atom && text == s; }
};

// Reads every top-level s-expression in text. `;` starts a line comment.
std::vector<SExpr> read_sexprs(std::string_view text);
SExpr read_sexpr(std::string_view text);

Univ parse_type(const SExpr& e);
Univ parse_type(std::string_view text);

// Label names resolve against `spec`. Unknown constructs, including any
// attempt to inspect facet structure or labeled payloads directly, are
// rejected with a ParseError.
Term parse_term(const SExpr& e, const LatticeSpec& spec);
Term parse_term(std::string_view text, const LatticeSpec& spec);
Program parse_program(std::string_view text, const LatticeSpec& spec);

// Values in the syntax printed by to_string(Value), read at the given type.
Value parse_value(const SExpr& e, const Univ& type, const LatticeSpec& spec);
Value parse_value(std::string_view text, const Univ& type, const LatticeSpec& spec);

}  // namespace ifc

#endif  // IFCKIT_PARSER_HPP_
