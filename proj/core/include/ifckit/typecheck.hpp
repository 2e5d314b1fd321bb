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

#ifndef IFCKIT_TYPECHECK_HPP_
#define IFCKIT_TYPECHECK_HPP_

#include "ifckit/term.hpp"

namespace ifc {

struct TypeResult {
  Univ type;
  Family family = Family::Neutral;
};

// Infers the type of t under `inputs`. Errors are TypeErrors prefixed with
// "line:col: " when the offending node came from source text.
TypeResult typecheck(const Term& t, const TypeEnv& inputs);

// Checks the body against the declared output type and returns the program's
// interface family (inputs, output and body together).
Family typecheck_program(const Program& p);

}  // namespace ifc

#endif  // IFCKIT_TYPECHECK_HPP_
