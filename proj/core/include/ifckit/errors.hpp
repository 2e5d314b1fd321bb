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

#ifndef IFCKIT_ERRORS_HPP_
#define IFCKIT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace ifc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed lattice file, or a poset that is not a join-semilattice.
class LatticeError : public Error {
 public:
  enum class Kind { Parse, Validation };
  LatticeError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Syntax error in a program, type, or value text. line/col are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": " + what),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

class TypeError : public Error {
 public:
  using Error::Error;
};

// Misuse of the toolkit by its caller: bad configuration, values compared at a
// type they do not inhabit, labels from the wrong lattice.
class HarnessError : public Error {
 public:
  using Error::Error;
};

// An interface contract that the security argument depends on was broken at
// runtime (label monotonicity, toLabeled restoration). Never expected from the
// reference implementation.
class SoundnessViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace ifc

#endif  // IFCKIT_ERRORS_HPP_
