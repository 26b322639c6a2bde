// Copyright 2026 The ctkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CTKIT_ERRORS_HPP_
#define CTKIT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctkit {

// Base class for every error raised by the library. The CLI maps these onto
// exit codes: UsageError -> 2, everything else -> 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arithmetic.
class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

class ZeroValue : public Error {
 public:
  ZeroValue() : Error("zero value cannot be unit-normalized") {}
};

class NotLaurent : public Error {
 public:
  explicit NotLaurent(const std::string& what) : Error(what) {}
};

class InexactDivision : public Error {
 public:
  InexactDivision() : Error("polynomial division is not exact") {}
};

class UnknownSymbol : public Error {
 public:
  explicit UnknownSymbol(const std::string& name)
      : Error("unknown symbol '" + name + "'") {}
};

// Text parsing (polynomials, tangle DSL, gCT notation). `position` is the
// zero-based byte offset into the input where the problem was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// Tangle label discipline.
class LabelError : public Error {
 public:
  using Error::Error;
};

class LabelClash : public LabelError {
 public:
  explicit LabelClash(const std::string& what) : LabelError(what) {}
};

// Calculus evaluation.
class DegenerateMerge : public Error {
 public:
  DegenerateMerge(long e, long s)
      : Error("degenerate merge: A(" + std::to_string(e) + "," +
              std::to_string(s) + ") = 1") {}
};

class UnsupportedGenerator : public Error {
 public:
  explicit UnsupportedGenerator(const std::string& what) : Error(what) {}
};

// gCT diagrams.
class InvalidDiagram : public Error {
 public:
  using Error::Error;
};

class InvalidPair : public Error {
 public:
  using Error::Error;
};

class NotSeries : public Error {
 public:
  using Error::Error;
};

// Bad command-line input: missing or conflicting sources, unreadable files,
// out-of-range parameters.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace ctkit

#endif  // CTKIT_ERRORS_HPP_
