// Copyright 2026 The Dominance Lab Authors.
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace domlab {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A strategy, player or profile index is out of range for its game.
class InvalidProfileError : public Error {
 public:
  using Error::Error;
};

// Mixed strategy weights are negative or do not sum to one.
class InvalidDistributionError : public Error {
 public:
  using Error::Error;
};

// A mixed-dominator search was asked to search an empty pool.
class NoCandidatesError : public Error {
 public:
  using Error::Error;
};

// Malformed game structure: shape mismatch, duplicate names, bad rational.
class GameFormatError : public Error {
 public:
  using Error::Error;
};

// Exhaustive lattice search requested beyond the configured cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// Invalid random game generator configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Syntax error in a JSON document, with a 1-based source position.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message), line_(line), column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace domlab
