/*
 * Copyright (c) 2026, The BitSim Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


#pragma once

#include <stdexcept>
#include <string>

namespace bitsim {

/// Base of every error thrown by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed text; line and column are 1-based.
struct ParseError : Error {
  ParseError(const std::string& message, int line, int column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line(line),
        column(column) {}
  int line;
  int column;
};

struct UndeclaredName : Error {
  explicit UndeclaredName(const std::string& name)
      : Error("undeclared name: " + name), name(name) {}
  std::string name;
};

struct CycleError : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct UnsupportedFragment : Error {
  using Error::Error;
};

/// Two codes or a code and a context disagree on widths.
struct ContextMismatch : Error {
  using Error::Error;
};

}  // namespace bitsim
