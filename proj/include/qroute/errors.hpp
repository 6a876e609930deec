// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace qroute {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Wire spec with base dimension < 2 or no wires.
class InvalidSpecError : public Error {
public:
  using Error::Error;
};

/// Gate does not fit the circuit it is appended to.
class ValidationError : public Error {
public:
  using Error::Error;
};

class NonInvertibleError : public Error {
public:
  using Error::Error;
};

/// A gate met a basis value outside the levels it is defined on.
class OutOfSubspaceError : public Error {
public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
public:
  using Error::Error;
};

class NoPathError : public Error {
public:
  using Error::Error;
};

class RoutingContractError : public Error {
public:
  using Error::Error;
};

class UnsupportedGateError : public Error {
public:
  using Error::Error;
};

/// State or matrix dimension exceeds the configured cap.
class TooLargeError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, const std::string &what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  [[nodiscard]] std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

} // namespace qroute
