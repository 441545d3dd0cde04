// Copyright 2026 The qfim Authors
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

#include <stdexcept>
#include <string>

namespace qfim {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Register size out of range (n = 0 or above the configured cap).
class InvalidSizeError : public Error {
  public:
    using Error::Error;
};

/// Amplitude vector or parameter set is not normalized within tolerance.
class NormalizationError : public Error {
  public:
    using Error::Error;
};

/// State has weight outside the symmetric subspace and cannot be lifted.
class NotSymmetricError : public Error {
  public:
    using Error::Error;
};

/// Mean-spin frame is undefined (R or r below tolerance) for a closed-form
/// expression that divides by it.
class SingularFrameError : public Error {
  public:
    using Error::Error;
};

/// A sweep constraint is infeasible somewhere on the requested range.
class RangeDomainError : public Error {
  public:
    using Error::Error;
};

/// Malformed textual input, with 1-based line/column of the offending token.
class ParseError : public Error {
  public:
    ParseError(const std::string &msg, int line, int column)
        : Error(msg + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

}  // namespace qfim
