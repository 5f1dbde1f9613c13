// Copyright 2026 The bentneg Authors.
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

#ifndef BENTNEG_ERRORS_H_
#define BENTNEG_ERRORS_H_

#include <stdexcept>
#include <string>

namespace bentneg {

// Malformed text input (hex tables, polynomials, bit strings, JSON).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands over different ambient dimensions.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested variable count exceeds the configured maximum.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Parameters do not describe a valid instance of the requested family.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation that needs a bent (or negabent) input received another.
class NotBentError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace bentneg

#endif  // BENTNEG_ERRORS_H_
