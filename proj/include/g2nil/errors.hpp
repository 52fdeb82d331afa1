// Copyright 2026 The g2nil Authors
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

#ifndef G2NIL_ERRORS_HPP
#define G2NIL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace g2nil {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live on different coframes or have incompatible degrees.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Operands carry scalars from incompatible rings (e.g. two different
// ninth-root moduli, or a ninth root mixed with a polynomial).
class RingMismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

// Nonzero element of Q[d]/(d^9 - D) that is not invertible because the
// modulus is reducible.
class ZeroDivisorError : public Error {
 public:
  using Error::Error;
};

class SingularMetricError : public Error {
 public:
  using Error::Error;
};

class NotALieAlgebraError : public Error {
 public:
  NotALieAlgebraError(const std::string& what, int generator)
      : Error(what), generator_(generator) {}
  int generator() const noexcept { return generator_; }

 private:
  int generator_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when a 3-form has degenerate b-matrix.
class InstabilityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace g2nil

#endif  // G2NIL_ERRORS_HPP
