// Copyright 2026 The lpn-opacity Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace opacity {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownTransition : public Error {
 public:
  using Error::Error;
};

// Thrown by fire/fire_sequence. For sequences, prefix_length is the index of
// the first transition that could not fire.
class NotEnabled : public Error {
 public:
  NotEnabled(const std::string& what, std::size_t prefix_length)
      : Error(what), prefix_length_(prefix_length) {}
  std::size_t prefix_length() const { return prefix_length_; }

 private:
  std::size_t prefix_length_;
};

// A state or token cap of BoundConfig was hit; the net is possibly unbounded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

class CyclicUnobservableSubnet : public Error {
 public:
  using Error::Error;
};

class EmptyInitial : public Error {
 public:
  using Error::Error;
};

class A1NotVerified : public Error {
 public:
  using Error::Error;
};

class NoViolation : public Error {
 public:
  using Error::Error;
};

class InvalidNet : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string field, std::size_t line = 0)
      : Error(what), field_(std::move(field)), line_(line) {}
  const std::string& field() const { return field_; }
  std::size_t line() const { return line_; }

 private:
  std::string field_;
  std::size_t line_;
};

class SemanticError : public Error {
 public:
  using Error::Error;
};

}  // namespace opacity
