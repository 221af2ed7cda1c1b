// Copyright 2026 The KGLF Authors.
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

#ifndef KGLF_ERRORS_H_
#define KGLF_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kglf {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph, label, dataset or annotation file.
class LoadError : public Error {
 public:
  LoadError(const std::string &path, size_t line, const std::string &what)
      : Error(path + ":" + std::to_string(line) + ": " + what),
        path_(path), line_(line) {}

  const std::string &path() const { return path_; }
  size_t line() const { return line_; }

 private:
  std::string path_;
  size_t line_;
};

// Token list or textual logical form that does not describe a tree.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Operator applied to arguments of the wrong type.
class TypeError : public Error {
 public:
  TypeError(const std::string &subtree, const std::string &expected,
            const std::string &actual)
      : Error("type error in " + subtree + ": expected " + expected +
              ", got " + actual),
        subtree_(subtree), expected_(expected), actual_(actual) {}

  const std::string &subtree() const { return subtree_; }
  const std::string &expected() const { return expected_; }
  const std::string &actual() const { return actual_; }

 private:
  std::string subtree_;
  std::string expected_;
  std::string actual_;
};

class EvalError : public Error {
 public:
  enum class Kind {
    kValueKindMismatch,
    kNotEvaluable,
  };

  EvalError(Kind kind, const std::string &what) : Error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// More objects to randomize than the id vocabulary holds.
class RandomizationOverflow : public Error {
 public:
  using Error::Error;
};

}  // namespace kglf

#endif  // KGLF_ERRORS_H_
