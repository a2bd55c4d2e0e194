// Copyright 2026 The Fabula Authors
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

#ifndef FABULA_ERRORS_HPP_
#define FABULA_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace fabula {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A regular expression failed to compile, or a replacement string refers
// to a capture group the pattern does not define.
class InvalidPattern : public Error {
 public:
  using Error::Error;
};

// A tag sequence and a token sequence have different lengths.
class LengthMismatch : public Error {
 public:
  using Error::Error;
};

// An injected artifact violates its structural invariants. `line` is the
// 1-based line number when the artifact came from a file, -1 otherwise.
class MalformedArtifact : public Error {
 public:
  explicit MalformedArtifact(const std::string& what, int line = -1)
      : Error(line >= 0 ? what + " (line " + std::to_string(line) + ")" : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A language-specific resource table (e.g. hypocorisms) is not available
// for the requested pipeline language.
class MissingResource : public Error {
 public:
  using Error::Error;
};

// A step failed while the pipeline was running. Carries the step name;
// the message includes the cause.
class StepError : public Error {
 public:
  StepError(const std::string& step_name, const std::string& cause)
      : Error("step '" + step_name + "': " + cause), step_name_(step_name) {}
  const std::string& step_name() const { return step_name_; }

 private:
  std::string step_name_;
};

class UnsupportedFormat : public Error {
 public:
  using Error::Error;
};

class SerializationError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace fabula

#endif  // FABULA_ERRORS_HPP_
