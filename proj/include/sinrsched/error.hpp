/*
Copyright 2026 The sinrsched Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sinrsched {

// Base of every error raised by the library. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid parameters or arguments (violated type invariants).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A distance consumed by the SINR formula fell below the minimum-distance guard.
class ZeroDistance : public Error {
 public:
  using Error::Error;
};

// Feasibility queried for an empty link set.
class EmptySet : public Error {
 public:
  EmptySet() : Error("feasibility is undefined for an empty link set") {}
};

// Generator could not place nodes without violating the minimum-distance guard.
class DegenerateGeometry : public Error {
 public:
  using Error::Error;
};

// A link is infeasible even when active alone, so no slot can ever hold it.
class UnschedulableLink : public Error {
 public:
  UnschedulableLink(std::size_t link, const std::string& why)
      : Error("link " + std::to_string(link) + " is unschedulable: " + why), link_(link) {}

  std::size_t link() const noexcept { return link_; }

 private:
  std::size_t link_;
};

// Exhaustive oracle refused an instance above its size limits.
class TooLarge : public Error {
 public:
  using Error::Error;
};

// Malformed input file. `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& field, const std::string& what)
      : Error(format(line, field, what)), line_(line), field_(field) {}

  std::size_t line() const noexcept { return line_; }
  const std::string& field() const noexcept { return field_; }

 private:
  static std::string format(std::size_t line, const std::string& field, const std::string& what) {
    std::string msg = "parse error";
    if (line > 0) msg += " at line " + std::to_string(line);
    if (!field.empty()) msg += " (" + field + ")";
    return msg + ": " + what;
  }

  std::size_t line_;
  std::string field_;
};

// Too many failed instances at one sweep point.
class SweepAborted : public Error {
 public:
  using Error::Error;
};

}  // namespace sinrsched
