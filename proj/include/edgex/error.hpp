// Copyright 2026 The edgex Authors
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

#ifndef EDGEX_ERROR_HPP
#define EDGEX_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace edgex {

enum class ErrorKind {
  // graph construction and lookup
  DuplicateEdge,
  SelfLoop,
  IndexOutOfRange,
  UnknownEdge,
  NotBipartite,
  BadParameter,
  // coloring engines
  ListTooShort,
  DemandViolation,
  OddOrder,
  MissingEdgeAssignment,
  // extension and adversary
  InvalidPrecoloring,
  Inapplicable,
  // malformed files
  Parse,
  // Internal errors. Any of these firing means an implementation bug: the
  // underlying theorems guarantee they cannot happen on validated input.
  InternalNoKernel,
  InternalTheoremViolation,
  InternalProofInvariantViolated,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::ListTooShort: return "ListTooShort";
    case ErrorKind::DemandViolation: return "DemandViolation";
    case ErrorKind::OddOrder: return "OddOrder";
    case ErrorKind::MissingEdgeAssignment: return "MissingEdgeAssignment";
    case ErrorKind::InvalidPrecoloring: return "InvalidPrecoloring";
    case ErrorKind::Inapplicable: return "Inapplicable";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::InternalNoKernel: return "InternalNoKernel";
    case ErrorKind::InternalTheoremViolation: return "InternalTheoremViolation";
    case ErrorKind::InternalProofInvariantViolated:
      return "InternalProofInvariantViolated";
  }
  return "Unknown";
}

inline bool is_internal(ErrorKind kind) {
  return kind == ErrorKind::InternalNoKernel ||
         kind == ErrorKind::InternalTheoremViolation ||
         kind == ErrorKind::InternalProofInvariantViolated;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace edgex

#endif  // EDGEX_ERROR_HPP
