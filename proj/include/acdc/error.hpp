// Copyright 2026 The ACDC Provenance Authors.
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

#ifndef ACDC_ERROR_HPP
#define ACDC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace acdc {

/// Failure categories raised by the library. Every thrown acdc::Error
/// carries exactly one of these.
enum class Errc {
  // graph construction
  EmptyId,
  DuplicateId,
  MissingVertex,
  TypeViolation,
  CycleIntroduced,
  // policy language
  ParseError,
  ShadowingError,
  UnknownLabel,
  UnknownSort,
  StrictBinding,
  // evaluation
  InvalidGraph,
  EmptyList,
  ConflictingBinding,
  // provenance operations
  NoSuchActivity,
  NoSuchAgent,
  WrongKind,
  // scenario builders
  InvalidStepSequence,
  // documents
  MalformedDocument,
  UnknownKind,
  UnsupportedVersion,
};

inline std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::EmptyId: return "EmptyId";
    case Errc::DuplicateId: return "DuplicateId";
    case Errc::MissingVertex: return "MissingVertex";
    case Errc::TypeViolation: return "TypeViolation";
    case Errc::CycleIntroduced: return "CycleIntroduced";
    case Errc::ParseError: return "ParseError";
    case Errc::ShadowingError: return "ShadowingError";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::UnknownSort: return "UnknownSort";
    case Errc::StrictBinding: return "StrictBindingError";
    case Errc::InvalidGraph: return "InvalidGraph";
    case Errc::EmptyList: return "EmptyList";
    case Errc::ConflictingBinding: return "ConflictingBinding";
    case Errc::NoSuchActivity: return "NoSuchActivity";
    case Errc::NoSuchAgent: return "NoSuchAgent";
    case Errc::WrongKind: return "WrongKind";
    case Errc::InvalidStepSequence: return "InvalidStepSequence";
    case Errc::MalformedDocument: return "MalformedDocument";
    case Errc::UnknownKind: return "UnknownKind";
    case Errc::UnsupportedVersion: return "UnsupportedVersion";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  Errc code() const noexcept { return code_; }

  // Message without the category prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace acdc

#endif  // ACDC_ERROR_HPP
