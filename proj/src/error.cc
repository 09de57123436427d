// phonotact/error.cc

// Copyright 2026  The phonotact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "phonotact/error.h"

namespace phonotact {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnsupportedCodepoint: return "UnsupportedCodepoint";
    case ErrorCode::kDanglingModifier: return "DanglingModifier";
    case ErrorCode::kDanglingTieBar: return "DanglingTieBar";
    case ErrorCode::kNotSinglePhone: return "NotSinglePhone";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kReservedToken: return "ReservedToken";
    case ErrorCode::kMalformedArpa: return "MalformedArpa";
    case ErrorCode::kEmptyTruth: return "EmptyTruth";
    case ErrorCode::kMalformedPgram: return "MalformedPgram";
    case ErrorCode::kInvalidProfile: return "InvalidProfile";
    case ErrorCode::kInventoryMismatch: return "InventoryMismatch";
    case ErrorCode::kEmptyLexicon: return "EmptyLexicon";
    case ErrorCode::kMalformedLexicon: return "MalformedLexicon";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kUnknownPhone: return "UnknownPhone";
    case ErrorCode::kInventoryTooSmall: return "InventoryTooSmall";
    case ErrorCode::kMalformedConfig: return "MalformedConfig";
    case ErrorCode::kMalformedTranscript: return "MalformedTranscript";
    case ErrorCode::kMalformedLanguage: return "MalformedLanguage";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

namespace {

std::string Compose(ErrorCode code, const std::string &message,
                    const std::string &where) {
  std::string out;
  if (!where.empty()) out += where + ": ";
  out += std::string(ErrorCodeName(code)) + ": " + message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string &message, std::string where)
    : std::runtime_error(Compose(code, message, where)),
      code_(code),
      message_(message),
      where_(std::move(where)) {}

Error Error::At(const std::string &file, size_t line) const {
  return Error(code_, message_, file + ":" + std::to_string(line));
}

}  // namespace phonotact
