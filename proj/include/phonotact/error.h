// phonotact/error.h

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

#ifndef PHONOTACT_ERROR_H_
#define PHONOTACT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace phonotact {

enum class ErrorCode {
  // ipa
  kUnsupportedCodepoint,
  kDanglingModifier,
  kDanglingTieBar,
  kNotSinglePhone,
  // lm
  kEmptyCorpus,
  kReservedToken,
  kMalformedArpa,
  // acoustic
  kEmptyTruth,
  kMalformedPgram,
  kInvalidProfile,
  // decoder
  kInventoryMismatch,
  kEmptyLexicon,
  kMalformedLexicon,
  kTooLarge,
  kInvalidConfig,
  // scorer
  kEmptyReference,
  kUnknownPhone,
  // harness
  kInventoryTooSmall,
  kMalformedConfig,
  kMalformedTranscript,
  kMalformedLanguage,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All data errors raised by the library. `where` carries "file:line" when the
// error came from parsing a file, and is empty otherwise.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message, std::string where = {});

  ErrorCode code() const { return code_; }
  const std::string &message() const { return message_; }
  const std::string &where() const { return where_; }

  // Returns a copy of this error with the location filled in.
  Error At(const std::string &file, size_t line) const;

 private:
  ErrorCode code_;
  std::string message_;
  std::string where_;
};

}  // namespace phonotact

#endif  // PHONOTACT_ERROR_H_
