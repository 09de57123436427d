// phonotact/transcript.h

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

// Transcript files: UTF-8, one utterance per line, "<utt-id>\t<transcript>".
// Blank lines are skipped.

#ifndef PHONOTACT_TRANSCRIPT_H_
#define PHONOTACT_TRANSCRIPT_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "phonotact/ipa.h"

namespace phonotact {

enum class TranscriptMode {
  kRawIpa,        // the tokenizer is applied to the whole transcript
  kPretokenized,  // whitespace-separated, each field exactly one phone
};

struct Utterance {
  std::string id;
  PhoneSeq phones;
};

// Word (or any opaque token) corpus line.
struct TokenUtterance {
  std::string id;
  std::vector<std::string> tokens;
};

// `source` names the stream in error locations.
std::vector<Utterance> ReadTranscripts(std::istream &in, TranscriptMode mode,
                                       const std::string &source);
std::vector<Utterance> ReadTranscriptFile(const std::string &path,
                                          TranscriptMode mode);
std::vector<TokenUtterance> ReadTokenCorpus(std::istream &in,
                                            const std::string &source);
std::vector<TokenUtterance> ReadTokenCorpusFile(const std::string &path);

// Phones are written space-separated, readable in either mode.
void WriteTranscripts(std::ostream &out, std::span<const Utterance> utts);
void WriteTranscriptFile(const std::string &path,
                         std::span<const Utterance> utts);
void WriteTokenCorpus(std::ostream &out, std::span<const TokenUtterance> utts);

std::vector<std::string> SplitWhitespace(std::string_view s);

}  // namespace phonotact

#endif  // PHONOTACT_TRANSCRIPT_H_
