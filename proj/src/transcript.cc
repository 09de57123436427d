// phonotact/transcript.cc

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

#include "phonotact/transcript.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "phonotact/error.h"

namespace phonotact {

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  };
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

namespace {

// Splits "<id>\t<rest>"; returns false for blank lines.
bool SplitLine(std::string &line, std::string *id, std::string *rest) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line.find_first_not_of(" \t") == std::string::npos) return false;
  size_t tab = line.find('\t');
  if (tab == std::string::npos || tab == 0)
    throw Error(ErrorCode::kMalformedTranscript,
                "expected '<utt-id>\\t<transcript>'");
  *id = line.substr(0, tab);
  *rest = line.substr(tab + 1);
  return true;
}

std::ifstream OpenIn(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

}  // namespace

std::vector<Utterance> ReadTranscripts(std::istream &in, TranscriptMode mode,
                                       const std::string &source) {
  std::vector<Utterance> out;
  std::unordered_set<std::string> seen;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      Utterance utt;
      std::string text;
      if (!SplitLine(line, &utt.id, &text)) continue;
      if (!seen.insert(utt.id).second)
        throw Error(ErrorCode::kMalformedTranscript,
                    "duplicate utterance id '" + utt.id + "'");
      if (mode == TranscriptMode::kRawIpa) {
        utt.phones = Tokenize(text);
      } else {
        for (const std::string &field : SplitWhitespace(text))
          utt.phones.push_back(IpaPhone::Parse(field));
      }
      out.push_back(std::move(utt));
    } catch (const Error &e) {
      if (!e.where().empty()) throw;
      throw e.At(source, lineno);
    }
  }
  return out;
}

std::vector<Utterance> ReadTranscriptFile(const std::string &path,
                                          TranscriptMode mode) {
  std::ifstream in = OpenIn(path);
  return ReadTranscripts(in, mode, path);
}

std::vector<TokenUtterance> ReadTokenCorpus(std::istream &in,
                                            const std::string &source) {
  std::vector<TokenUtterance> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      TokenUtterance utt;
      std::string text;
      if (!SplitLine(line, &utt.id, &text)) continue;
      utt.tokens = SplitWhitespace(text);
      out.push_back(std::move(utt));
    } catch (const Error &e) {
      throw e.At(source, lineno);
    }
  }
  return out;
}

std::vector<TokenUtterance> ReadTokenCorpusFile(const std::string &path) {
  std::ifstream in = OpenIn(path);
  return ReadTokenCorpus(in, path);
}

void WriteTranscripts(std::ostream &out, std::span<const Utterance> utts) {
  for (const Utterance &u : utts)
    out << u.id << '\t' << Render(u.phones, " ") << '\n';
}

void WriteTranscriptFile(const std::string &path,
                         std::span<const Utterance> utts) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  WriteTranscripts(out, utts);
}

void WriteTokenCorpus(std::ostream &out, std::span<const TokenUtterance> utts) {
  for (const TokenUtterance &u : utts) {
    out << u.id << '\t';
    for (size_t i = 0; i < u.tokens.size(); ++i)
      out << (i ? " " : "") << u.tokens[i];
    out << '\n';
  }
}

}  // namespace phonotact
