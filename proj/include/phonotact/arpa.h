// phonotact/arpa.h

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

#ifndef PHONOTACT_ARPA_H_
#define PHONOTACT_ARPA_H_

#include <iosfwd>
#include <string>

#include "phonotact/ngram.h"

namespace phonotact {

// Writes
//   \data\ (header)
//   ngram 1=<count>
//   ...
//
//   \1-grams:
//   <log10prob>\t<w>[\t<log10backoff>]
//   ...
//   \end\ (last line)
//
// with every value printed "%.6f" and entries sorted by token id.
void WriteArpa(const NGramModel &m, std::ostream &out);
void WriteArpaFile(const NGramModel &m, const std::string &path);

// Fields may be separated by tabs or spaces. Text before "\data\" is skipped.
// Throws kMalformedArpa (with the offending line) on bad headers, count
// mismatches, unknown words in higher orders or orphan n-grams.
NGramModel ReadArpa(std::istream &in, const std::string &source = "<arpa>");
NGramModel ReadArpaFile(const std::string &path);

// The value as it appears after a write/read cycle.
double RoundToArpa(double v);

}  // namespace phonotact

#endif  // PHONOTACT_ARPA_H_
