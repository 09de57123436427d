// phonotact/synth.h

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

// Synthetic languages: an inventory drawn from a shared phone pool plus
// language-unique modified phones, and a first-order Markov chain over it.

#ifndef PHONOTACT_SYNTH_H_
#define PHONOTACT_SYNTH_H_

#include <cstdint>
#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonotact/decoder.h"
#include "phonotact/ipa.h"
#include "phonotact/transcript.h"

namespace phonotact {

struct SyntheticLanguage {
  PhoneInventory inventory;
  PhoneSeq phones;  // inventory order; indexes the transition matrix
  // (n+1) x (n+1). Row 0 is <s>, row i+1 is phones[i]; column i is
  // phones[i], column n is </s>.
  std::vector<std::vector<double>> transition;
  uint64_t seed = 0;

  size_t size() const { return phones.size(); }
  // Rows sum to 1 within 1e-9, no self transitions, <s> cannot end.
  // Throws kMalformedLanguage.
  void Validate() const;
};

// Bare phones every language draws its shared part from, in pool order.
std::span<const std::string> SharedPhonePool();

struct GenLanguageOptions {
  std::string id = "L0";
  int n_shared = 12;
  int n_unique = 4;
  // Dirichlet concentration of each transition row; small = peaked.
  double temperature = 0.1;
  uint64_t seed = 0;
  // Use only the first pool_size pool phones; 0 means the whole pool.
  int pool_size = 0;
  // Phones the unique part must avoid (other languages' inventories).
  std::set<IpaPhone> exclude;
};

// Errors: kInventoryTooSmall (n_shared + n_unique < 2, or not enough pool or
// unique candidates), kInvalidConfig.
SyntheticLanguage GenLanguage(const GenLanguageOptions &opts);

// Utterance i is drawn from its own stream keyed by (seed, i). Lengths lie in
// [min_len, max_len]: </s> is suppressed below min_len, forced at max_len.
// Ids are "<prefix><i>" zero-padded to 6 digits.
std::vector<Utterance> SampleCorpus(const SyntheticLanguage &lang, int n_utts,
                                    int min_len, int max_len, uint64_t seed,
                                    std::string_view prefix = "u");

// Text format:
//
//   LANG v1
//   id <id>
//   seed <seed>
//   phones <p1> ... <pn>
//   n+1 rows of n+1 probabilities ("%.17g")
void WriteLanguage(const SyntheticLanguage &lang, std::ostream &out);
void WriteLanguageFile(const SyntheticLanguage &lang, const std::string &path);
SyntheticLanguage ReadLanguage(std::istream &in,
                               const std::string &source = "<language>");
SyntheticLanguage ReadLanguageFile(const std::string &path);

// Greedy pseudo-word segmentation of a phone corpus. Chunks of 2-4 phones
// (never leaving a single phone over) are taken left to right, maximizing
// corpus count x length; ties go to the longer chunk, then the smaller one
// lexicographically. A word is named by its phones joined with '_'.
struct PseudoWords {
  Lexicon lexicon;
  std::vector<TokenSeq> corpus;  // the segmented utterances
};
PseudoWords SegmentPseudoWords(std::span<const Utterance> utts);

}  // namespace phonotact

#endif  // PHONOTACT_SYNTH_H_
