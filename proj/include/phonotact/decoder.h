// phonotact/decoder.h

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

// Frame-synchronous token-passing Viterbi decoding of phone sequences from a
// posteriorgram, fused with either a phone n-gram LM or a lexicon plus word
// n-gram LM.
//
// Path model: every frame is labelled with one phone; runs of equal labels
// collapse into one emitted phone, so two equal phones are never adjacent in
// the output. A path scores
//
//   sum_t log P_ac(label_t | t)
//     + lm_weight * (sum over LM events of ln P_lm, including </s>)
//     + insertion_penalty * (number of emitted phones).
//
// LM events are emitted phones (phone mode) or entered words (word mode).

#ifndef PHONOTACT_DECODER_H_
#define PHONOTACT_DECODER_H_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "phonotact/ipa.h"
#include "phonotact/ngram.h"
#include "phonotact/posteriorgram.h"

namespace phonotact {

enum class DecodeMode { kPhoneLm, kWordLm };

struct DecodeConfig {
  double lm_weight = 1.0;
  double insertion_penalty = 0.0;  // natural-log units per emitted phone
  // Tokens scoring more than `beam` below a beam-independent anchor (the
  // greedy single-token pass) are pruned. Infinity disables pruning and
  // gives the exact Viterbi optimum.
  double beam = std::numeric_limits<double>::infinity();
  DecodeMode mode = DecodeMode::kPhoneLm;

  // lm_weight >= 0, beam > 0. Throws kInvalidConfig.
  void Validate() const;
};

struct Lexicon {
  std::map<std::string, PhoneSeq> entries;

  // Throws kMalformedLexicon on an empty pronunciation or a duplicate word.
  void Add(const std::string &word, PhoneSeq phones);
};

// "<word>\t<IPA phone string>" per line.
Lexicon ReadLexicon(std::istream &in, const std::string &source = "<lexicon>");
Lexicon ReadLexiconFile(const std::string &path);
void WriteLexicon(const Lexicon &lex, std::ostream &out);

struct DecodeHypothesis {
  PhoneSeq phones;
  std::vector<std::string> words;  // word mode only
  double score_total = 0.0;
  double score_acoustic = 0.0;
  double score_lm = 0.0;  // natural log, unweighted
  // Word mode: lexicon entries dropped because a phone is outside the
  // acoustic inventory or the pronunciation repeats a phone back to back.
  size_t skipped_lexicon_entries = 0;
};

// Reusable phone-LM decoder for one acoustic inventory. Keeps a lazily filled
// LM transition cache, so it is cheap to decode many utterances or weights;
// not safe to share between threads.
class PhoneLmDecoder {
 public:
  // Throws kInventoryMismatch if an inventory phone is missing from the LM
  // and the LM cannot score <unk>. Keeps a reference: `lm` must outlive the
  // decoder.
  PhoneLmDecoder(const NGramModel &lm, PhoneSeq inventory);
  ~PhoneLmDecoder();
  PhoneLmDecoder(PhoneLmDecoder &&) noexcept;

  // pg.phones must equal the inventory given at construction.
  DecodeHypothesis Decode(const Posteriorgram &pg, const DecodeConfig &cfg);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

class WordLmDecoder {
 public:
  // Errors: kEmptyLexicon, kInventoryMismatch (no usable entry, or a word
  // unknown to an LM without <unk>).
  // `wlm` must outlive the decoder.
  WordLmDecoder(const NGramModel &wlm, const Lexicon &lex, PhoneSeq inventory);
  ~WordLmDecoder();
  WordLmDecoder(WordLmDecoder &&) noexcept;

  DecodeHypothesis Decode(const Posteriorgram &pg, const DecodeConfig &cfg);
  size_t skipped_entries() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

DecodeHypothesis DecodePhoneLm(const Posteriorgram &pg, const NGramModel &lm,
                               const DecodeConfig &cfg);
DecodeHypothesis DecodeWordLm(const Posteriorgram &pg, const NGramModel &wlm,
                              const Lexicon &lex, const DecodeConfig &cfg);

// Enumerates every frame labelling; a test oracle. Throws kTooLarge when
// |P|^T > 1e7.
DecodeHypothesis ExhaustiveDecode(const Posteriorgram &pg, const NGramModel &lm,
                                  const DecodeConfig &cfg);

struct DevItem {
  const Posteriorgram *pg;
  PhoneSeq reference;
};

struct SweepResult {
  double best_weight = 0.0;
  double best_per = 0.0;
  std::vector<std::pair<double, double>> table;  // (lm_weight, PER)
};

// Integer weights 2..17.
std::vector<double> DefaultLmWeights();

// Decodes the dev set at every weight and keeps the weight with the lowest
// pooled PER, the smallest weight on ties. cfg.lm_weight is ignored.
SweepResult SweepLmWeight(std::span<const DevItem> dev, PhoneLmDecoder &decoder,
                          std::span<const double> weights,
                          const DecodeConfig &cfg);
SweepResult SweepLmWeight(std::span<const DevItem> dev, WordLmDecoder &decoder,
                          std::span<const double> weights,
                          const DecodeConfig &cfg);

}  // namespace phonotact

#endif  // PHONOTACT_DECODER_H_
