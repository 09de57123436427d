// phonotact/ngram.h

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

// Backoff n-gram language models over opaque string tokens (canonical phone
// strings or words). All probabilities are log10, as in ARPA files.

#ifndef PHONOTACT_NGRAM_H_
#define PHONOTACT_NGRAM_H_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace phonotact {

inline constexpr std::string_view kBos = "<s>";
inline constexpr std::string_view kEos = "</s>";
inline constexpr std::string_view kUnk = "<unk>";

// log10 of a zero probability, following the SRILM convention.
inline constexpr double kLog10Zero = -99.0;

using TokenId = int32_t;

class Vocabulary {
 public:
  static constexpr TokenId kBosId = 0;
  static constexpr TokenId kEosId = 1;
  static constexpr TokenId kUnkId = 2;

  Vocabulary();

  static bool IsReserved(std::string_view token);

  // Adds a token if absent and returns its id.
  TokenId Add(const std::string &token);
  std::optional<TokenId> Find(std::string_view token) const;
  TokenId IdOrUnk(std::string_view token) const;
  const std::string &Token(TokenId id) const { return items_[id]; }
  size_t size() const { return items_.size(); }

  friend bool operator==(const Vocabulary &a, const Vocabulary &b) {
    return a.items_ == b.items_;
  }

 private:
  std::vector<std::string> items_;
  std::unordered_map<std::string, TokenId> index_;
};

enum class Smoothing { kMle, kWittenBell };

std::string_view SmoothingName(Smoothing s);
// Accepts "mle" and "witten-bell"; throws kInvalidConfig otherwise.
Smoothing ParseSmoothing(std::string_view name);

struct NGramEntry {
  double logprob = kLog10Zero;
  double backoff = 0.0;
  bool has_backoff = false;
};

class NGramModel {
 public:
  static constexpr int kMaxOrder = 6;

  // Fixed-capacity token tuple; avoids allocation on the query path.
  struct Key {
    std::array<TokenId, kMaxOrder> ids{};
    uint8_t len = 0;

    Key() = default;
    explicit Key(std::span<const TokenId> s);
    std::span<const TokenId> view() const { return {ids.data(), len}; }
    friend bool operator==(const Key &a, const Key &b) {
      return a.len == b.len &&
             std::equal(a.ids.begin(), a.ids.begin() + a.len, b.ids.begin());
    }
  };
  struct KeyHash {
    size_t operator()(const Key &k) const;
  };

  // Decoder-side history: the longest stored suffix of what has been seen,
  // which is all the model can distinguish.
  using State = Key;

  NGramModel(int order, Vocabulary vocab, std::optional<Smoothing> smoothing);

  int order() const { return order_; }
  const Vocabulary &vocab() const { return vocab_; }
  std::optional<Smoothing> smoothing() const { return smoothing_; }

  // Whether <unk> has a unigram entry, i.e. unknown tokens can be scored.
  bool HasUnk() const;

  // log10 P(token | context). Only the last order-1 context tokens matter.
  double LogProb(std::span<const TokenId> context, TokenId token) const;

  State BeginState() const;
  // log10 P(token | state); `next` receives the successor state.
  double Score(const State &state, TokenId token, State *next) const;

  const NGramEntry *Find(std::span<const TokenId> ngram) const;
  void Insert(std::span<const TokenId> ngram, const NGramEntry &entry);
  NGramEntry *FindMutable(std::span<const TokenId> ngram);

  size_t NumNGrams(int n) const { return grams_[n - 1].size(); }
  // Entries of order n sorted by token ids.
  std::vector<std::pair<Key, NGramEntry>> SortedNGrams(int n) const;

  // Throws kMalformedArpa if some stored n-gram's context is not stored.
  void CheckNoOrphans() const;

 private:
  State Minimize(std::span<const TokenId> history) const;

  int order_;
  Vocabulary vocab_;
  std::optional<Smoothing> smoothing_;
  std::vector<std::unordered_map<Key, NGramEntry, KeyHash>> grams_;
};

using TokenSeq = std::vector<std::string>;

// Pads each sentence with order-1 <s> and terminates it with </s>.
// Errors: kEmptyCorpus, kReservedToken, kInvalidConfig (order out of range).
NGramModel TrainNGram(std::span<const TokenSeq> corpus, int order,
                      Smoothing smoothing);

// Sum of log10 probabilities of every token and the final </s>.
double LogProbSeq(const NGramModel &m, std::span<const std::string> seq);

// 10^(-total log10 prob / predicted tokens), </s> counted.
double Perplexity(const NGramModel &m, std::span<const TokenSeq> corpus);

}  // namespace phonotact

#endif  // PHONOTACT_NGRAM_H_
