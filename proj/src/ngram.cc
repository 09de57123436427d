// phonotact/ngram.cc

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

#include "phonotact/ngram.h"

#include <cmath>
#include <map>
#include <set>

#include "phonotact/error.h"

namespace phonotact {

Vocabulary::Vocabulary() {
  Add(std::string(kBos));
  Add(std::string(kEos));
  Add(std::string(kUnk));
}

bool Vocabulary::IsReserved(std::string_view token) {
  return token == kBos || token == kEos || token == kUnk;
}

TokenId Vocabulary::Add(const std::string &token) {
  auto it = index_.find(token);
  if (it != index_.end()) return it->second;
  TokenId id = static_cast<TokenId>(items_.size());
  items_.push_back(token);
  index_.emplace(token, id);
  return id;
}

std::optional<TokenId> Vocabulary::Find(std::string_view token) const {
  auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TokenId Vocabulary::IdOrUnk(std::string_view token) const {
  return Find(token).value_or(kUnkId);
}

std::string_view SmoothingName(Smoothing s) {
  return s == Smoothing::kMle ? "mle" : "witten-bell";
}

Smoothing ParseSmoothing(std::string_view name) {
  if (name == "mle") return Smoothing::kMle;
  if (name == "witten-bell" || name == "wb") return Smoothing::kWittenBell;
  throw Error(ErrorCode::kInvalidConfig,
              "unknown smoothing '" + std::string(name) +
                  "' (expected mle or witten-bell)");
}

NGramModel::Key::Key(std::span<const TokenId> s) {
  len = static_cast<uint8_t>(s.size());
  std::copy(s.begin(), s.end(), ids.begin());
}

size_t NGramModel::KeyHash::operator()(const Key &k) const {
  uint64_t h = 1469598103934665603ull ^ k.len;
  for (uint8_t i = 0; i < k.len; ++i) {
    h ^= static_cast<uint32_t>(k.ids[i]);
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h);
}

NGramModel::NGramModel(int order, Vocabulary vocab,
                       std::optional<Smoothing> smoothing)
    : order_(order),
      vocab_(std::move(vocab)),
      smoothing_(smoothing),
      grams_(order) {
  if (order < 1 || order > kMaxOrder)
    throw Error(ErrorCode::kInvalidConfig,
                "n-gram order must be in [1, " + std::to_string(kMaxOrder) +
                    "], got " + std::to_string(order));
}

bool NGramModel::HasUnk() const {
  TokenId unk = Vocabulary::kUnkId;
  return Find(std::span<const TokenId>(&unk, 1)) != nullptr;
}

const NGramEntry *NGramModel::Find(std::span<const TokenId> ngram) const {
  if (ngram.empty() || ngram.size() > static_cast<size_t>(order_))
    return nullptr;
  const auto &table = grams_[ngram.size() - 1];
  auto it = table.find(Key(ngram));
  return it == table.end() ? nullptr : &it->second;
}

NGramEntry *NGramModel::FindMutable(std::span<const TokenId> ngram) {
  return const_cast<NGramEntry *>(std::as_const(*this).Find(ngram));
}

void NGramModel::Insert(std::span<const TokenId> ngram,
                        const NGramEntry &entry) {
  grams_.at(ngram.size() - 1)[Key(ngram)] = entry;
}

double NGramModel::LogProb(std::span<const TokenId> context,
                           TokenId token) const {
  size_t k = std::min(context.size(), static_cast<size_t>(order_ - 1));
  std::span<const TokenId> hist = context.last(k);
  double acc = 0.0;
  Key key;
  for (size_t drop = 0; drop <= k; ++drop) {
    std::span<const TokenId> h = hist.subspan(drop);
    key.len = static_cast<uint8_t>(h.size() + 1);
    std::copy(h.begin(), h.end(), key.ids.begin());
    key.ids[h.size()] = token;
    const auto &table = grams_[h.size()];
    auto it = table.find(key);
    if (it != table.end()) return acc + it->second.logprob;
    if (!h.empty()) {
      const NGramEntry *ctx = Find(h);
      if (ctx != nullptr && ctx->has_backoff) acc += ctx->backoff;
    }
  }
  return acc + kLog10Zero;
}

NGramModel::State NGramModel::Minimize(
    std::span<const TokenId> history) const {
  size_t k = std::min(history.size(), static_cast<size_t>(order_ - 1));
  std::span<const TokenId> h = history.last(k);
  for (size_t drop = 0; drop < h.size(); ++drop) {
    if (Find(h.subspan(drop)) != nullptr) return State(h.subspan(drop));
  }
  return State();
}

NGramModel::State NGramModel::BeginState() const {
  std::vector<TokenId> bos(order_ - 1, Vocabulary::kBosId);
  return Minimize(bos);
}

double NGramModel::Score(const State &state, TokenId token,
                         State *next) const {
  double lp = LogProb(state.view(), token);
  if (next != nullptr) {
    std::array<TokenId, kMaxOrder> buf;
    std::copy(state.ids.begin(), state.ids.begin() + state.len, buf.begin());
    buf[state.len] = token;
    *next = Minimize(std::span<const TokenId>(buf.data(), state.len + 1));
  }
  return lp;
}

std::vector<std::pair<NGramModel::Key, NGramEntry>> NGramModel::SortedNGrams(
    int n) const {
  std::vector<std::pair<Key, NGramEntry>> out(grams_[n - 1].begin(),
                                              grams_[n - 1].end());
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    return std::lexicographical_compare(
        a.first.ids.begin(), a.first.ids.begin() + a.first.len,
        b.first.ids.begin(), b.first.ids.begin() + b.first.len);
  });
  return out;
}

void NGramModel::CheckNoOrphans() const {
  for (int n = 2; n <= order_; ++n) {
    for (const auto &[key, entry] : grams_[n - 1]) {
      auto ctx = key.view().first(n - 1);
      if (Find(ctx) == nullptr) {
        std::string words;
        for (TokenId id : key.view()) words += " " + vocab_.Token(id);
        throw Error(ErrorCode::kMalformedArpa,
                    "n-gram" + words + " has no stored context");
      }
    }
  }
}

namespace {

double ToLog10(double p) { return p > 0.0 ? std::log10(p) : kLog10Zero; }

}  // namespace

NGramModel TrainNGram(std::span<const TokenSeq> corpus, int order,
                      Smoothing smoothing) {
  if (corpus.empty())
    throw Error(ErrorCode::kEmptyCorpus, "cannot train on an empty corpus");
  std::set<std::string> tokens;
  for (const TokenSeq &sent : corpus) {
    for (const std::string &t : sent) {
      if (Vocabulary::IsReserved(t))
        throw Error(ErrorCode::kReservedToken,
                    "corpus contains reserved token " + t);
      tokens.insert(t);
    }
  }
  Vocabulary vocab;
  for (const std::string &t : tokens) vocab.Add(t);
  NGramModel model(order, vocab, smoothing);

  // counts[k-1] holds k-gram counts; std::map keeps contexts contiguous and
  // the float summation order fixed.
  std::vector<std::map<std::vector<TokenId>, int64_t>> counts(order);
  std::vector<TokenId> padded;
  for (const TokenSeq &sent : corpus) {
    padded.assign(order - 1, Vocabulary::kBosId);
    for (const std::string &t : sent) padded.push_back(*vocab.Find(t));
    padded.push_back(Vocabulary::kEosId);
    for (size_t i = order - 1; i < padded.size(); ++i) {
      for (int k = 1; k <= order; ++k) {
        std::vector<TokenId> g(padded.begin() + (i + 1 - k),
                               padded.begin() + (i + 1));
        ++counts[k - 1][g];
      }
    }
  }

  const bool mle = smoothing == Smoothing::kMle;

  // Unigrams. Witten-Bell leaves T/(N+T) for the unseen tokens (<unk> at
  // least), shared evenly.
  {
    int64_t total = 0;
    for (const auto &[g, c] : counts[0]) total += c;
    const double types = static_cast<double>(counts[0].size());
    size_t unseen = 0;
    for (TokenId id = 0; id < static_cast<TokenId>(vocab.size()); ++id) {
      if (id != Vocabulary::kBosId && !counts[0].count({id})) ++unseen;
    }
    const double denom = mle ? static_cast<double>(total) : total + types;
    for (TokenId id = 0; id < static_cast<TokenId>(vocab.size()); ++id) {
      NGramEntry e;
      if (id != Vocabulary::kBosId) {
        auto it = counts[0].find({id});
        double p;
        if (it != counts[0].end())
          p = it->second / denom;
        else
          p = mle ? 0.0 : (types / denom) / static_cast<double>(unseen);
        e.logprob = ToLog10(p);
      }
      model.Insert(std::span<const TokenId>(&id, 1), e);
    }
  }

  for (int k = 2; k <= order; ++k) {
    const auto &table = counts[k - 1];
    auto it = table.begin();
    while (it != table.end()) {
      std::vector<TokenId> ctx(it->first.begin(), it->first.end() - 1);
      auto end = it;
      int64_t ctx_total = 0;
      int64_t types = 0;
      while (end != table.end() &&
             std::equal(ctx.begin(), ctx.end(), end->first.begin())) {
        ctx_total += end->second;
        ++types;
        ++end;
      }
      const double denom =
          mle ? static_cast<double>(ctx_total)
              : static_cast<double>(ctx_total + types);
      std::span<const TokenId> lower_ctx =
          std::span<const TokenId>(ctx).subspan(1);
      double lower_seen = 0.0;
      for (auto g = it; g != end; ++g) {
        TokenId w = g->first.back();
        lower_seen += std::pow(10.0, model.LogProb(lower_ctx, w));
        NGramEntry e;
        e.logprob = ToLog10(g->second / denom);
        model.Insert(g->first, e);
      }
      NGramEntry *ctx_entry = model.FindMutable(ctx);
      if (ctx_entry == nullptr) {
        // Contexts ending in <s> are never predicted themselves.
        model.Insert(ctx, NGramEntry{});
        ctx_entry = model.FindMutable(ctx);
      }
      ctx_entry->has_backoff = true;
      if (mle) {
        ctx_entry->backoff = kLog10Zero;
      } else {
        double left = static_cast<double>(types) / denom;
        double lower_left = 1.0 - lower_seen;
        ctx_entry->backoff =
            lower_left > 0.0 ? std::log10(left / lower_left) : kLog10Zero;
      }
      it = end;
    }
  }
  return model;
}

double LogProbSeq(const NGramModel &m, std::span<const std::string> seq) {
  std::vector<TokenId> hist(m.order() - 1, Vocabulary::kBosId);
  double total = 0.0;
  for (const std::string &t : seq) {
    TokenId id = m.vocab().IdOrUnk(t);
    total += m.LogProb(hist, id);
    hist.push_back(id);
  }
  total += m.LogProb(hist, Vocabulary::kEosId);
  return total;
}

double Perplexity(const NGramModel &m, std::span<const TokenSeq> corpus) {
  if (corpus.empty())
    throw Error(ErrorCode::kEmptyCorpus, "perplexity of an empty corpus");
  double total = 0.0;
  size_t predicted = 0;
  for (const TokenSeq &sent : corpus) {
    total += LogProbSeq(m, sent);
    predicted += sent.size() + 1;
  }
  return std::pow(10.0, -total / static_cast<double>(predicted));
}

}  // namespace phonotact
