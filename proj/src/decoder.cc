// phonotact/decoder.cc

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

#include "phonotact/decoder.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <unordered_map>

#include "phonotact/error.h"
#include "phonotact/scorer.h"

namespace phonotact {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kLn10 = std::numbers::ln10;
constexpr size_t kAnchorTokens = 16;
// The anchor pass ignores candidates further than this below the best
// token's stay extension, which always exists and bounds the frame's best
// from below.
constexpr double kAnchorMargin = 30.0;

// uint64 -> int32 open-addressing map for per-frame recombination. Clearing
// is O(1); storage is reused across frames and utterances.
class FrameIndex {
 public:
  FrameIndex() { Rehash(1024); }

  void Clear() {
    if (++generation_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      generation_ = 1;
    }
    size_ = 0;
  }

  // Returns the slot value for `key`, inserting `value` if absent.
  // `inserted` tells which happened.
  int32_t &FindOrInsert(uint64_t key, int32_t value, bool *inserted) {
    if (2 * (size_ + 1) > stamp_.size()) Grow();
    size_t i = Slot(key);
    while (stamp_[i] == generation_) {
      if (keys_[i] == key) {
        *inserted = false;
        return values_[i];
      }
      i = (i + 1) & mask_;
    }
    stamp_[i] = generation_;
    keys_[i] = key;
    values_[i] = value;
    ++size_;
    *inserted = true;
    return values_[i];
  }

 private:
  size_t Slot(uint64_t key) const {
    key ^= key >> 33;
    key *= 0xff51afd7ed558ccdULL;
    key ^= key >> 33;
    return static_cast<size_t>(key) & mask_;
  }

  void Rehash(size_t capacity) {
    keys_.assign(capacity, 0);
    values_.assign(capacity, 0);
    stamp_.assign(capacity, 0);
    mask_ = capacity - 1;
    generation_ = 1;
  }

  void Grow() {
    std::vector<uint64_t> keys;
    std::vector<int32_t> values;
    for (size_t i = 0; i < stamp_.size(); ++i) {
      if (stamp_[i] != generation_) continue;
      keys.push_back(keys_[i]);
      values.push_back(values_[i]);
    }
    Rehash(stamp_.size() * 2);
    size_ = 0;
    bool ins;
    for (size_t i = 0; i < keys.size(); ++i) FindOrInsert(keys[i], values[i], &ins);
  }

  std::vector<uint64_t> keys_;
  std::vector<int32_t> values_;
  std::vector<uint32_t> stamp_;
  size_t mask_ = 0;
  size_t size_ = 0;
  uint32_t generation_ = 1;
};

}  // namespace

void DecodeConfig::Validate() const {
  if (!(lm_weight >= 0.0))
    throw Error(ErrorCode::kInvalidConfig, "lm_weight must be >= 0");
  if (!(beam > 0.0))
    throw Error(ErrorCode::kInvalidConfig, "beam must be > 0");
  if (std::isnan(insertion_penalty))
    throw Error(ErrorCode::kInvalidConfig, "insertion_penalty is NaN");
}

void Lexicon::Add(const std::string &word, PhoneSeq phones) {
  if (phones.empty())
    throw Error(ErrorCode::kMalformedLexicon,
                "word '" + word + "' has an empty pronunciation");
  if (!entries.emplace(word, std::move(phones)).second)
    throw Error(ErrorCode::kMalformedLexicon, "duplicate word '" + word + "'");
}

Lexicon ReadLexicon(std::istream &in, const std::string &source) {
  Lexicon lex;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      size_t tab = line.find('\t');
      if (tab == std::string::npos || tab == 0)
        throw Error(ErrorCode::kMalformedLexicon,
                    "expected '<word>\\t<IPA phones>'");
      lex.Add(line.substr(0, tab), Tokenize(line.substr(tab + 1)));
    } catch (const Error &e) {
      throw e.At(source, lineno);
    }
  }
  return lex;
}

Lexicon ReadLexiconFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ReadLexicon(in, path);
}

void WriteLexicon(const Lexicon &lex, std::ostream &out) {
  for (const auto &[word, phones] : lex.entries)
    out << word << '\t' << Render(phones, " ") << '\n';
}

// Token passing over (LM state, unit, position-in-unit). A unit is a lexicon
// word; in phone mode every unit is a single phone.
class UnitSearch {
 public:
  struct Unit {
    std::vector<int32_t> phones;  // indices into the acoustic inventory
    TokenId lm_id;
    std::string word;
  };

  UnitSearch(const NGramModel &lm, std::vector<Unit> units, PhoneSeq inventory)
      : lm_(lm), units_(std::move(units)), inventory_(std::move(inventory)) {
    begin_state_ = Intern(lm_.BeginState());
    by_first_.resize(inventory_.size());
    for (int32_t v = 0; v < static_cast<int32_t>(units_.size()); ++v)
      by_first_[units_[v].phones[0]].push_back(v);
  }

  const std::vector<Unit> &units() const { return units_; }

  DecodeHypothesis Run(const Posteriorgram &pg, const DecodeConfig &cfg,
                       bool words);

 private:
  // Successor arcs of one LM state, grouped by the unit's first phone and
  // sorted by LM score (best first) so a scan can stop at the threshold.
  struct Arc {
    double ln;
    int32_t next;
    int32_t unit;
  };
  struct StateArcs {
    bool built = false;
    std::vector<Arc> arcs;
    std::vector<uint32_t> begin;  // per first phone, size |inventory| + 1
  };

  struct Token {
    double total;
    double ac;
    double lm;
    int32_t emissions;
    int32_t state;
    int32_t unit;
    int32_t pos;
    int32_t trace;  // last emission in the arena
    // Incoming-arc data, used for tie-breaking and to extend the trace.
    bool moved;
    int32_t pred_unit;
    int32_t pred_pos;
    int32_t pred_state;
  };

  struct TraceNode {
    int32_t unit;
    int32_t pos;
    int32_t prev;
  };

  int32_t Intern(const NGramModel::State &s) {
    auto [it, inserted] =
        state_index_.emplace(s, static_cast<int32_t>(states_.size()));
    if (inserted) {
      states_.push_back(s);
      trans_.emplace_back();
      eos_.push_back(std::numeric_limits<double>::quiet_NaN());
    }
    return it->second;
  }

  const StateArcs &Arcs(int32_t state) {
    if (trans_[state].built) return trans_[state];
    StateArcs sa;
    const size_t num_phones = by_first_.size();
    sa.begin.assign(num_phones + 1, 0);
    sa.arcs.reserve(units_.size());
    NGramModel::State from = states_[state];
    for (size_t f = 0; f < num_phones; ++f) {
      sa.begin[f] = static_cast<uint32_t>(sa.arcs.size());
      for (int32_t v : by_first_[f]) {
        NGramModel::State next;
        double lp = lm_.Score(from, units_[v].lm_id, &next);
        sa.arcs.push_back({lp * kLn10, Intern(next), v});
      }
      std::stable_sort(sa.arcs.begin() + sa.begin[f], sa.arcs.end(),
                       [](const Arc &x, const Arc &y) { return x.ln > y.ln; });
    }
    sa.begin[num_phones] = static_cast<uint32_t>(sa.arcs.size());
    sa.built = true;
    trans_[state] = std::move(sa);  // Intern may have grown trans_
    return trans_[state];
  }

  double EosScore(int32_t state) {
    if (std::isnan(eos_[state]))
      eos_[state] = lm_.Score(states_[state], Vocabulary::kEosId, nullptr) * kLn10;
    return eos_[state];
  }

  static uint64_t KeyOf(int32_t state, int32_t unit, int32_t pos) {
    return (static_cast<uint64_t>(state) << 32) |
           (static_cast<uint64_t>(unit) << 8) | static_cast<uint64_t>(pos);
  }

  // True if candidate `a` should replace incumbent `b` at the same key.
  bool StateLess(int32_t a, int32_t b) const {
    const auto &x = states_[a];
    const auto &y = states_[b];
    return std::lexicographical_compare(x.ids.begin(), x.ids.begin() + x.len,
                                        y.ids.begin(), y.ids.begin() + y.len);
  }
  bool Better(const Token &a, const Token &b) const {
    if (a.total != b.total) return a.total > b.total;
    if (a.moved != b.moved) return !a.moved;  // staying wins
    if (a.pred_unit != b.pred_unit) return a.pred_unit < b.pred_unit;
    if (a.pred_pos != b.pred_pos) return a.pred_pos < b.pred_pos;
    return StateLess(a.pred_state, b.pred_state);
  }
  // Ordering of live tokens, used to pick one among equal scores.
  bool Preferred(const Token &a, const Token &b) const {
    if (a.total != b.total) return a.total > b.total;
    if (a.unit != b.unit) return a.unit < b.unit;
    if (a.pos != b.pos) return a.pos < b.pos;
    return StateLess(a.state, b.state);
  }

  void Relax(const Token &cand) {
    bool inserted;
    int32_t &slot =
        next_index_.FindOrInsert(KeyOf(cand.state, cand.unit, cand.pos),
                                 static_cast<int32_t>(next_.size()), &inserted);
    if (inserted) {
      next_.push_back(cand);
    } else if (Better(cand, next_[slot])) {
      next_[slot] = cand;
    }
  }

  // Expands frame t from cur_ into next_. Candidates below `threshold` are
  // dropped.
  void Step(const std::vector<double> &ac, const DecodeConfig &cfg,
            double threshold);
  void Start(const std::vector<double> &ac, const DecodeConfig &cfg,
             double threshold);
  // Keeps the max_tokens best of next_, moves them into cur_ and
  // materialises trace nodes for moves.
  void Commit(size_t max_tokens);

  const NGramModel &lm_;
  std::vector<Unit> units_;
  PhoneSeq inventory_;
  std::vector<std::vector<int32_t>> by_first_;  // units by first phone
  int32_t begin_state_ = 0;

  std::unordered_map<NGramModel::State, int32_t, NGramModel::KeyHash>
      state_index_;
  std::vector<NGramModel::State> states_;
  std::vector<StateArcs> trans_;
  std::vector<double> eos_;

  std::vector<Token> cur_;
  std::vector<Token> next_;
  FrameIndex next_index_;
  FrameIndex ends_index_;
  std::vector<int32_t> ends_;
  std::vector<TraceNode> arena_;
};

void UnitSearch::Start(const std::vector<double> &ac, const DecodeConfig &cfg,
                       double threshold) {
  next_.clear();
  next_index_.Clear();
  const StateArcs &sa = Arcs(begin_state_);
  for (const Arc &tr : sa.arcs) {
    const int32_t v = tr.unit;
    double a = ac[units_[v].phones[0]];
    if (a == kNegInf) continue;
    Token tok;
    tok.ac = a;
    tok.lm = tr.ln;
    tok.emissions = 1;
    tok.total = a + cfg.lm_weight * tr.ln + cfg.insertion_penalty;
    if (tok.total < threshold) continue;
    tok.state = tr.next;
    tok.unit = v;
    tok.pos = 0;
    tok.trace = -1;
    tok.moved = true;
    tok.pred_unit = -1;
    tok.pred_pos = -1;
    tok.pred_state = begin_state_;
    Relax(tok);
  }
}

void UnitSearch::Step(const std::vector<double> &ac, const DecodeConfig &cfg,
                      double threshold) {
  next_.clear();
  next_index_.Clear();
  // Word-final tokens recombine on (LM state, last phone) before fan-out:
  // everything after a word end depends only on those two.
  ends_index_.Clear();
  ends_.clear();
  for (int32_t i = 0; i < static_cast<int32_t>(cur_.size()); ++i) {
    const Token &tok = cur_[i];
    const Unit &u = units_[tok.unit];
    const int32_t phone = u.phones[tok.pos];

    Token cand = tok;
    cand.moved = false;
    cand.pred_unit = tok.unit;
    cand.pred_pos = tok.pos;
    cand.pred_state = tok.state;

    // stay
    if (ac[phone] != kNegInf) {
      Token stay = cand;
      stay.total = tok.total + ac[phone];
      stay.ac = tok.ac + ac[phone];
      if (stay.total >= threshold) Relax(stay);
    }
    // next phone of the same unit
    if (tok.pos + 1 < static_cast<int32_t>(u.phones.size())) {
      const int32_t q = u.phones[tok.pos + 1];
      if (ac[q] != kNegInf) {
        Token adv = cand;
        adv.moved = true;
        adv.pos = tok.pos + 1;
        adv.total = tok.total + ac[q] + cfg.insertion_penalty;
        adv.ac = tok.ac + ac[q];
        adv.emissions = tok.emissions + 1;
        if (adv.total >= threshold) Relax(adv);
      }
    } else {
      uint64_t key = (static_cast<uint64_t>(tok.state) << 32) |
                     static_cast<uint32_t>(phone);
      bool inserted;
      int32_t &slot = ends_index_.FindOrInsert(
          key, static_cast<int32_t>(ends_.size()), &inserted);
      if (inserted)
        ends_.push_back(i);
      else if (Preferred(tok, cur_[ends_[slot]]))
        ends_[slot] = i;
    }
  }

  for (int32_t idx : ends_) {
    const Token &tok = cur_[idx];
    const int32_t last = units_[tok.unit].phones[tok.pos];
    const StateArcs &sa = Arcs(tok.state);
    for (int32_t first = 0; first < static_cast<int32_t>(by_first_.size());
         ++first) {
      if (first == last || ac[first] == kNegInf || by_first_[first].empty())
        continue;
      // Bound before touching the LM: the LM term is <= 0.
      const double partial = tok.total + ac[first] + cfg.insertion_penalty;
      if (partial < threshold) continue;
      for (uint32_t k = sa.begin[first]; k < sa.begin[first + 1]; ++k) {
        const Arc &tr = sa.arcs[k];
        Token c;
        c.total = partial + cfg.lm_weight * tr.ln;
        if (c.total < threshold) break;  // arcs are sorted by score
        c.ac = tok.ac + ac[first];
        c.lm = tok.lm + tr.ln;
        c.emissions = tok.emissions + 1;
        c.state = tr.next;
        c.unit = tr.unit;
        c.pos = 0;
        c.trace = tok.trace;
        c.moved = true;
        c.pred_unit = tok.unit;
        c.pred_pos = tok.pos;
        c.pred_state = tok.state;
        Relax(c);
      }
    }
  }
}

void UnitSearch::Commit(size_t max_tokens) {
  if (next_.size() > max_tokens) {
    std::nth_element(next_.begin(), next_.begin() + max_tokens, next_.end(),
                     [this](const Token &a, const Token &b) {
                       return Preferred(a, b);
                     });
    next_.resize(max_tokens);
  }
  for (Token &t : next_) {
    if (t.moved) {
      arena_.push_back({t.unit, t.pos, t.trace});
      t.trace = static_cast<int32_t>(arena_.size()) - 1;
    }
  }
  cur_.swap(next_);
}

DecodeHypothesis UnitSearch::Run(const Posteriorgram &pg,
                                 const DecodeConfig &cfg, bool words) {
  cfg.Validate();
  if (pg.phones != inventory_)
    throw Error(ErrorCode::kInventoryMismatch,
                "posteriorgram inventory differs from the decoder's");
  const size_t num_frames = pg.num_frames();
  if (num_frames == 0)
    throw Error(ErrorCode::kMalformedPgram, "posteriorgram has no frames");

  // Beam anchor: the per-frame best score of a pass that keeps only the
  // kAnchorTokens best tokens. It does not depend on the beam, so widening
  // the beam only ever adds tokens.
  std::vector<double> threshold(num_frames, kNegInf);
  if (std::isfinite(cfg.beam)) {
    arena_.clear();
    cur_.clear();
    const Token *lead = nullptr;
    for (size_t t = 0; t < num_frames; ++t) {
      if (t == 0) {
        Start(pg.frames[0], cfg, kNegInf);
      } else {
        const double stay =
            lead->total + pg.frames[t][units_[lead->unit].phones[lead->pos]];
        Step(pg.frames[t], cfg, stay - kAnchorMargin);
      }
      Commit(kAnchorTokens);
      if (cur_.empty()) break;
      lead = &cur_[0];
      for (const Token &tok : cur_)
        if (Preferred(tok, *lead)) lead = &tok;
      threshold[t] = lead->total - cfg.beam;
    }
  }

  arena_.clear();
  cur_.clear();
  for (size_t t = 0; t < num_frames; ++t) {
    if (t == 0)
      Start(pg.frames[0], cfg, threshold[0]);
    else
      Step(pg.frames[t], cfg, threshold[t]);
    Commit(std::numeric_limits<size_t>::max());
    if (cur_.empty()) break;
  }

  DecodeHypothesis hyp;
  const Token *best = nullptr;
  double best_final = kNegInf;
  double best_eos = 0.0;
  for (const Token &tok : cur_) {
    if (tok.pos + 1 != static_cast<int32_t>(units_[tok.unit].phones.size()))
      continue;
    double eos = EosScore(tok.state);
    double final_score = tok.total + cfg.lm_weight * eos;
    bool take = best == nullptr || final_score > best_final;
    if (!take && final_score == best_final) {
      Token a = tok, b = *best;
      a.total = b.total = 0.0;
      take = Preferred(a, b);
    }
    if (take) {
      best = &tok;
      best_final = final_score;
      best_eos = eos;
    }
  }
  if (best == nullptr) {
    hyp.score_total = hyp.score_acoustic = kNegInf;
    return hyp;
  }

  std::vector<TraceNode> path;
  for (int32_t i = best->trace; i >= 0; i = arena_[i].prev)
    path.push_back(arena_[i]);
  std::reverse(path.begin(), path.end());
  for (const TraceNode &n : path) {
    const Unit &u = units_[n.unit];
    hyp.phones.push_back(inventory_[u.phones[n.pos]]);
    if (words && n.pos == 0) hyp.words.push_back(u.word);
  }
  hyp.score_acoustic = best->ac;
  hyp.score_lm = best->lm + best_eos;
  hyp.score_total = hyp.score_acoustic + cfg.lm_weight * hyp.score_lm +
                    cfg.insertion_penalty * static_cast<double>(hyp.phones.size());
  return hyp;
}

namespace {

TokenId LmIdFor(const NGramModel &lm, const std::string &token,
                const char *what) {
  if (auto id = lm.vocab().Find(token)) return *id;
  if (lm.HasUnk()) return Vocabulary::kUnkId;
  throw Error(ErrorCode::kInventoryMismatch,
              std::string(what) + " '" + token +
                  "' is unknown to an LM without <unk>");
}

}  // namespace

struct PhoneLmDecoder::Impl {
  std::unique_ptr<UnitSearch> search;
};

PhoneLmDecoder::PhoneLmDecoder(const NGramModel &lm, PhoneSeq inventory)
    : impl_(std::make_unique<Impl>()) {
  std::vector<UnitSearch::Unit> units;
  for (size_t i = 0; i < inventory.size(); ++i) {
    const std::string &c = inventory[i].canonical();
    units.push_back({{static_cast<int32_t>(i)}, LmIdFor(lm, c, "phone"), c});
  }
  impl_->search =
      std::make_unique<UnitSearch>(lm, std::move(units), std::move(inventory));
}

PhoneLmDecoder::~PhoneLmDecoder() = default;
PhoneLmDecoder::PhoneLmDecoder(PhoneLmDecoder &&) noexcept = default;

DecodeHypothesis PhoneLmDecoder::Decode(const Posteriorgram &pg,
                                        const DecodeConfig &cfg) {
  return impl_->search->Run(pg, cfg, /*words=*/false);
}

struct WordLmDecoder::Impl {
  std::unique_ptr<UnitSearch> search;
  size_t skipped = 0;
};

WordLmDecoder::WordLmDecoder(const NGramModel &wlm, const Lexicon &lex,
                             PhoneSeq inventory)
    : impl_(std::make_unique<Impl>()) {
  if (lex.entries.empty())
    throw Error(ErrorCode::kEmptyLexicon, "lexicon has no entries");
  std::vector<UnitSearch::Unit> units;
  for (const auto &[word, pron] : lex.entries) {
    UnitSearch::Unit u;
    bool usable = pron.size() < 256;
    for (size_t k = 0; usable && k < pron.size(); ++k) {
      auto it = std::find(inventory.begin(), inventory.end(), pron[k]);
      if (it == inventory.end() || (k > 0 && pron[k] == pron[k - 1])) {
        usable = false;
        break;
      }
      u.phones.push_back(static_cast<int32_t>(it - inventory.begin()));
    }
    if (!usable) {
      ++impl_->skipped;
      continue;
    }
    u.lm_id = LmIdFor(wlm, word, "word");
    u.word = word;
    units.push_back(std::move(u));
  }
  if (units.empty())
    throw Error(ErrorCode::kInventoryMismatch,
                "no lexicon entry can be spelled with the acoustic inventory");
  impl_->search =
      std::make_unique<UnitSearch>(wlm, std::move(units), std::move(inventory));
}

WordLmDecoder::~WordLmDecoder() = default;
WordLmDecoder::WordLmDecoder(WordLmDecoder &&) noexcept = default;

DecodeHypothesis WordLmDecoder::Decode(const Posteriorgram &pg,
                                       const DecodeConfig &cfg) {
  DecodeHypothesis hyp = impl_->search->Run(pg, cfg, /*words=*/true);
  hyp.skipped_lexicon_entries = impl_->skipped;
  return hyp;
}

size_t WordLmDecoder::skipped_entries() const { return impl_->skipped; }

DecodeHypothesis DecodePhoneLm(const Posteriorgram &pg, const NGramModel &lm,
                               const DecodeConfig &cfg) {
  PhoneLmDecoder dec(lm, pg.phones);
  return dec.Decode(pg, cfg);
}

DecodeHypothesis DecodeWordLm(const Posteriorgram &pg, const NGramModel &wlm,
                              const Lexicon &lex, const DecodeConfig &cfg) {
  WordLmDecoder dec(wlm, lex, pg.phones);
  return dec.Decode(pg, cfg);
}

DecodeHypothesis ExhaustiveDecode(const Posteriorgram &pg,
                                  const NGramModel &lm,
                                  const DecodeConfig &cfg) {
  cfg.Validate();
  const size_t T = pg.num_frames();
  const size_t P = pg.num_phones();
  if (T == 0)
    throw Error(ErrorCode::kMalformedPgram, "posteriorgram has no frames");
  double space = std::pow(static_cast<double>(P), static_cast<double>(T));
  if (space > 1e7)
    throw Error(ErrorCode::kTooLarge,
                "exhaustive search over " + std::to_string(P) + "^" +
                    std::to_string(T) + " labellings");
  std::vector<TokenId> ids(P);
  for (size_t p = 0; p < P; ++p)
    ids[p] = LmIdFor(lm, pg.phones[p].canonical(), "phone");

  DecodeHypothesis best;
  best.score_total = kNegInf;
  best.score_acoustic = kNegInf;
  bool found = false;
  std::vector<size_t> label(T, 0);
  std::vector<TokenId> history;
  while (true) {
    double ac = 0.0;
    for (size_t t = 0; t < T && ac != kNegInf; ++t) ac += pg.frames[t][label[t]];
    if (ac != kNegInf) {
      history.assign(std::max(lm.order() - 1, 0), Vocabulary::kBosId);
      size_t emissions = 0;
      double lm10 = 0.0;
      for (size_t t = 0; t < T; ++t) {
        if (t > 0 && label[t] == label[t - 1]) continue;
        lm10 += lm.LogProb(history, ids[label[t]]);
        history.push_back(ids[label[t]]);
        ++emissions;
      }
      lm10 += lm.LogProb(history, Vocabulary::kEosId);
      double lm_ln = lm10 * kLn10;
      double total = ac + cfg.lm_weight * lm_ln +
                     cfg.insertion_penalty * static_cast<double>(emissions);
      if (!found || total > best.score_total) {
        found = true;
        best.score_total = total;
        best.score_acoustic = ac;
        best.score_lm = lm_ln;
        best.phones.clear();
        for (size_t t = 0; t < T; ++t)
          if (t == 0 || label[t] != label[t - 1])
            best.phones.push_back(pg.phones[label[t]]);
      }
    }
    size_t k = T;
    while (k > 0 && ++label[k - 1] == P) label[--k] = 0;
    if (k == 0) break;
  }
  return best;
}

std::vector<double> DefaultLmWeights() {
  std::vector<double> w;
  for (int i = 2; i <= 17; ++i) w.push_back(i);
  return w;
}

namespace {

template <typename Decoder>
SweepResult Sweep(std::span<const DevItem> dev, Decoder &decoder,
                  std::span<const double> weights, DecodeConfig cfg) {
  if (weights.empty())
    throw Error(ErrorCode::kInvalidConfig, "no LM weights to sweep");
  if (dev.empty())
    throw Error(ErrorCode::kEmptyReference, "empty development set");
  SweepResult res;
  bool first = true;
  std::vector<RefHyp> pairs;
  for (double w : weights) {
    cfg.lm_weight = w;
    pairs.clear();
    for (const DevItem &item : dev)
      pairs.emplace_back(item.reference, decoder.Decode(*item.pg, cfg).phones);
    double per = ComputePerReport(pairs).per;
    res.table.emplace_back(w, per);
    if (first || per < res.best_per ||
        (per == res.best_per && w < res.best_weight)) {
      res.best_weight = w;
      res.best_per = per;
      first = false;
    }
  }
  return res;
}

}  // namespace

SweepResult SweepLmWeight(std::span<const DevItem> dev, PhoneLmDecoder &decoder,
                          std::span<const double> weights,
                          const DecodeConfig &cfg) {
  return Sweep(dev, decoder, weights, cfg);
}

SweepResult SweepLmWeight(std::span<const DevItem> dev, WordLmDecoder &decoder,
                          std::span<const double> weights,
                          const DecodeConfig &cfg) {
  return Sweep(dev, decoder, weights, cfg);
}

}  // namespace phonotact
