// phonotact/synth.cc

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

#include "phonotact/synth.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>

#include "phonotact/error.h"
#include "phonotact/rng.h"

namespace phonotact {

namespace {

// Interleaved so that any prefix mixes vowels and consonants.
const std::string kPool[] = {
    "a", "p", "i", "t", "u", "k", "e", "m", "o", "n", "s", "l", "ə", "b",
    "d", "g", "f", "r", "j", "w", "ɛ", "ɔ", "ʃ", "z", "v", "h", "x", "ŋ",
    "ɲ", "ʁ"};

// Tone and length marks that make a shared base language-unique.
const char *const kVowelMarks[] = {"ː", "˥", "˩", "˥˩", "˧˥", "˥ː", "˩ː"};
const char *const kConsonantMarks[] = {"ː"};

constexpr double kRowFloor = 1e-12;

template <typename T>
void Shuffle(std::vector<T> *v, Rng &rng) {
  for (size_t i = v->size(); i > 1; --i) std::swap((*v)[i - 1], (*v)[rng.Index(i)]);
}

}  // namespace

std::span<const std::string> SharedPhonePool() { return kPool; }

void SyntheticLanguage::Validate() const {
  const size_t n = phones.size();
  auto bad = [](const std::string &m) {
    return Error(ErrorCode::kMalformedLanguage, m);
  };
  if (n < 2) throw bad("a language needs at least 2 phones");
  if (transition.size() != n + 1) throw bad("transition matrix has wrong size");
  for (size_t r = 0; r <= n; ++r) {
    if (transition[r].size() != n + 1)
      throw bad("transition row " + std::to_string(r) + " has wrong size");
    double sum = 0.0;
    for (double v : transition[r]) {
      if (!(v >= 0.0)) throw bad("negative or NaN transition probability");
      sum += v;
    }
    if (std::fabs(sum - 1.0) > 1e-9)
      throw bad("transition row " + std::to_string(r) + " does not sum to 1");
    if (r > 0 && transition[r][r - 1] != 0.0)
      throw bad("self transition on " + phones[r - 1].canonical());
  }
  if (transition[0][n] != 0.0) throw bad("<s> may not go straight to </s>");
}

SyntheticLanguage GenLanguage(const GenLanguageOptions &opts) {
  if (opts.n_shared < 0 || opts.n_unique < 0 ||
      opts.n_shared + opts.n_unique < 2)
    throw Error(ErrorCode::kInventoryTooSmall,
                "n_shared + n_unique must be at least 2");
  if (!(opts.temperature > 0.0))
    throw Error(ErrorCode::kInvalidConfig, "temperature must be > 0");
  const int pool_size = opts.pool_size == 0 ? static_cast<int>(std::size(kPool))
                                            : opts.pool_size;
  if (pool_size < 0 || pool_size > static_cast<int>(std::size(kPool)))
    throw Error(ErrorCode::kInvalidConfig,
                "pool_size must be in [0, " + std::to_string(std::size(kPool)) +
                    "]");
  if (opts.n_shared > pool_size)
    throw Error(ErrorCode::kInventoryTooSmall,
                "the shared pool has only " + std::to_string(pool_size) +
                    " phones");

  Rng rng(MixSeed(opts.seed, StableHash("language")));
  SyntheticLanguage lang;
  lang.seed = opts.seed;
  lang.inventory.language_id = opts.id;

  std::vector<std::string> pool(kPool, kPool + pool_size);
  Shuffle(&pool, rng);
  std::vector<IpaPhone> shared;
  for (int i = 0; i < opts.n_shared; ++i)
    shared.push_back(IpaPhone::Parse(pool[i]));
  std::sort(shared.begin(), shared.end());
  lang.inventory.phones.insert(shared.begin(), shared.end());

  if (opts.n_unique > 0) {
    std::vector<IpaPhone> candidates;
    for (const IpaPhone &base : shared) {
      const bool vowel = ClassOf(base) == PhoneClass::kVowel;
      auto add = [&](const char *mark) {
        IpaPhone p = IpaPhone::Parse(base.canonical() + mark);
        if (!opts.exclude.count(p)) candidates.push_back(p);
      };
      if (vowel)
        for (const char *m : kVowelMarks) add(m);
      else
        for (const char *m : kConsonantMarks) add(m);
    }
    if (static_cast<int>(candidates.size()) < opts.n_unique)
      throw Error(ErrorCode::kInventoryTooSmall,
                  "only " + std::to_string(candidates.size()) +
                      " unique phones are available");
    Shuffle(&candidates, rng);
    lang.inventory.phones.insert(candidates.begin(),
                                 candidates.begin() + opts.n_unique);
  }
  lang.phones.assign(lang.inventory.phones.begin(), lang.inventory.phones.end());

  const size_t n = lang.phones.size();
  lang.transition.resize(n + 1);
  for (size_t r = 0; r <= n; ++r) {
    std::vector<double> row = SampleDirichlet(rng, n + 1, opts.temperature);
    for (double &v : row) v += kRowFloor;
    if (r > 0) row[r - 1] = 0.0;
    if (r == 0) row[n] = 0.0;
    double sum = 0.0;
    for (double v : row) sum += v;
    for (double &v : row) v /= sum;
    lang.transition[r] = std::move(row);
  }
  lang.Validate();
  return lang;
}

std::vector<Utterance> SampleCorpus(const SyntheticLanguage &lang, int n_utts,
                                    int min_len, int max_len, uint64_t seed,
                                    std::string_view prefix) {
  if (n_utts < 1)
    throw Error(ErrorCode::kInvalidConfig, "n_utts must be >= 1");
  if (min_len < 1 || max_len < min_len)
    throw Error(ErrorCode::kInvalidConfig, "need 1 <= min_len <= max_len");
  const size_t n = lang.size();
  std::vector<Utterance> out;
  out.reserve(n_utts);
  std::vector<double> w;
  char id[32];
  for (int i = 0; i < n_utts; ++i) {
    Rng rng(MixSeed(seed, static_cast<uint64_t>(i)));
    Utterance u;
    std::snprintf(id, sizeof(id), "%06d", i);
    u.id = std::string(prefix) + id;
    size_t row = 0;
    while (static_cast<int>(u.phones.size()) < max_len) {
      w = lang.transition[row];
      if (static_cast<int>(u.phones.size()) < min_len) w[n] = 0.0;
      size_t c = rng.Categorical(w);
      if (c == n) break;
      u.phones.push_back(lang.phones[c]);
      row = c + 1;
    }
    out.push_back(std::move(u));
  }
  return out;
}

void WriteLanguage(const SyntheticLanguage &lang, std::ostream &out) {
  out << "LANG v1\n";
  out << "id " << lang.inventory.language_id << '\n';
  out << "seed " << lang.seed << '\n';
  out << "phones " << Render(lang.phones, " ") << '\n';
  char buf[64];
  for (const auto &row : lang.transition) {
    for (size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
      if (i) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

void WriteLanguageFile(const SyntheticLanguage &lang, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  WriteLanguage(lang, out);
}

SyntheticLanguage ReadLanguage(std::istream &in, const std::string &source) {
  size_t lineno = 0;
  std::string line;
  auto fail = [&](const std::string &msg) {
    return Error(ErrorCode::kMalformedLanguage, msg,
                 source + ":" + std::to_string(lineno));
  };
  auto next = [&]() -> std::vector<std::string> {
    ++lineno;
    if (!std::getline(in, line)) throw fail("unexpected end of file");
    return SplitWhitespace(line);
  };

  SyntheticLanguage lang;
  if (next() != std::vector<std::string>{"LANG", "v1"})
    throw fail("expected 'LANG v1'");
  auto f = next();
  if (f.size() != 2 || f[0] != "id") throw fail("expected 'id <id>'");
  lang.inventory.language_id = f[1];
  f = next();
  if (f.size() != 2 || f[0] != "seed") throw fail("expected 'seed <n>'");
  char *end = nullptr;
  lang.seed = std::strtoull(f[1].c_str(), &end, 10);
  if (*end != '\0') throw fail("bad seed");
  f = next();
  if (f.size() < 3 || f[0] != "phones") throw fail("expected 'phones ...'");
  try {
    for (size_t i = 1; i < f.size(); ++i)
      lang.phones.push_back(IpaPhone::Parse(f[i]));
  } catch (const Error &e) {
    throw fail(e.message());
  }
  lang.inventory.phones.insert(lang.phones.begin(), lang.phones.end());
  if (lang.inventory.phones.size() != lang.phones.size() ||
      !std::is_sorted(lang.phones.begin(), lang.phones.end()))
    throw fail("phones must be distinct and in canonical order");
  const size_t n = lang.phones.size();
  for (size_t r = 0; r <= n; ++r) {
    f = next();
    if (f.size() != n + 1)
      throw fail("expected " + std::to_string(n + 1) + " probabilities");
    std::vector<double> row(n + 1);
    for (size_t c = 0; c <= n; ++c) {
      row[c] = std::strtod(f[c].c_str(), &end);
      if (*end != '\0') throw fail("bad probability '" + f[c] + "'");
    }
    lang.transition.push_back(std::move(row));
  }
  try {
    lang.Validate();
  } catch (const Error &e) {
    throw fail(e.message());
  }
  return lang;
}

SyntheticLanguage ReadLanguageFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ReadLanguage(in, path);
}

PseudoWords SegmentPseudoWords(std::span<const Utterance> utts) {
  auto name = [](const PhoneSeq &s, size_t b, size_t len) {
    std::string w;
    for (size_t k = b; k < b + len; ++k) {
      if (k > b) w += '_';
      w += s[k].canonical();
    }
    return w;
  };
  std::map<std::string, int64_t> counts;
  for (const Utterance &u : utts)
    for (size_t len = 2; len <= 4; ++len)
      for (size_t b = 0; b + len <= u.phones.size(); ++b)
        ++counts[name(u.phones, b, len)];

  PseudoWords out;
  for (const Utterance &u : utts) {
    TokenSeq words;
    const size_t n = u.phones.size();
    size_t i = 0;
    while (i < n) {
      const size_t left = n - i;
      size_t best_len = 0;
      std::string best;
      int64_t best_score = -1;
      if (left == 1) {
        best_len = 1;
        best = name(u.phones, i, 1);
      }
      for (size_t len = 2; len <= 4 && len <= left; ++len) {
        if (left - len == 1) continue;
        std::string w = name(u.phones, i, len);
        int64_t score = counts[w] * static_cast<int64_t>(len);
        if (score > best_score ||
            (score == best_score && (len > best_len ||
                                     (len == best_len && w < best)))) {
          best_score = score;
          best_len = len;
          best = std::move(w);
        }
      }
      if (!out.lexicon.entries.count(best))
        out.lexicon.Add(best, PhoneSeq(u.phones.begin() + i,
                                       u.phones.begin() + i + best_len));
      words.push_back(std::move(best));
      i += best_len;
    }
    out.corpus.push_back(std::move(words));
  }
  return out;
}

}  // namespace phonotact
