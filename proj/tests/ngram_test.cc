// phonotact/tests/ngram_test.cc

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

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "phonotact/arpa.h"
#include "phonotact/error.h"
#include "phonotact/ngram.h"
#include "phonotact/rng.h"
#include "test_util.h"

namespace phonotact {
namespace {

using testing_util::MassAfter;
using testing_util::RandomContext;

const std::vector<TokenSeq> kAbc = {{"a", "b"}, {"a", "b"}, {"a", "c"}};

TokenId Id(const NGramModel &m, const std::string &t) {
  return *m.vocab().Find(t);
}

std::vector<TokenSeq> RandomCorpus(Rng &rng, int n_utts, int vocab) {
  std::vector<TokenSeq> out;
  for (int u = 0; u < n_utts; ++u) {
    TokenSeq s;
    size_t len = 1 + rng.Index(8);
    for (size_t i = 0; i < len; ++i)
      s.push_back("p" + std::to_string(rng.Index(vocab)));
    out.push_back(s);
  }
  return out;
}

TEST(NGramMle, HandCountedUnigram) {
  NGramModel m = TrainNGram(kAbc, 1, Smoothing::kMle);
  EXPECT_NEAR(m.LogProb({}, Id(m, "a")), std::log10(3.0 / 9), 1e-12);
  EXPECT_NEAR(m.LogProb({}, Id(m, "b")), std::log10(2.0 / 9), 1e-12);
  EXPECT_NEAR(m.LogProb({}, Id(m, "c")), std::log10(1.0 / 9), 1e-12);
  EXPECT_NEAR(m.LogProb({}, Vocabulary::kEosId), std::log10(3.0 / 9), 1e-12);
  EXPECT_NEAR(LogProbSeq(m, TokenSeq{"a", "b"}),
              std::log10(1.0 / 3) + std::log10(2.0 / 9) + std::log10(3.0 / 9),
              1e-12);
}

TEST(NGramMle, SingleToken) {
  std::vector<TokenSeq> c = {{"a"}};
  NGramModel m = TrainNGram(c, 1, Smoothing::kMle);
  EXPECT_NEAR(m.LogProb({}, Id(m, "a")), std::log10(0.5), 1e-12);
  EXPECT_NEAR(m.LogProb({}, Vocabulary::kEosId), std::log10(0.5), 1e-12);
  EXPECT_NEAR(LogProbSeq(m, TokenSeq{"a"}), 2 * std::log10(0.5), 1e-12);
}

TEST(NGramMle, HandCountedBigram) {
  NGramModel m = TrainNGram(kAbc, 2, Smoothing::kMle);
  std::vector<TokenId> a = {Id(m, "a")};
  EXPECT_NEAR(m.LogProb(a, Id(m, "b")), std::log10(2.0 / 3), 1e-12);
  EXPECT_NEAR(m.LogProb(a, Id(m, "c")), std::log10(1.0 / 3), 1e-12);
  std::vector<TokenId> bos = {Vocabulary::kBosId};
  EXPECT_NEAR(m.LogProb(bos, Id(m, "a")), 0.0, 1e-12);
}

TEST(NGramErrors, BadCorpora) {
  std::vector<TokenSeq> empty;
  EXPECT_THROW(TrainNGram(empty, 2, Smoothing::kMle), Error);
  std::vector<TokenSeq> reserved = {{"a", "<s>"}};
  try {
    TrainNGram(reserved, 2, Smoothing::kMle);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kReservedToken);
  }
  EXPECT_THROW(TrainNGram(kAbc, 0, Smoothing::kMle), Error);
  EXPECT_THROW(TrainNGram(kAbc, 7, Smoothing::kMle), Error);
  EXPECT_THROW(ParseSmoothing("kneser-ney"), Error);
}

TEST(NGramProperty, WittenBellNormalizes) {
  Rng rng(5);
  for (int order = 1; order <= 4; ++order) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<TokenSeq> corpus = RandomCorpus(rng, 40, 6 + trial);
      NGramModel m = TrainNGram(corpus, order, Smoothing::kWittenBell);
      for (int i = 0; i < 100; ++i) {
        std::vector<TokenId> ctx = RandomContext(m, rng);
        EXPECT_NEAR(MassAfter(m, ctx), 1.0, 1e-9);
      }
    }
  }
}

TEST(NGramProperty, MleNormalizesOnSeenContexts) {
  Rng rng(6);
  std::vector<TokenSeq> corpus = RandomCorpus(rng, 50, 5);
  NGramModel m = TrainNGram(corpus, 3, Smoothing::kMle);
  for (const TokenSeq &s : corpus) {
    std::vector<TokenId> hist = {Vocabulary::kBosId, Vocabulary::kBosId};
    for (const std::string &t : s) {
      EXPECT_NEAR(MassAfter(m, {hist.end() - 2, hist.end()}), 1.0, 1e-9);
      hist.push_back(Id(m, t));
    }
  }
}

TEST(NGramPerplexity, UniformIsVocabSize) {
  std::vector<TokenSeq> c = {{"a", "b"}};
  NGramModel m = TrainNGram(c, 1, Smoothing::kMle);
  EXPECT_NEAR(Perplexity(m, c), 3.0, 1e-12);
  std::vector<TokenSeq> c4 = {{"a", "b", "c"}};
  EXPECT_NEAR(Perplexity(TrainNGram(c4, 1, Smoothing::kMle), c4), 4.0, 1e-12);
}

TEST(NGramPerplexity, MleOrderMonotone) {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<TokenSeq> corpus = RandomCorpus(rng, 30, 5);
    double prev = Perplexity(TrainNGram(corpus, 1, Smoothing::kMle), corpus);
    for (int n = 2; n <= 5; ++n) {
      double ppl = Perplexity(TrainNGram(corpus, n, Smoothing::kMle), corpus);
      EXPECT_LE(ppl, prev * (1 + 1e-12)) << "order " << n;
      prev = ppl;
    }
  }
}

TEST(NGramPerplexity, BruteForceProduct) {
  std::vector<TokenSeq> corpus = {
      {"a", "b"}, {"b", "a", "a"}, {"c"}, {"a", "c", "b"}, {"b"}};
  NGramModel m = TrainNGram(corpus, 2, Smoothing::kWittenBell);
  double prob = 1.0;
  size_t n = 0;
  for (const TokenSeq &s : corpus) {
    TokenId prev = Vocabulary::kBosId;
    for (const std::string &t : s) {
      std::vector<TokenId> ctx = {prev};
      prob *= std::pow(10.0, m.LogProb(ctx, Id(m, t)));
      prev = Id(m, t);
      ++n;
    }
    std::vector<TokenId> ctx = {prev};
    prob *= std::pow(10.0, m.LogProb(ctx, Vocabulary::kEosId));
    ++n;
  }
  EXPECT_NEAR(Perplexity(m, corpus), std::pow(prob, -1.0 / n), 1e-9);
}

TEST(NGramState, ScoreMatchesLogProb) {
  Rng rng(9);
  std::vector<TokenSeq> corpus = RandomCorpus(rng, 60, 6);
  NGramModel m = TrainNGram(corpus, 3, Smoothing::kWittenBell);
  for (int trial = 0; trial < 200; ++trial) {
    NGramModel::State st = m.BeginState();
    std::vector<TokenId> hist(2, Vocabulary::kBosId);
    for (int i = 0; i < 6; ++i) {
      TokenId id = static_cast<TokenId>(3 + rng.Index(m.vocab().size() - 3));
      NGramModel::State next;
      double a = m.Score(st, id, &next);
      double b = m.LogProb(hist, id);
      EXPECT_NEAR(a, b, 1e-12);
      hist.push_back(id);
      st = next;
    }
  }
}

std::string ToArpa(const NGramModel &m) {
  std::ostringstream os;
  WriteArpa(m, os);
  return os.str();
}

NGramModel FromArpa(const std::string &s) {
  std::istringstream is(s);
  return ReadArpa(is);
}

void ExpectRounded(const NGramModel &orig, const NGramModel &back) {
  ASSERT_EQ(back.order(), orig.order());
  ASSERT_EQ(back.vocab(), orig.vocab());
  for (int n = 1; n <= orig.order(); ++n) {
    auto a = orig.SortedNGrams(n);
    auto b = back.SortedNGrams(n);
    ASSERT_EQ(a.size(), b.size());
    for (size_t i = 0; i < a.size(); ++i) {
      EXPECT_TRUE(a[i].first == b[i].first);
      EXPECT_EQ(b[i].second.logprob, RoundToArpa(a[i].second.logprob));
      EXPECT_EQ(b[i].second.has_backoff, a[i].second.has_backoff);
      if (a[i].second.has_backoff) {
        EXPECT_EQ(b[i].second.backoff, RoundToArpa(a[i].second.backoff));
      }
    }
  }
}

TEST(Arpa, RoundTripTrigramOverTenPhones) {
  Rng rng(10);
  std::vector<TokenSeq> corpus = RandomCorpus(rng, 200, 10);
  NGramModel m = TrainNGram(corpus, 3, Smoothing::kWittenBell);
  std::string text = ToArpa(m);
  NGramModel back = FromArpa(text);
  ExpectRounded(m, back);
  // Printed values survive exactly; a second cycle is a fixed point.
  EXPECT_EQ(ToArpa(back), text);
  // Sequence scores through the file equal the direct ones at print precision.
  for (const TokenSeq &s : corpus) {
    EXPECT_NEAR(LogProbSeq(back, s), LogProbSeq(m, s), 1e-5 * (s.size() + 1));
    EXPECT_EQ(LogProbSeq(back, s), LogProbSeq(FromArpa(ToArpa(back)), s));
  }
}

TEST(Arpa, MleRoundTrip) {
  NGramModel m = TrainNGram(kAbc, 2, Smoothing::kMle);
  NGramModel back = FromArpa(ToArpa(m));
  ExpectRounded(m, back);
}

TEST(Arpa, EmptyBigramSection) {
  const char *text =
      "\\data\\\nngram 1=3\nngram 2=0\n\n\\1-grams:\n"
      "-99.000000\t<s>\t0.000000\n-0.301030\t</s>\n-0.301030\ta\n\n"
      "\\2-grams:\n\n\\end\\\n";
  NGramModel m = FromArpa(text);
  EXPECT_EQ(m.order(), 2);
  EXPECT_EQ(m.NumNGrams(2), 0u);
  std::vector<TokenId> ctx = {Vocabulary::kBosId};
  EXPECT_NEAR(m.LogProb(ctx, *m.vocab().Find("a")), -0.30103, 1e-9);
}

TEST(Arpa, CountMismatch) {
  const char *text =
      "\\data\\\nngram 1=4\n\n\\1-grams:\n"
      "-0.301030\t</s>\n-0.301030\ta\n\n\\end\\\n";
  try {
    FromArpa(text);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedArpa);
  }
}

TEST(Arpa, Malformed) {
  EXPECT_THROW(FromArpa("no header here\n"), Error);
  EXPECT_THROW(FromArpa("\\data\\\nngram 1=1\n\n\\1-grams:\n-0.5\ta\n"), Error);
  EXPECT_THROW(FromArpa("\\data\\\nngram 1=1\n\n\\1-grams:\nx\ta\n\n\\end\\\n"),
               Error);
  // Bigram over a word that is not a unigram.
  EXPECT_THROW(FromArpa("\\data\\\nngram 1=1\nngram 2=1\n\n\\1-grams:\n"
                        "-0.5\ta\t0.0\n\n\\2-grams:\n-0.5\ta b\n\n\\end\\\n"),
               Error);
}

}  // namespace
}  // namespace phonotact
