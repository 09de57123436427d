// phonotact/tests/posteriorgram_test.cc

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

#include "phonotact/error.h"
#include "phonotact/posteriorgram.h"
#include "test_util.h"

namespace phonotact {
namespace {

using testing_util::Phones;

AmProfile Profile(const std::string &phones, double eps) {
  AmProfile prof;
  for (const IpaPhone &p : Phones(phones)) prof.inventory.phones.insert(p);
  prof.confusion = eps;
  prof.seed = 42;
  return prof;
}

size_t IndexOf(const Posteriorgram &pg, const std::string &p) {
  for (size_t i = 0; i < pg.phones.size(); ++i)
    if (pg.phones[i].canonical() == p) return i;
  ADD_FAILURE() << p;
  return 0;
}

TEST(Simulate, NoiselessOneHot) {
  AmProfile prof = Profile("a b", 0.0);
  Posteriorgram pg = Simulate(Phones("a b"), prof, "u1");
  ASSERT_EQ(pg.num_frames(), 2u);
  EXPECT_EQ(pg.frames[0][IndexOf(pg, "a")], 0.0);
  EXPECT_TRUE(std::isinf(pg.frames[0][IndexOf(pg, "b")]));
  EXPECT_EQ(pg.frames[1][IndexOf(pg, "b")], 0.0);
  EXPECT_EQ(CollapsedArgmax(pg), Phones("a b"));
  EXPECT_NO_THROW(pg.Validate());
}

TEST(Simulate, MixtureMass) {
  AmProfile prof = Profile("a b c d e", 0.3);
  prof.mean_dur = 3;
  PhoneSeq truth = Phones("a c e b d a");
  Posteriorgram pg = Simulate(truth, prof, "u2");
  EXPECT_GE(pg.num_frames(), truth.size());
  for (const auto &row : pg.frames) {
    double sum = 0.0, top = -1e300;
    for (double v : row) {
      sum += std::exp(v);
      top = std::max(top, v);
    }
    EXPECT_NEAR(sum, 1.0, 1e-6);
    EXPECT_NEAR(std::exp(top), 0.7, 1e-12);
    // The rest is spread evenly: no two phones share a base here.
    for (double v : row) {
      if (v != top) {
        EXPECT_NEAR(std::exp(v), 0.3 / 4, 1e-12);
      }
    }
  }
  EXPECT_EQ(CollapsedArgmax(pg), truth);
}

TEST(Simulate, SameBaseShare) {
  AmProfile prof = Profile("a aː a˥ p t", 0.4);
  prof.same_base_share = 0.5;
  Posteriorgram pg = Simulate(Phones("a"), prof, "u3");
  const auto &row = pg.frames[0];
  EXPECT_NEAR(std::exp(row[IndexOf(pg, "a")]), 0.6, 1e-12);
  EXPECT_NEAR(std::exp(row[IndexOf(pg, "aː")]), 0.1, 1e-12);
  EXPECT_NEAR(std::exp(row[IndexOf(pg, "a˥")]), 0.1, 1e-12);
  EXPECT_NEAR(std::exp(row[IndexOf(pg, "p")]), 0.1, 1e-12);
}

TEST(Simulate, Deterministic) {
  AmProfile prof = Profile("a b c d", 0.3);
  prof.mean_dur = 2.5;
  prof.segment_noise = 1.0;
  prof.frame_noise = 0.5;
  prof.sharpness = 4.0;
  PhoneSeq truth = Phones("a b c d a");
  Posteriorgram x = Simulate(truth, prof, "utt");
  Posteriorgram y = Simulate(truth, prof, "utt");
  EXPECT_EQ(x.frames, y.frames);
  EXPECT_NO_THROW(x.Validate());
  Posteriorgram z = Simulate(truth, prof, "other");
  EXPECT_NE(x.frames, z.frames);
  prof.seed = 43;
  EXPECT_NE(Simulate(truth, prof, "utt").frames, x.frames);
}

TEST(Simulate, UnseenPhoneSubstitution) {
  AmProfile prof = Profile("a aː˥ p t", 0.0);
  Rng rng(1);
  EXPECT_EQ(SubstituteUnseen(IpaPhone::Parse("a˩"), prof.inventory, rng),
            IpaPhone::Parse("a"));
  EXPECT_EQ(SubstituteUnseen(IpaPhone::Parse("pʰ"), prof.inventory, rng),
            IpaPhone::Parse("p"));
  // No same-base candidate: some inventory phone.
  IpaPhone s = SubstituteUnseen(IpaPhone::Parse("ŋ"), prof.inventory, rng);
  EXPECT_TRUE(prof.inventory.Contains(s));
  Posteriorgram pg = Simulate(Phones("a˩ t"), prof, "u");
  EXPECT_EQ(CollapsedArgmax(pg), Phones("a t"));
}

TEST(Simulate, Errors) {
  AmProfile prof = Profile("a b", 0.3);
  EXPECT_THROW(Simulate(PhoneSeq{}, prof), Error);
  AmProfile bad = prof;
  bad.confusion = 1.0;
  EXPECT_THROW(Simulate(Phones("a"), bad), Error);
  bad = prof;
  bad.mean_dur = 0.5;
  EXPECT_THROW(Simulate(Phones("a"), bad), Error);
  bad = prof;
  bad.sharpness = 0.0;
  EXPECT_THROW(Simulate(Phones("a"), bad), Error);
  EXPECT_THROW(Simulate(Phones("a"), Profile("a", 0.1)), Error);
}

Posteriorgram Parse(const std::string &s) {
  std::istringstream is(s);
  return ReadPgram(is);
}

TEST(Pgram, RoundTrip) {
  AmProfile prof = Profile("a b c t͡s", 0.3);
  prof.mean_dur = 3;
  prof.frame_noise = 0.7;
  Posteriorgram pg = Simulate(Phones("a t͡s b c"), prof, "u");
  std::ostringstream os;
  WritePgram(pg, os);
  Posteriorgram back = Parse(os.str());
  EXPECT_EQ(back.phones, pg.phones);
  ASSERT_EQ(back.num_frames(), pg.num_frames());
  for (size_t t = 0; t < pg.num_frames(); ++t)
    for (size_t p = 0; p < pg.num_phones(); ++p)
      EXPECT_NEAR(back.frames[t][p], pg.frames[t][p], 1e-8);
  std::ostringstream again;
  WritePgram(back, again);
  EXPECT_EQ(again.str(), os.str());
}

TEST(Pgram, OneHotRoundTrip) {
  Posteriorgram pg = Simulate(Phones("a b"), Profile("a b", 0.0), "u");
  std::ostringstream os;
  WritePgram(pg, os);
  EXPECT_EQ(Parse(os.str()).frames, pg.frames);
}

ErrorCode ParseError(const std::string &s) {
  try {
    Parse(s);
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::kIo;
}

TEST(Pgram, Malformed) {
  EXPECT_EQ(ParseError("PGRAM v1\n0 2\na b\n"), ErrorCode::kMalformedPgram);
  EXPECT_EQ(ParseError("PGRAM v1\n1 2\na b\n-0.1 -0.1\n"),
            ErrorCode::kMalformedPgram);
  EXPECT_EQ(ParseError("PGRAM v1\n1 2\na a\n-0.693147181 -0.693147181\n"),
            ErrorCode::kMalformedPgram);
  EXPECT_EQ(ParseError("PGRAM v1\n2 2\na b\n-0.693147181 -0.693147181\n"),
            ErrorCode::kMalformedPgram);
  EXPECT_EQ(ParseError("junk\n"), ErrorCode::kMalformedPgram);
  EXPECT_NO_THROW(Parse("PGRAM v1\n1 2\na b\n-0.693147181 -0.693147181\n"));
}

}  // namespace
}  // namespace phonotact
