// phonotact/tests/scorer_test.cc

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

#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "phonotact/error.h"
#include "phonotact/ipa.h"
#include "phonotact/rng.h"
#include "phonotact/scorer.h"
#include "test_util.h"

namespace phonotact {
namespace {

using testing_util::BruteEditDistance;
using testing_util::Phones;
using testing_util::RandomSeq;

TEST(Align, Identical) {
  AlignmentReport r = Align(Phones("a b c"), Phones("a b c"));
  EXPECT_EQ(r.counts.matches, 3);
  EXPECT_EQ(r.distance(), 0);
}

TEST(Align, OneSubstitution) {
  AlignmentReport r = Align(Phones("a b c"), Phones("a x c"));
  EXPECT_EQ(r.counts.subs, 1);
  EXPECT_EQ(r.distance(), 1);
  ASSERT_EQ(r.ops.size(), 3u);
  EXPECT_EQ(r.ops[1].op, EditOp::kSub);
  EXPECT_EQ(r.ops[1].ref_index, 1);
  EXPECT_EQ(r.ops[1].hyp_index, 1);
}

TEST(Align, EmptySides) {
  AlignmentReport r = Align(Phones("a b"), PhoneSeq{});
  EXPECT_EQ(r.counts.dels, 2);
  r = Align(PhoneSeq{}, Phones("a b"));
  EXPECT_EQ(r.counts.inss, 2);
  EXPECT_EQ(r.n_ref, 0);
}

TEST(AlignProperty, MatchesBruteForce) {
  Rng rng(1);
  PhoneSeq alpha = Phones("a b c d e");
  for (int i = 0; i < 500; ++i) {
    PhoneSeq ref = RandomSeq(rng, alpha, 8);
    PhoneSeq hyp = RandomSeq(rng, alpha, 8);
    AlignmentReport r = Align(ref, hyp);
    ASSERT_EQ(r.distance(), BruteEditDistance(ref, 0, hyp, 0));
    // The ops replay the two sequences.
    PhoneSeq r2, h2;
    for (const AlignStep &s : r.ops) {
      if (s.ref_index >= 0) r2.push_back(ref[s.ref_index]);
      if (s.hyp_index >= 0) h2.push_back(hyp[s.hyp_index]);
      if (s.op == EditOp::kMatch) {
        EXPECT_EQ(ref[s.ref_index], hyp[s.hyp_index]);
      } else if (s.op == EditOp::kSub) {
        EXPECT_NE(ref[s.ref_index], hyp[s.hyp_index]);
      }
    }
    EXPECT_EQ(r2, ref);
    EXPECT_EQ(h2, hyp);
    EXPECT_EQ(r.counts.matches + r.counts.subs + r.counts.dels,
              static_cast<int64_t>(ref.size()));
  }
}

TEST(PerReport, HandComputedPooled) {
  // a b c | a x c      -> 1 sub
  // a b   | a          -> 1 del
  // c     | c a b      -> 2 ins
  std::vector<RefHyp> pairs = {{Phones("a b c"), Phones("a x c")},
                               {Phones("a b"), Phones("a")},
                               {Phones("c"), Phones("c a b")}};
  PerReport r = ComputePerReport(pairs);
  EXPECT_EQ(r.n_ref, 6);
  EXPECT_EQ(r.counts.subs, 1);
  EXPECT_EQ(r.counts.dels, 1);
  EXPECT_EQ(r.counts.inss, 2);
  EXPECT_DOUBLE_EQ(r.per, 4.0 / 6.0);
  EXPECT_DOUBLE_EQ(r.pct_ins, 50.0);
  EXPECT_DOUBLE_EQ(r.pct_del, 25.0);
  EXPECT_DOUBLE_EQ(r.pct_sub, 25.0);
  EXPECT_EQ(r.per_phone.at(IpaPhone::Parse("b")).occurrences, 2);
  EXPECT_EQ(r.per_phone.at(IpaPhone::Parse("b")).errors(), 2);
  EXPECT_EQ(r.per_phone.at(IpaPhone::Parse("a")).errors(), 0);
}

TEST(PerReport, NoErrors) {
  std::vector<RefHyp> pairs = {{Phones("a b"), Phones("a b")}};
  PerReport r = ComputePerReport(pairs);
  EXPECT_EQ(r.per, 0.0);
  EXPECT_EQ(r.pct_ins + r.pct_del + r.pct_sub, 0.0);
}

TEST(PerReport, EmptyReference) {
  std::vector<RefHyp> pairs = {{PhoneSeq{}, Phones("a")}};
  try {
    ComputePerReport(pairs);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyReference);
  }
}

// 250 errors over 833 reference phones, split 44 / 85 / 121.
TEST(PerReport, TableRowShape) {
  std::vector<RefHyp> pairs;
  for (int i = 0; i < 121; ++i) pairs.push_back({Phones("a"), Phones("b")});
  for (int i = 0; i < 85; ++i) pairs.push_back({Phones("a"), PhoneSeq{}});
  for (int i = 0; i < 44; ++i) pairs.push_back({Phones("a"), Phones("a b")});
  for (int i = 0; i < 583; ++i) pairs.push_back({Phones("a"), Phones("a")});
  PerReport r = ComputePerReport(pairs);
  EXPECT_EQ(FormatFixed(100 * r.per, 1), "30.0");
  EXPECT_EQ(FormatFixed(r.pct_ins, 1), "17.6");
  EXPECT_EQ(FormatFixed(r.pct_del, 1), "34.0");
  EXPECT_EQ(FormatFixed(r.pct_sub, 1), "48.4");
  EXPECT_NEAR(r.pct_ins + r.pct_del + r.pct_sub, 100.0, 1e-9);
  std::ostringstream os;
  std::vector<std::pair<std::string, PerReport>> rows = {{"mono_wtg", r}};
  WriteSummaryTsv(os, rows);
  EXPECT_EQ(os.str(),
            "system\tper\tpct_ins\tpct_del\tpct_sub\n"
            "mono_wtg\t30.0\t17.6\t34.0\t48.4\n");
}

TEST(PerReportProperty, SharesAddUp) {
  Rng rng(2);
  PhoneSeq alpha = Phones("a b c");
  for (int i = 0; i < 500; ++i) {
    std::vector<RefHyp> pairs;
    size_t n = 1 + rng.Index(5);
    for (size_t k = 0; k < n; ++k) {
      PhoneSeq ref = RandomSeq(rng, alpha, 6);
      if (ref.empty()) ref.push_back(alpha[0]);
      pairs.push_back({ref, RandomSeq(rng, alpha, 6)});
    }
    PerReport r = ComputePerReport(pairs);
    if (r.counts.errors() == 0) continue;
    EXPECT_NEAR(r.pct_ins + r.pct_del + r.pct_sub, 100.0, 0.05);
    // Largest-remainder rounding moves a share by less than a tenth.
    EXPECT_NEAR(r.pct_sub, 100.0 * r.counts.subs / r.counts.errors(), 0.1);
  }
}

TEST(Lenient, NoModifiersEqualsStrict) {
  std::vector<RefHyp> pairs = {{Phones("a b c"), Phones("a c")},
                               {Phones("t͡s a"), Phones("t s a")}};
  PerReport s = ComputePerReport(pairs);
  PerReport l = ComputeLenientReport(pairs);
  EXPECT_EQ(s.per, l.per);
  EXPECT_EQ(s.counts.subs, l.counts.subs);
}

TEST(Lenient, StrippedModifiersNoLongerCount) {
  std::vector<RefHyp> pairs = {{Phones("aː˥˩ b"), Phones("a b")}};
  EXPECT_DOUBLE_EQ(ComputePerReport(pairs).per, 0.5);
  EXPECT_DOUBLE_EQ(ComputeLenientReport(pairs).per, 0.0);
}

TEST(LenientProperty, NeverAboveStrict) {
  Rng rng(3);
  PhoneSeq alpha = Phones("a aː a˥ a˥˩ i iː˩ p pʰ t t̪ k kʷ");
  for (int c = 0; c < 200; ++c) {
    std::vector<RefHyp> pairs;
    for (int k = 0; k < 5; ++k) {
      PhoneSeq ref = RandomSeq(rng, alpha, 8);
      ref.push_back(alpha[rng.Index(alpha.size())]);
      pairs.push_back({ref, RandomSeq(rng, alpha, 8)});
    }
    PerReport s = ComputePerReport(pairs);
    PerReport l = ComputeLenientReport(pairs);
    EXPECT_LE(l.per, s.per);
    EXPECT_EQ(l.n_ref, s.n_ref);
  }
}

PhoneInventory Inv(const std::string &phones) {
  PhoneInventory inv;
  for (const IpaPhone &p : Phones(phones)) inv.phones.insert(p);
  return inv;
}

TEST(ShareReport, ThreeLanguageToy) {
  // a in all three, b in two, c and d only in the target.
  std::vector<PhoneInventory> invs = {Inv("a b c d"), Inv("a b e"),
                                      Inv("a e")};
  // a: one substitution, one deletion out of 4; b always right; c
  // substituted, d deleted.
  std::vector<RefHyp> pairs = {{Phones("a a b c"), Phones("a e b a")},
                               {Phones("a a b d"), Phones("a b")}};
  PerReport r = ComputePerReport(pairs);
  std::vector<PhoneShareRow> rows = PhoneShareReport(r.per_phone, invs);
  ASSERT_EQ(rows.size(), 4u);  // e never occurs in a reference
  std::map<std::string, PhoneShareRow> by;
  for (const PhoneShareRow &row : rows) by.emplace(row.phone.canonical(), row);
  EXPECT_EQ(by.at("a").n_languages, 3);
  EXPECT_EQ(by.at("b").n_languages, 2);
  EXPECT_EQ(by.at("c").n_languages, 1);
  EXPECT_EQ(by.at("a").occurrences, 4);
  EXPECT_DOUBLE_EQ(by.at("a").error_rate, 0.5);
  EXPECT_DOUBLE_EQ(by.at("b").error_rate, 0.0);
  EXPECT_DOUBLE_EQ(by.at("c").error_rate, 1.0);
  EXPECT_DOUBLE_EQ(by.at("d").error_rate, 1.0);
  EXPECT_EQ(rows.front().n_languages, 1);
  EXPECT_EQ(rows.back().n_languages, 3);
}

TEST(ShareReport, UnknownPhone) {
  std::vector<PhoneInventory> invs = {Inv("a")};
  std::vector<RefHyp> pairs = {{Phones("z"), Phones("a")}};
  PerReport r = ComputePerReport(pairs);
  EXPECT_THROW(PhoneShareReport(r.per_phone, invs), Error);
}

}  // namespace
}  // namespace phonotact
