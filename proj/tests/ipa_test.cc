// phonotact/tests/ipa_test.cc

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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "phonotact/error.h"
#include "phonotact/ipa.h"
#include "phonotact/rng.h"

namespace phonotact {
namespace {

std::vector<std::string> Canon(const PhoneSeq &seq) {
  std::vector<std::string> out;
  for (const IpaPhone &p : seq) out.push_back(p.canonical());
  return out;
}

ErrorCode CodeOf(const std::string &s) {
  try {
    Tokenize(s);
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for '" << s << "'";
  return ErrorCode::kIo;
}

TEST(IpaClassify, Basics) {
  EXPECT_EQ(ClassifySymbol(U'a').cls, SymbolClass::kBaseLetter);
  EXPECT_EQ(ClassifySymbol(0x02D0).cls, SymbolClass::kLengthMark);
  EXPECT_EQ(ClassifySymbol(0x02E5).cls, SymbolClass::kToneLetter);
  EXPECT_EQ(ClassifySymbol(0x0361).cls, SymbolClass::kTieBar);
  EXPECT_EQ(ClassifySymbol(0x035C).cls, SymbolClass::kTieBar);
  EXPECT_EQ(ClassifySymbol(0x0303).cls, SymbolClass::kCombiningDiacritic);
  EXPECT_EQ(ClassifySymbol(0x02B0).cls, SymbolClass::kModifierLetter);
  EXPECT_EQ(ClassifySymbol(U' ').cls, SymbolClass::kSeparator);
  EXPECT_EQ(ClassifySymbol(0x0283).cls, SymbolClass::kBaseLetter);  // ʃ
  EXPECT_THROW(ClassifySymbol(U'A'), Error);
  EXPECT_THROW(ClassifySymbol(U'5'), Error);
  EXPECT_THROW(ClassifySymbol(0x4E2D), Error);
}

TEST(IpaTokenize, SinglePhones) {
  PhoneSeq s = Tokenize("a");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].bases(), U"a");
  EXPECT_TRUE(s[0].modifiers().empty());

  s = Tokenize("aː˥˩");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].bases(), U"a");
  EXPECT_EQ(s[0].modifiers(), std::u32string({0x02D0, 0x02E5, 0x02E9}));
  EXPECT_NE(s[0], IpaPhone::Parse("a"));
}

// Hand-built table: input, expected phones.
struct Case {
  const char *in;
  std::vector<std::string> out;
};

TEST(IpaTokenize, HandTable) {
  const std::vector<Case> table = {
      {"t͡sa", {"t͡s", "a"}},
      {"t͡ʃʰa", {"t͡ʃʰ", "a"}},
      {"d͡ʒiː", {"d͡ʒ", "iː"}},
      {"k͜p", {"k͜p"}},
      {"ɡ͡b", {"ɡ͡b"}},
      {"t͡ɕʰ", {"t͡ɕʰ"}},
      {"ts", {"t", "s"}},
      {"a\u0303", {"a\u0303"}},
      {"e\u0303ː", {"e\u0303ː"}},
      {"n̩", {"n̩"}},
      {"t̪ʰa", {"t̪ʰ", "a"}},
      {"kʷa", {"kʷ", "a"}},
      {"pʼ", {"pʼ"}},
      {"i˥˥", {"i˥˥"}},
      {"ma˨˩˦", {"m", "a˨˩˦"}},
      {"bʱa", {"bʱ", "a"}},
      {"ɚ", {"ɚ"}},
      {"a  b\tc", {"a", "b", "c"}},
      {"ŋ̍ɲ", {"ŋ̍", "ɲ"}},
      {"sʲaˑ", {"sʲ", "aˑ"}},
  };
  ASSERT_EQ(table.size(), 20u);
  for (const Case &c : table) EXPECT_EQ(Canon(Tokenize(c.in)), c.out) << c.in;
}

TEST(IpaTokenize, Errors) {
  EXPECT_EQ(CodeOf("ːa"), ErrorCode::kDanglingModifier);
  EXPECT_EQ(CodeOf("a ˥"), ErrorCode::kDanglingModifier);
  EXPECT_EQ(CodeOf("t͡"), ErrorCode::kDanglingTieBar);
  EXPECT_EQ(CodeOf("͡s"), ErrorCode::kDanglingTieBar);
  EXPECT_EQ(CodeOf("t͡ s"), ErrorCode::kDanglingTieBar);
  EXPECT_EQ(CodeOf("aB"), ErrorCode::kUnsupportedCodepoint);
  EXPECT_EQ(CodeOf("a\xff"), ErrorCode::kUnsupportedCodepoint);
  // Precomposed letters are not decomposed; write a + U+0303 instead.
  EXPECT_EQ(CodeOf("\u00e3"), ErrorCode::kUnsupportedCodepoint);
  EXPECT_THROW(IpaPhone::Parse("ab"), Error);
  EXPECT_THROW(IpaPhone::Parse(" a"), Error);
  EXPECT_TRUE(Tokenize("").empty());
  EXPECT_TRUE(Tokenize("   ").empty());
}

TEST(IpaRender, Basics) {
  PhoneSeq s = {IpaPhone::Parse("a"), IpaPhone::Parse("b")};
  EXPECT_EQ(Render(s, " "), "a b");
  EXPECT_EQ(Render(PhoneSeq{}, " "), "");
}

// Random phones from a small alphabet of bases and modifiers.
std::string RandomPhone(Rng &rng) {
  static const char *kBases[] = {"a", "i", "u", "p", "t", "k", "ʃ", "ŋ", "ə", "ɛ"};
  static const char *kMods[] = {"ː", "˥", "˩", "ʰ", "ʷ", "̃", "̪"};
  std::string s = kBases[rng.Index(10)];
  if (rng.Uniform() < 0.2) {
    s += "͡";
    s += kBases[rng.Index(10)];
  }
  size_t n = rng.Index(4);
  for (size_t i = 0; i < n; ++i) s += kMods[rng.Index(7)];
  return s;
}

TEST(IpaProperty, TokenizeRenderRoundTrip) {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    std::vector<std::string> want;
    size_t n = rng.Index(10);
    for (size_t k = 0; k < n; ++k) want.push_back(RandomPhone(rng));
    std::string joined;
    for (size_t k = 0; k < want.size(); ++k)
      joined += (k ? " " : "") + want[k];
    PhoneSeq seq = Tokenize(joined);
    ASSERT_EQ(Canon(seq), want) << joined;
    EXPECT_EQ(Render(seq, " "), joined);
    EXPECT_EQ(Tokenize(Render(seq, " ")), seq);
  }
}

TEST(IpaStrip, Examples) {
  EXPECT_EQ(StripModifiers(IpaPhone::Parse("aː˥˩")), IpaPhone::Parse("a"));
  EXPECT_EQ(StripModifiers(IpaPhone::Parse("a")), IpaPhone::Parse("a"));
  EXPECT_EQ(StripModifiers(IpaPhone::Parse("t͡ʃʰ")).canonical(), "t͡ʃ");
  EXPECT_EQ(StripModifiers(IpaPhone::Parse("t̪͡sʰ")).canonical(), "t͡s");
}

TEST(IpaProperty, StripIdempotent) {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    IpaPhone p = IpaPhone::Parse(RandomPhone(rng));
    IpaPhone s = StripModifiers(p);
    EXPECT_FALSE(s.HasModifiers());
    EXPECT_EQ(StripModifiers(s), s);
    EXPECT_EQ(s.bases(), p.bases());
  }
}

TEST(IpaClass, VowelConsonant) {
  EXPECT_EQ(ClassOf(IpaPhone::Parse("aː")), PhoneClass::kVowel);
  EXPECT_EQ(ClassOf(IpaPhone::Parse("ə˥")), PhoneClass::kVowel);
  EXPECT_EQ(ClassOf(IpaPhone::Parse("t͡s")), PhoneClass::kConsonant);
  EXPECT_EQ(ClassOf(IpaPhone::Parse("ŋ")), PhoneClass::kConsonant);
}

PhoneInventory Inv(const std::string &id, const std::string &phones) {
  PhoneInventory inv;
  inv.language_id = id;
  for (const IpaPhone &p : Tokenize(phones)) inv.phones.insert(p);
  return inv;
}

TEST(IpaInventory, Examples) {
  PhoneInventory ab = Inv("x", "a b");
  std::vector<PhoneInventory> others = {Inv("y", "a")};
  EXPECT_EQ(ComputeInventoryStats(ab, others).n_unique, 1);
  EXPECT_EQ(ComputeInventoryStats(Inv("z", "a"), {}).n_unique, 1);
  InventoryStats st = ComputeInventoryStats(Inv("w", "a e p t k"), {});
  EXPECT_EQ(st.n_vowels, 2);
  EXPECT_EQ(st.n_consonants, 3);
}

TEST(IpaInventory, MatchesSetAlgebra) {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PhoneInventory> invs(3);
    for (int l = 0; l < 3; ++l) {
      invs[l].language_id = "L" + std::to_string(l);
      for (int k = 0; k < 12; ++k)
        invs[l].phones.insert(IpaPhone::Parse(RandomPhone(rng)));
    }
    for (int l = 0; l < 3; ++l) {
      std::vector<PhoneInventory> others;
      std::set<std::string> union_others;
      for (int o = 0; o < 3; ++o) {
        if (o == l) continue;
        others.push_back(invs[o]);
        for (const IpaPhone &p : invs[o].phones)
          union_others.insert(p.canonical());
      }
      std::set<std::string> mine;
      for (const IpaPhone &p : invs[l].phones) mine.insert(p.canonical());
      std::vector<std::string> diff;
      std::set_difference(mine.begin(), mine.end(), union_others.begin(),
                          union_others.end(), std::back_inserter(diff));
      EXPECT_EQ(ComputeInventoryStats(invs[l], others).n_unique,
                static_cast<int>(diff.size()));
    }
  }
}

}  // namespace
}  // namespace phonotact
