// phonotact/ipa.h

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

#ifndef PHONOTACT_IPA_H_
#define PHONOTACT_IPA_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace phonotact {

// Symbol classes of the supported IPA subset.
//
//   BaseLetter          ASCII a-z, IPA letters from Latin-1 / Latin Ext-A
//                       (æ ç ð ø ħ ŋ œ), the IPA Extensions block
//                       U+0250..U+02AF, clicks U+01C0..U+01C3, β θ χ, ⱱ
//   CombiningDiacritic  U+0300..U+036F and U+1DC0..U+1DFF, minus tie bars
//   ModifierLetter      ʰ ʱ ʲ ʷ ˠ ˡ ˤ ⁿ ʼ ˞
//   LengthMark          ː ˑ (U+02D0, U+02D1)
//   ToneLetter          ˥ ˦ ˧ ˨ ˩ (U+02E5..U+02E9)
//   TieBar              U+0361, U+035C
//   Separator           ASCII whitespace
enum class SymbolClass {
  kBaseLetter,
  kCombiningDiacritic,
  kModifierLetter,
  kLengthMark,
  kToneLetter,
  kTieBar,
  kSeparator,
};

struct IpaSymbol {
  char32_t codepoint;
  SymbolClass cls;
};

// Throws Error(kUnsupportedCodepoint) for anything outside the table above.
IpaSymbol ClassifySymbol(char32_t c);

// True for the classes that attach to a preceding base letter.
bool IsModifier(SymbolClass cls);

// Strict UTF-8 decoding; malformed input raises kUnsupportedCodepoint.
std::u32string DecodeUtf8(std::string_view s);
void AppendUtf8(char32_t c, std::string *out);
std::string EncodeUtf8(std::u32string_view s);

// One recognition unit: one base letter (or a tie-bar joined sequence of
// them) plus the modifiers attached to it. Identity is the canonical string,
// so [a] and [aː˥˩] are different phones.
class IpaPhone {
 public:
  // Parses a string holding exactly one phone (no separators).
  static IpaPhone Parse(std::string_view s);

  const std::string &canonical() const { return canonical_; }
  const std::u32string &bases() const { return bases_; }
  const std::u32string &modifiers() const { return modifiers_; }
  bool HasModifiers() const { return !modifiers_.empty(); }

  friend bool operator==(const IpaPhone &a, const IpaPhone &b) {
    return a.canonical_ == b.canonical_;
  }
  friend std::strong_ordering operator<=>(const IpaPhone &a,
                                          const IpaPhone &b) {
    return a.canonical_ <=> b.canonical_;
  }

 private:
  friend class PhoneBuilder;
  friend IpaPhone StripModifiers(const IpaPhone &p);
  IpaPhone() = default;

  std::string canonical_;
  std::u32string bases_;
  std::u32string modifiers_;
  std::u32string ties_;  // ties_[i] joins bases_[i] and bases_[i + 1]
};

struct IpaPhoneHash {
  size_t operator()(const IpaPhone &p) const {
    return std::hash<std::string>()(p.canonical());
  }
};

using PhoneSeq = std::vector<IpaPhone>;

// Splits an IPA string into phones. Whitespace separates phones and is never
// part of one. Modifiers attach to the nearest preceding base letter; a tie
// bar merges its two flanking base letters into one phone.
// Errors: kDanglingModifier, kDanglingTieBar, kUnsupportedCodepoint.
PhoneSeq Tokenize(std::string_view s);

std::string Render(std::span<const IpaPhone> phones, std::string_view separator);

// Same bases (and tie bars), no modifiers. Idempotent.
IpaPhone StripModifiers(const IpaPhone &p);
PhoneSeq StripModifiers(std::span<const IpaPhone> phones);

enum class PhoneClass { kVowel, kConsonant };

// Decided by the first base letter only.
PhoneClass ClassOf(const IpaPhone &p);
bool IsVowelLetter(char32_t c);

struct PhoneInventory {
  std::string language_id;
  std::set<IpaPhone> phones;

  bool Contains(const IpaPhone &p) const { return phones.count(p) != 0; }
  PhoneClass ClassOf(const IpaPhone &p) const { return phonotact::ClassOf(p); }
};

struct InventoryStats {
  int n_vowels = 0;
  int n_consonants = 0;
  // Phones of the inventory found in none of the other inventories.
  int n_unique = 0;
};

InventoryStats ComputeInventoryStats(const PhoneInventory &inv,
                                     std::span<const PhoneInventory> others);

}  // namespace phonotact

#endif  // PHONOTACT_IPA_H_
