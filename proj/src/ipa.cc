// phonotact/ipa.cc

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

#include "phonotact/ipa.h"

#include <algorithm>
#include <cstdio>
#include <optional>

#include "phonotact/error.h"

namespace phonotact {

namespace {

std::string Hex(char32_t c) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "U+%04X", static_cast<unsigned>(c));
  return buf;
}

bool IsBaseLetter(char32_t c) {
  if (c >= U'a' && c <= U'z') return true;
  if (c >= 0x0250 && c <= 0x02AF) return true;  // IPA Extensions
  if (c >= 0x01C0 && c <= 0x01C3) return true;  // ǀ ǁ ǂ ǃ
  switch (c) {
    case 0x00E6:  // æ
    case 0x00E7:  // ç
    case 0x00F0:  // ð
    case 0x00F8:  // ø
    case 0x0127:  // ħ
    case 0x014B:  // ŋ
    case 0x0153:  // œ
    case 0x03B2:  // β
    case 0x03B8:  // θ
    case 0x03C7:  // χ
    case 0x2C71:  // ⱱ
      return true;
    default:
      return false;
  }
}

bool IsModifierLetter(char32_t c) {
  switch (c) {
    case 0x02B0:  // ʰ
    case 0x02B1:  // ʱ
    case 0x02B2:  // ʲ
    case 0x02B7:  // ʷ
    case 0x02BC:  // ʼ
    case 0x02DE:  // ˞
    case 0x02E0:  // ˠ
    case 0x02E1:  // ˡ
    case 0x02E4:  // ˤ
    case 0x207F:  // ⁿ
      return true;
    default:
      return false;
  }
}

std::optional<SymbolClass> Lookup(char32_t c) {
  if (c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
      c == U'\f')
    return SymbolClass::kSeparator;
  if (c == 0x0361 || c == 0x035C) return SymbolClass::kTieBar;
  if ((c >= 0x0300 && c <= 0x036F) || (c >= 0x1DC0 && c <= 0x1DFF))
    return SymbolClass::kCombiningDiacritic;
  if (c == 0x02D0 || c == 0x02D1) return SymbolClass::kLengthMark;
  if (c >= 0x02E5 && c <= 0x02E9) return SymbolClass::kToneLetter;
  if (IsModifierLetter(c)) return SymbolClass::kModifierLetter;
  if (IsBaseLetter(c)) return SymbolClass::kBaseLetter;
  return std::nullopt;
}

}  // namespace

IpaSymbol ClassifySymbol(char32_t c) {
  auto cls = Lookup(c);
  if (!cls)
    throw Error(ErrorCode::kUnsupportedCodepoint,
                "codepoint " + Hex(c) + " is not in the supported IPA table");
  return {c, *cls};
}

bool IsModifier(SymbolClass cls) {
  return cls == SymbolClass::kCombiningDiacritic ||
         cls == SymbolClass::kModifierLetter ||
         cls == SymbolClass::kLengthMark || cls == SymbolClass::kToneLetter;
}

std::u32string DecodeUtf8(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  size_t i = 0;
  auto bad = [&](size_t at) {
    return Error(ErrorCode::kUnsupportedCodepoint,
                 "invalid UTF-8 at byte " + std::to_string(at));
  };
  while (i < s.size()) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    char32_t c;
    int extra;
    if (b0 < 0x80) {
      c = b0;
      extra = 0;
    } else if ((b0 & 0xE0) == 0xC0) {
      c = b0 & 0x1F;
      extra = 1;
    } else if ((b0 & 0xF0) == 0xE0) {
      c = b0 & 0x0F;
      extra = 2;
    } else if ((b0 & 0xF8) == 0xF0) {
      c = b0 & 0x07;
      extra = 3;
    } else {
      throw bad(i);
    }
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= s.size()) throw bad(i);
      unsigned char b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) throw bad(i);
      c = (c << 6) | (b & 0x3F);
    }
    // Overlong forms, surrogates and out-of-range values.
    static constexpr char32_t kMin[] = {0, 0x80, 0x800, 0x10000};
    if (c < kMin[extra] || c > 0x10FFFF || (c >= 0xD800 && c <= 0xDFFF))
      throw bad(i);
    out.push_back(c);
    i += extra + 1;
  }
  return out;
}

void AppendUtf8(char32_t c, std::string *out) {
  if (c < 0x80) {
    out->push_back(static_cast<char>(c));
  } else if (c < 0x800) {
    out->push_back(static_cast<char>(0xC0 | (c >> 6)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else if (c < 0x10000) {
    out->push_back(static_cast<char>(0xE0 | (c >> 12)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  } else {
    out->push_back(static_cast<char>(0xF0 | (c >> 18)));
    out->push_back(static_cast<char>(0x80 | ((c >> 12) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | ((c >> 6) & 0x3F)));
    out->push_back(static_cast<char>(0x80 | (c & 0x3F)));
  }
}

std::string EncodeUtf8(std::u32string_view s) {
  std::string out;
  for (char32_t c : s) AppendUtf8(c, &out);
  return out;
}

// Accumulates one phone at a time while scanning.
class PhoneBuilder {
 public:
  bool open() const { return open_; }
  bool pending_tie() const { return pending_tie_; }

  void Start(char32_t base) {
    phone_ = IpaPhone();
    open_ = true;
    AddBase(base);
  }
  void AddBase(char32_t c) {
    phone_.bases_.push_back(c);
    AppendUtf8(c, &phone_.canonical_);
    pending_tie_ = false;
  }
  void AddTie(char32_t c) {
    phone_.ties_.push_back(c);
    AppendUtf8(c, &phone_.canonical_);
    pending_tie_ = true;
  }
  void AddModifier(char32_t c) {
    phone_.modifiers_.push_back(c);
    AppendUtf8(c, &phone_.canonical_);
  }
  void FlushInto(PhoneSeq *out) {
    if (open_) out->push_back(std::move(phone_));
    open_ = false;
  }

 private:
  IpaPhone phone_;
  bool open_ = false;
  bool pending_tie_ = false;
};

PhoneSeq Tokenize(std::string_view s) {
  std::u32string cps = DecodeUtf8(s);
  PhoneSeq out;
  PhoneBuilder cur;
  for (size_t i = 0; i < cps.size(); ++i) {
    IpaSymbol sym = ClassifySymbol(cps[i]);
    std::string at = " at codepoint " + std::to_string(i);
    switch (sym.cls) {
      case SymbolClass::kSeparator:
        if (cur.pending_tie())
          throw Error(ErrorCode::kDanglingTieBar,
                      "tie bar not followed by a base letter" + at);
        cur.FlushInto(&out);
        break;
      case SymbolClass::kBaseLetter:
        if (cur.pending_tie()) {
          cur.AddBase(sym.codepoint);
        } else {
          cur.FlushInto(&out);
          cur.Start(sym.codepoint);
        }
        break;
      case SymbolClass::kTieBar:
        if (!cur.open() || cur.pending_tie())
          throw Error(ErrorCode::kDanglingTieBar,
                      "tie bar without a preceding base letter" + at);
        cur.AddTie(sym.codepoint);
        break;
      default:
        if (cur.pending_tie())
          throw Error(ErrorCode::kDanglingTieBar,
                      "tie bar not followed by a base letter" + at);
        if (!cur.open())
          throw Error(ErrorCode::kDanglingModifier,
                      "modifier " + Hex(sym.codepoint) +
                          " has no preceding base letter" + at);
        cur.AddModifier(sym.codepoint);
        break;
    }
  }
  if (cur.pending_tie())
    throw Error(ErrorCode::kDanglingTieBar, "input ends with a tie bar");
  cur.FlushInto(&out);
  return out;
}

IpaPhone IpaPhone::Parse(std::string_view s) {
  PhoneSeq seq = Tokenize(s);
  if (seq.size() != 1 || seq[0].canonical().size() != s.size())
    throw Error(ErrorCode::kNotSinglePhone,
                "'" + std::string(s) + "' is not exactly one IPA phone");
  return std::move(seq[0]);
}

std::string Render(std::span<const IpaPhone> phones,
                   std::string_view separator) {
  std::string out;
  for (size_t i = 0; i < phones.size(); ++i) {
    if (i > 0) out += separator;
    out += phones[i].canonical();
  }
  return out;
}

IpaPhone StripModifiers(const IpaPhone &p) {
  if (!p.HasModifiers()) return p;
  IpaPhone out;
  out.bases_ = p.bases_;
  out.ties_ = p.ties_;
  for (size_t i = 0; i < p.bases_.size(); ++i) {
    AppendUtf8(p.bases_[i], &out.canonical_);
    if (i < p.ties_.size()) AppendUtf8(p.ties_[i], &out.canonical_);
  }
  return out;
}

PhoneSeq StripModifiers(std::span<const IpaPhone> phones) {
  PhoneSeq out;
  out.reserve(phones.size());
  for (const IpaPhone &p : phones) out.push_back(StripModifiers(p));
  return out;
}

bool IsVowelLetter(char32_t c) {
  static constexpr char32_t kVowels[] = {
      U'a', U'e', U'i', U'o', U'u', U'y',
      0x00E6,  // æ
      0x00F8,  // ø
      0x0153,  // œ
      0x0276,  // ɶ
      0x0250,  // ɐ
      0x0251,  // ɑ
      0x0252,  // ɒ
      0x0254,  // ɔ
      0x0258,  // ɘ
      0x0259,  // ə
      0x025A,  // ɚ
      0x025B,  // ɛ
      0x025C,  // ɜ
      0x025D,  // ɝ
      0x025E,  // ɞ
      0x0264,  // ɤ
      0x0268,  // ɨ
      0x026A,  // ɪ
      0x026F,  // ɯ
      0x0275,  // ɵ
      0x0289,  // ʉ
      0x028A,  // ʊ
      0x028C,  // ʌ
      0x028F,  // ʏ
  };
  return std::find(std::begin(kVowels), std::end(kVowels), c) !=
         std::end(kVowels);
}

PhoneClass ClassOf(const IpaPhone &p) {
  return IsVowelLetter(p.bases().front()) ? PhoneClass::kVowel
                                          : PhoneClass::kConsonant;
}

InventoryStats ComputeInventoryStats(const PhoneInventory &inv,
                                     std::span<const PhoneInventory> others) {
  InventoryStats stats;
  for (const IpaPhone &p : inv.phones) {
    if (ClassOf(p) == PhoneClass::kVowel)
      ++stats.n_vowels;
    else
      ++stats.n_consonants;
    bool shared = std::any_of(others.begin(), others.end(),
                              [&](const PhoneInventory &o) {
                                return o.Contains(p);
                              });
    if (!shared) ++stats.n_unique;
  }
  return stats;
}

}  // namespace phonotact
