// phonotact/scorer.h

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

// Phone error rate scoring: unit-cost Levenshtein alignment, pooled PER with
// an insertion/deletion/substitution breakdown, modifier-stripped (lenient)
// PER, and per-phone error rates grouped by how many languages share a phone.

#ifndef PHONOTACT_SCORER_H_
#define PHONOTACT_SCORER_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phonotact/ipa.h"

namespace phonotact {

enum class EditOp { kMatch, kSub, kDel, kIns };

struct AlignStep {
  EditOp op;
  int ref_index;  // -1 for kIns
  int hyp_index;  // -1 for kDel
};

struct AlignmentCounts {
  int64_t matches = 0;
  int64_t subs = 0;
  int64_t dels = 0;
  int64_t inss = 0;

  int64_t errors() const { return subs + dels + inss; }
};

struct AlignmentReport {
  std::vector<AlignStep> ops;
  int64_t n_ref = 0;
  AlignmentCounts counts;

  int64_t distance() const { return counts.errors(); }
};

// Minimal unit-cost alignment. Among equal-cost alignments the backtrace
// (from the end) prefers Match, then Sub, then Del, then Ins.
AlignmentReport Align(std::span<const IpaPhone> ref,
                      std::span<const IpaPhone> hyp);

struct PhoneErrorStats {
  int64_t occurrences = 0;  // in references
  int64_t subs = 0;
  int64_t dels = 0;
  int64_t insertions = 0;  // as hypothesis phone; not part of errors()

  int64_t errors() const { return subs + dels; }
};

struct PerReport {
  AlignmentCounts counts;
  int64_t n_ref = 0;
  double per = 0.0;  // (subs + dels + inss) / n_ref
  // Shares of the error mass in percent, rounded to one decimal so that they
  // add up to exactly 100.0; all zero when there are no errors.
  double pct_ins = 0.0;
  double pct_del = 0.0;
  double pct_sub = 0.0;
  std::map<IpaPhone, PhoneErrorStats> per_phone;
};

using RefHyp = std::pair<PhoneSeq, PhoneSeq>;

// Pooled over all pairs. Throws kEmptyReference if the references are all
// empty.
PerReport ComputePerReport(std::span<const RefHyp> pairs);
// ComputePerReport after stripping modifiers on both sides.
PerReport ComputeLenientReport(std::span<const RefHyp> pairs);

struct PhoneShareRow {
  IpaPhone phone;
  int n_languages;
  int64_t occurrences;
  double error_rate;  // (subs + dels) / occurrences
};

// Phones never seen in a reference are omitted. Rows are ordered by
// (n_languages, phone). Throws kUnknownPhone for a phone in no inventory.
std::vector<PhoneShareRow> PhoneShareReport(
    const std::map<IpaPhone, PhoneErrorStats> &per_phone,
    std::span<const PhoneInventory> inventories);

// TSV with header "system\tper\tpct_ins\tpct_del\tpct_sub"; one decimal.
void WriteSummaryTsv(std::ostream &out,
                     std::span<const std::pair<std::string, PerReport>> rows);
// TSV with header "phone\tn_languages\toccurrences\terror_rate"; four decimals.
void WriteShareTsv(std::ostream &out, std::span<const PhoneShareRow> rows);

std::string FormatFixed(double v, int decimals);

}  // namespace phonotact

#endif  // PHONOTACT_SCORER_H_
