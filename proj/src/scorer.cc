// phonotact/scorer.cc

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

#include "phonotact/scorer.h"

#include <algorithm>
#include <array>
#include <cstdio>
#include <ostream>

#include "phonotact/error.h"

namespace phonotact {

AlignmentReport Align(std::span<const IpaPhone> ref,
                      std::span<const IpaPhone> hyp) {
  const size_t n = ref.size();
  const size_t m = hyp.size();
  std::vector<int32_t> d((n + 1) * (m + 1));
  auto at = [&](size_t i, size_t j) -> int32_t & { return d[i * (m + 1) + j]; };
  for (size_t i = 0; i <= n; ++i) at(i, 0) = static_cast<int32_t>(i);
  for (size_t j = 0; j <= m; ++j) at(0, j) = static_cast<int32_t>(j);
  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      int32_t diag = at(i - 1, j - 1) + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      at(i, j) = std::min({diag, at(i - 1, j) + 1, at(i, j - 1) + 1});
    }
  }

  AlignmentReport report;
  report.n_ref = static_cast<int64_t>(n);
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    const int32_t cur = at(i, j);
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && cur == at(i - 1, j - 1)) {
      report.ops.push_back({EditOp::kMatch, int(i - 1), int(j - 1)});
      ++report.counts.matches;
      --i, --j;
    } else if (i > 0 && j > 0 && ref[i - 1] != hyp[j - 1] &&
               cur == at(i - 1, j - 1) + 1) {
      report.ops.push_back({EditOp::kSub, int(i - 1), int(j - 1)});
      ++report.counts.subs;
      --i, --j;
    } else if (i > 0 && cur == at(i - 1, j) + 1) {
      report.ops.push_back({EditOp::kDel, int(i - 1), -1});
      ++report.counts.dels;
      --i;
    } else {
      report.ops.push_back({EditOp::kIns, -1, int(j - 1)});
      ++report.counts.inss;
      --j;
    }
  }
  std::reverse(report.ops.begin(), report.ops.end());
  return report;
}

namespace {

// Largest-remainder rounding of parts/total to tenths of a percent.
std::array<double, 3> RoundedShares(const std::array<int64_t, 3> &parts,
                                    int64_t total) {
  std::array<int64_t, 3> tenths{};
  std::array<int64_t, 3> rem{};
  int64_t assigned = 0;
  for (int k = 0; k < 3; ++k) {
    tenths[k] = parts[k] * 1000 / total;
    rem[k] = parts[k] * 1000 % total;
    assigned += tenths[k];
  }
  std::array<int, 3> order = {0, 1, 2};
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rem[a] > rem[b]; });
  for (int64_t left = 1000 - assigned, k = 0; left > 0; --left, ++k)
    ++tenths[order[k]];
  return {tenths[0] / 10.0, tenths[1] / 10.0, tenths[2] / 10.0};
}

}  // namespace

PerReport ComputePerReport(std::span<const RefHyp> pairs) {
  PerReport rep;
  for (const auto &[ref, hyp] : pairs) {
    AlignmentReport a = Align(ref, hyp);
    rep.n_ref += a.n_ref;
    rep.counts.matches += a.counts.matches;
    rep.counts.subs += a.counts.subs;
    rep.counts.dels += a.counts.dels;
    rep.counts.inss += a.counts.inss;
    for (const IpaPhone &p : ref) ++rep.per_phone[p].occurrences;
    for (const AlignStep &s : a.ops) {
      switch (s.op) {
        case EditOp::kSub: ++rep.per_phone[ref[s.ref_index]].subs; break;
        case EditOp::kDel: ++rep.per_phone[ref[s.ref_index]].dels; break;
        case EditOp::kIns: ++rep.per_phone[hyp[s.hyp_index]].insertions; break;
        case EditOp::kMatch: break;
      }
    }
  }
  if (rep.n_ref == 0)
    throw Error(ErrorCode::kEmptyReference, "total reference length is 0");
  const int64_t errors = rep.counts.errors();
  rep.per = static_cast<double>(errors) / static_cast<double>(rep.n_ref);
  if (errors > 0) {
    auto s = RoundedShares({rep.counts.inss, rep.counts.dels, rep.counts.subs},
                           errors);
    rep.pct_ins = s[0];
    rep.pct_del = s[1];
    rep.pct_sub = s[2];
  }
  return rep;
}

PerReport ComputeLenientReport(std::span<const RefHyp> pairs) {
  std::vector<RefHyp> stripped;
  stripped.reserve(pairs.size());
  for (const auto &[ref, hyp] : pairs)
    stripped.emplace_back(StripModifiers(ref), StripModifiers(hyp));
  return ComputePerReport(stripped);
}

std::vector<PhoneShareRow> PhoneShareReport(
    const std::map<IpaPhone, PhoneErrorStats> &per_phone,
    std::span<const PhoneInventory> inventories) {
  std::vector<PhoneShareRow> rows;
  for (const auto &[phone, st] : per_phone) {
    if (st.occurrences == 0) continue;
    int n = 0;
    for (const PhoneInventory &inv : inventories) n += inv.Contains(phone);
    if (n == 0)
      throw Error(ErrorCode::kUnknownPhone,
                  "phone " + phone.canonical() + " is in no inventory");
    rows.push_back({phone, n, st.occurrences,
                    static_cast<double>(st.errors()) /
                        static_cast<double>(st.occurrences)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const PhoneShareRow &a, const PhoneShareRow &b) {
                     return a.n_languages < b.n_languages;
                   });
  return rows;
}

std::string FormatFixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

void WriteSummaryTsv(std::ostream &out,
                     std::span<const std::pair<std::string, PerReport>> rows) {
  out << "system\tper\tpct_ins\tpct_del\tpct_sub\n";
  for (const auto &[name, r] : rows) {
    out << name << '\t' << FormatFixed(100.0 * r.per, 1) << '\t'
        << FormatFixed(r.pct_ins, 1) << '\t' << FormatFixed(r.pct_del, 1)
        << '\t' << FormatFixed(r.pct_sub, 1) << '\n';
  }
}

void WriteShareTsv(std::ostream &out, std::span<const PhoneShareRow> rows) {
  out << "phone\tn_languages\toccurrences\terror_rate\n";
  for (const PhoneShareRow &r : rows) {
    out << r.phone.canonical() << '\t' << r.n_languages << '\t'
        << r.occurrences << '\t' << FormatFixed(r.error_rate, 4) << '\n';
  }
}

}  // namespace phonotact
