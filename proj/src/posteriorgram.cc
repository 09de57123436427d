// phonotact/posteriorgram.cc

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

#include "phonotact/posteriorgram.h"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>

#include "phonotact/error.h"
#include "phonotact/transcript.h"

namespace phonotact {

namespace {

constexpr double kRowTolerance = 1e-6;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double RowMassError(const std::vector<double> &row) {
  double sum = 0.0;
  for (double v : row) sum += std::exp(v);
  return std::fabs(sum - 1.0);
}

void LogNormalize(std::vector<double> *row) {
  double m = *std::max_element(row->begin(), row->end());
  double sum = 0.0;
  for (double v : *row) sum += std::exp(v - m);
  double lse = m + std::log(sum);
  for (double &v : *row) v -= lse;
}

}  // namespace

void Posteriorgram::Validate() const {
  if (frames.empty())
    throw Error(ErrorCode::kMalformedPgram, "posteriorgram has no frames");
  if (phones.size() < 2)
    throw Error(ErrorCode::kMalformedPgram,
                "posteriorgram needs at least 2 phones");
  std::set<IpaPhone> distinct(phones.begin(), phones.end());
  if (distinct.size() != phones.size())
    throw Error(ErrorCode::kMalformedPgram, "duplicate phone in inventory");
  for (size_t t = 0; t < frames.size(); ++t) {
    if (frames[t].size() != phones.size())
      throw Error(ErrorCode::kMalformedPgram,
                  "frame " + std::to_string(t) + " has " +
                      std::to_string(frames[t].size()) + " values, expected " +
                      std::to_string(phones.size()));
    for (double v : frames[t]) {
      if (std::isnan(v) || v > 0.0)
        throw Error(ErrorCode::kMalformedPgram,
                    "frame " + std::to_string(t) +
                        " holds a value that is not a log probability");
    }
    if (RowMassError(frames[t]) > kRowTolerance)
      throw Error(ErrorCode::kMalformedPgram,
                  "frame " + std::to_string(t) + " does not sum to 1");
  }
}

void AmProfile::Validate() const {
  if (!(confusion >= 0.0 && confusion < 1.0))
    throw Error(ErrorCode::kInvalidProfile, "confusion must be in [0, 1)");
  if (!(mean_dur >= 1.0))
    throw Error(ErrorCode::kInvalidProfile, "mean_dur must be >= 1");
  if (!(same_base_share >= 0.0 && same_base_share <= 1.0))
    throw Error(ErrorCode::kInvalidProfile,
                "same_base_share must be in [0, 1]");
  if (!(segment_noise >= 0.0) || !(frame_noise >= 0.0))
    throw Error(ErrorCode::kInvalidProfile, "noise must be >= 0");
  if (!(sharpness > 0.0) || std::isinf(sharpness))
    throw Error(ErrorCode::kInvalidProfile, "sharpness must be > 0");
  if (inventory.phones.size() < 2)
    throw Error(ErrorCode::kInvalidProfile,
                "acoustic model inventory needs at least 2 phones");
}

IpaPhone SubstituteUnseen(const IpaPhone &p, const PhoneInventory &inventory,
                          Rng &rng) {
  IpaPhone bare = StripModifiers(p);
  const IpaPhone *best = nullptr;
  for (const IpaPhone &c : inventory.phones) {
    if (StripModifiers(c) != bare) continue;
    if (best == nullptr || c.modifiers().size() < best->modifiers().size())
      best = &c;
  }
  if (best != nullptr) return *best;
  auto it = inventory.phones.begin();
  std::advance(it, rng.Index(inventory.phones.size()));
  return *it;
}

Posteriorgram Simulate(std::span<const IpaPhone> truth,
                       const AmProfile &profile, std::string_view utt_id) {
  profile.Validate();
  if (truth.empty())
    throw Error(ErrorCode::kEmptyTruth, "cannot simulate an empty utterance");

  Posteriorgram pg;
  pg.phones.assign(profile.inventory.phones.begin(),
                   profile.inventory.phones.end());
  const size_t num_phones = pg.phones.size();
  std::vector<IpaPhone> bare = StripModifiers(pg.phones);

  Rng rng = Rng::ForStream(profile.seed, utt_id);
  const double eps = profile.confusion;
  std::vector<double> base(num_phones);
  std::vector<double> seg_offset(num_phones);
  std::vector<double> row(num_phones);
  for (const IpaPhone &p : truth) {
    IpaPhone emitted = profile.inventory.Contains(p)
                           ? p
                           : SubstituteUnseen(p, profile.inventory, rng);
    const size_t target =
        std::lower_bound(pg.phones.begin(), pg.phones.end(), emitted) -
        pg.phones.begin();
    const int dur = rng.Geometric(profile.mean_dur);

    // Mixture for this segment.
    size_t n_same = 0;
    for (size_t i = 0; i < num_phones; ++i)
      if (i != target && bare[i] == bare[target]) ++n_same;
    const size_t n_rest = num_phones - 1 - n_same;
    double same_mass = n_same == 0 ? 0.0
                       : n_rest == 0 ? eps
                                     : eps * profile.same_base_share;
    double rest_mass = eps - same_mass;
    for (size_t i = 0; i < num_phones; ++i) {
      double q;
      if (i == target)
        q = 1.0 - eps;
      else if (bare[i] == bare[target])
        q = same_mass / static_cast<double>(n_same);
      else
        q = rest_mass / static_cast<double>(n_rest);
      base[i] = q > 0.0 ? std::log(q) : kNegInf;
    }

    const bool noisy = profile.segment_noise > 0.0 ||
                       profile.frame_noise > 0.0 || profile.sharpness != 1.0;
    if (profile.segment_noise > 0.0) {
      for (double &o : seg_offset) o = profile.segment_noise * rng.Normal();
    } else {
      std::fill(seg_offset.begin(), seg_offset.end(), 0.0);
    }
    for (int f = 0; f < dur; ++f) {
      if (!noisy) {
        pg.frames.push_back(base);
        continue;
      }
      for (size_t i = 0; i < num_phones; ++i) {
        double n = profile.frame_noise > 0.0
                       ? profile.frame_noise * rng.Normal()
                       : 0.0;
        row[i] = profile.sharpness * (base[i] + seg_offset[i] + n);
      }
      LogNormalize(&row);
      pg.frames.push_back(row);
    }
  }
  return pg;
}

PhoneSeq CollapsedArgmax(const Posteriorgram &pg) {
  PhoneSeq out;
  size_t prev = pg.num_phones();
  for (const auto &row : pg.frames) {
    size_t best = std::max_element(row.begin(), row.end()) - row.begin();
    if (best != prev) out.push_back(pg.phones[best]);
    prev = best;
  }
  return out;
}

void WritePgram(const Posteriorgram &pg, std::ostream &out) {
  out << "PGRAM v1\n" << pg.num_frames() << ' ' << pg.num_phones() << '\n';
  out << Render(pg.phones, " ") << '\n';
  char buf[64];
  for (const auto &row : pg.frames) {
    for (size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.9g", row[i]);
      if (i) out << ' ';
      out << buf;
    }
    out << '\n';
  }
}

void WritePgramFile(const Posteriorgram &pg, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  WritePgram(pg, out);
}

Posteriorgram ReadPgram(std::istream &in, const std::string &source) {
  size_t lineno = 0;
  std::string line;
  auto fail = [&](const std::string &msg) {
    return Error(ErrorCode::kMalformedPgram, msg,
                 source + ":" + std::to_string(lineno));
  };
  auto next = [&]() {
    if (!std::getline(in, line)) {
      ++lineno;
      throw fail("unexpected end of file");
    }
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
  };

  next();
  if (line != "PGRAM v1") throw fail("expected 'PGRAM v1'");
  next();
  std::vector<std::string> dims = SplitWhitespace(line);
  if (dims.size() != 2) throw fail("expected '<T> <P>'");
  char *end = nullptr;
  long t = std::strtol(dims[0].c_str(), &end, 10);
  if (*end != '\0') throw fail("bad frame count");
  long p = std::strtol(dims[1].c_str(), &end, 10);
  if (*end != '\0') throw fail("bad phone count");
  if (t < 1) throw fail("frame count must be >= 1");
  if (p < 2) throw fail("phone count must be >= 2");

  Posteriorgram pg;
  next();
  std::vector<std::string> names = SplitWhitespace(line);
  if (names.size() != static_cast<size_t>(p))
    throw fail("expected " + std::to_string(p) + " phones");
  try {
    for (const std::string &n : names) pg.phones.push_back(IpaPhone::Parse(n));
  } catch (const Error &e) {
    throw fail(e.message());
  }
  if (std::set<IpaPhone>(pg.phones.begin(), pg.phones.end()).size() !=
      pg.phones.size())
    throw fail("duplicate phone in inventory");

  pg.frames.reserve(t);
  for (long i = 0; i < t; ++i) {
    next();
    std::vector<std::string> vals = SplitWhitespace(line);
    if (vals.size() != static_cast<size_t>(p))
      throw fail("expected " + std::to_string(p) + " values");
    std::vector<double> row(p);
    for (long j = 0; j < p; ++j) {
      errno = 0;
      row[j] = std::strtod(vals[j].c_str(), &end);
      if (*end != '\0' || std::isnan(row[j]) || row[j] > 0.0)
        throw fail("bad log probability '" + vals[j] + "'");
    }
    if (RowMassError(row) > kRowTolerance)
      throw fail("row does not sum to 1 within 1e-6");
    pg.frames.push_back(std::move(row));
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") != std::string::npos)
      throw fail("trailing data after the last frame");
  }
  return pg;
}

Posteriorgram ReadPgramFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ReadPgram(in, path);
}

}  // namespace phonotact
