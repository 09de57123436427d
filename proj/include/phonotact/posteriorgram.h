// phonotact/posteriorgram.h

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

// Per-frame phone posteriors, either simulated from a reference phone
// sequence or read from files produced by an external acoustic model.

#ifndef PHONOTACT_POSTERIORGRAM_H_
#define PHONOTACT_POSTERIORGRAM_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "phonotact/ipa.h"
#include "phonotact/rng.h"

namespace phonotact {

struct Posteriorgram {
  PhoneSeq phones;  // output inventory of the acoustic model
  // frames[t][p]: natural-log posterior of phones[p] at frame t.
  std::vector<std::vector<double>> frames;

  size_t num_frames() const { return frames.size(); }
  size_t num_phones() const { return phones.size(); }

  // T >= 1, |phones| >= 2, distinct phones, rows of width |phones| whose
  // exponentials sum to 1 within 1e-6. Throws kMalformedPgram.
  void Validate() const;
};

// Simulated acoustic model. `inventory` is what the model saw in training;
// anything else in the truth is replaced before emission.
struct AmProfile {
  PhoneInventory inventory;
  // Mass moved off the target phone each frame, in [0, 1).
  double confusion = 0.0;
  // Of that mass, the part given to phones with the same bare base (when
  // there are any); the rest is spread uniformly.
  double same_base_share = 0.5;
  // Mean of the geometric per-phone duration, in frames (>= 1).
  double mean_dur = 1.0;
  // Standard deviations of Gaussian log-domain perturbations, drawn once per
  // phone segment and once per frame. Zero gives the exact mixture above.
  double segment_noise = 0.0;
  double frame_noise = 0.0;
  // Frame posteriors are raised to this power and renormalized (> 0). Values
  // above 1 make the model more confident in whatever it believes, the way a
  // real AM's frame likelihoods outweigh a per-phone LM score.
  double sharpness = 1.0;
  uint64_t seed = 0;

  // Throws kInvalidProfile.
  void Validate() const;
};

// Deterministic in (truth, profile, utt_id). Errors: kEmptyTruth,
// kInvalidProfile.
Posteriorgram Simulate(std::span<const IpaPhone> truth,
                       const AmProfile &profile, std::string_view utt_id = "");

// The in-inventory phone a model trained on `inventory` would produce for an
// unseen phone: the same-base phone with the fewest modifiers (ties by
// canonical order) or, with no same-base candidate, a uniform draw.
IpaPhone SubstituteUnseen(const IpaPhone &p, const PhoneInventory &inventory,
                          Rng &rng);

// Framewise argmax, run-length collapsed.
PhoneSeq CollapsedArgmax(const Posteriorgram &pg);

// File format:
//
//   PGRAM v1
//   <T> <P>
//   <P canonical phones, space separated>
//   T lines of P natural-log probabilities, "%.9g", space separated
void WritePgram(const Posteriorgram &pg, std::ostream &out);
void WritePgramFile(const Posteriorgram &pg, const std::string &path);
Posteriorgram ReadPgram(std::istream &in, const std::string &source = "<pgram>");
Posteriorgram ReadPgramFile(const std::string &path);

}  // namespace phonotact

#endif  // PHONOTACT_POSTERIORGRAM_H_
