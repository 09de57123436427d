// phonotact/experiment.h

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

// Config-driven experiment grid over synthetic languages: for every seed,
// generate the languages, then for every cell (scenario x AM training x LM)
// and every target language, tune the LM weight on dev and score eval.
//
// Config format: '#' comments, "[experiment]" and "[cell NAME]" sections,
// "key = value" lines. Experiment keys (defaults in ExperimentConfig):
//
//   name languages n_shared n_unique pool_size temperature
//   train_utts heldout_utts dev_fraction min_len max_len
//   confusion same_base_share mean_dur segment_noise frame_noise sharpness
//   seed n_seeds beam insertion_penalty lm_weights (comma list) smoothing
//
// Cell keys, all required:
//
//   scenario     mono | multi | cross
//   am_training  target | pooled | leave_one_out
//   lm_training  target | pooled | leave_one_out
//   lm_kind      phone_ug | phone_bg | phone_tg | word_tg
//
// A mono cell trains AM and LM on the target only, a multi cell uses a pooled
// AM and a cross cell a leave-one-out AM; violations are rejected when the
// config is parsed.

#ifndef PHONOTACT_EXPERIMENT_H_
#define PHONOTACT_EXPERIMENT_H_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phonotact/decoder.h"
#include "phonotact/ngram.h"
#include "phonotact/scorer.h"
#include "phonotact/synth.h"

namespace phonotact {

enum class Scenario { kMono, kMulti, kCross };
enum class LmKind { kPhoneUg, kPhoneBg, kPhoneTg, kWordTg };
enum class Training { kTargetOnly, kPooled, kLeaveOneOut };

std::string_view ScenarioName(Scenario s);
std::string_view LmKindName(LmKind k);
std::string_view TrainingName(Training t);

struct CellSpec {
  std::string name;
  Scenario scenario = Scenario::kMono;
  Training am_training = Training::kTargetOnly;
  Training lm_training = Training::kTargetOnly;
  LmKind lm_kind = LmKind::kPhoneTg;

  // Throws kInvalidConfig.
  void Validate() const;
};

struct ExperimentConfig {
  std::string name = "experiment";
  int n_languages = 2;
  int n_shared = 12;
  int n_unique = 4;
  int pool_size = 0;
  double temperature = 0.1;

  int train_utts = 2000;
  int heldout_utts = 600;
  // Share of held-out utterances (chosen by id hash) used to tune the LM
  // weight; the rest is eval.
  double dev_fraction = 0.1;
  int min_len = 4;
  int max_len = 12;

  double confusion = 0.3;
  double same_base_share = 0.5;
  double mean_dur = 3.0;
  double segment_noise = 0.0;
  double frame_noise = 0.0;
  double sharpness = 1.0;

  uint64_t seed = 1;
  int n_seeds = 20;

  double beam = std::numeric_limits<double>::infinity();
  double insertion_penalty = 0.0;
  std::vector<double> lm_weights = DefaultLmWeights();
  Smoothing smoothing = Smoothing::kWittenBell;

  std::vector<CellSpec> cells;

  // Throws kInvalidConfig.
  void Validate() const;
  std::vector<uint64_t> Seeds() const;
  int FindCell(std::string_view name) const;  // -1 if absent
};

// Errors carry file:line; kMalformedConfig for syntax, unknown keys and bad
// values, kInvalidConfig for inconsistent settings.
ExperimentConfig ParseConfig(std::istream &in,
                             const std::string &source = "<config>");
ExperimentConfig ParseConfigFile(const std::string &path);

// Replaces cfg->seed with $PHONOTACT_SEED when set. Returns true if it did.
bool ApplySeedOverride(ExperimentConfig *cfg);

struct LanguageResult {
  std::string language;
  double lm_weight = 0.0;
  std::vector<std::pair<double, double>> sweep;  // (lm_weight, dev PER)
  PerReport report;   // eval, strict
  PerReport lenient;  // eval, modifiers stripped
};

struct CellSeedResult {
  std::vector<LanguageResult> languages;  // one per target
  PerReport pooled;                       // over all targets
  PerReport pooled_lenient;
};

struct SeedResult {
  uint64_t seed = 0;
  std::vector<SyntheticLanguage> languages;
  std::vector<CellSeedResult> cells;  // parallel to ExperimentConfig::cells
};

struct ExperimentResult {
  std::vector<SeedResult> seeds;
};

// Runs the grid. With a non-empty out_dir, writes
//
//   cells/<cell>.tsv   per (seed, language) results, flushed per seed
//   sweep.tsv          dev PER for every (seed, cell, language, weight)
//   grid.tsv           rows (seed, language); per cell its PER and weight
//   summary.tsv        per cell, pooled over seeds and languages
//   lenient.tsv        the same, modifiers stripped
//   share_<cell>.tsv   cross cells: error rate by number of sharing languages
//
// Progress goes to `log` if given.
ExperimentResult RunExperiment(const ExperimentConfig &cfg,
                               const std::string &out_dir,
                               std::ostream *log = nullptr);

// Languages of one seed, generated exactly as RunExperiment does.
std::vector<SyntheticLanguage> GenerateLanguages(const ExperimentConfig &cfg,
                                                 uint64_t seed);

}  // namespace phonotact

#endif  // PHONOTACT_EXPERIMENT_H_
