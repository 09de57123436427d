// phonotact/experiment.cc

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

#include "phonotact/experiment.h"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <set>

#include "phonotact/error.h"
#include "phonotact/posteriorgram.h"
#include "phonotact/rng.h"

namespace phonotact {

std::string_view ScenarioName(Scenario s) {
  switch (s) {
    case Scenario::kMono: return "mono";
    case Scenario::kMulti: return "multi";
    case Scenario::kCross: return "cross";
  }
  return "?";
}

std::string_view LmKindName(LmKind k) {
  switch (k) {
    case LmKind::kPhoneUg: return "phone_ug";
    case LmKind::kPhoneBg: return "phone_bg";
    case LmKind::kPhoneTg: return "phone_tg";
    case LmKind::kWordTg: return "word_tg";
  }
  return "?";
}

std::string_view TrainingName(Training t) {
  switch (t) {
    case Training::kTargetOnly: return "target";
    case Training::kPooled: return "pooled";
    case Training::kLeaveOneOut: return "leave_one_out";
  }
  return "?";
}

void CellSpec::Validate() const {
  auto bad = [&](const std::string &m) {
    return Error(ErrorCode::kInvalidConfig, "cell '" + name + "': " + m);
  };
  switch (scenario) {
    case Scenario::kMono:
      if (am_training != Training::kTargetOnly ||
          lm_training != Training::kTargetOnly)
        throw bad("mono needs target-only AM and LM training");
      break;
    case Scenario::kMulti:
      if (am_training != Training::kPooled)
        throw bad("multi needs a pooled AM");
      break;
    case Scenario::kCross:
      if (am_training != Training::kLeaveOneOut)
        throw bad("cross needs a leave-one-out AM");
      break;
  }
}

void ExperimentConfig::Validate() const {
  auto bad = [](const std::string &m) {
    return Error(ErrorCode::kInvalidConfig, m);
  };
  if (n_languages < 1) throw bad("languages must be >= 1");
  if (train_utts < 1 || heldout_utts < 2)
    throw bad("need train_utts >= 1 and heldout_utts >= 2");
  if (!(dev_fraction > 0.0 && dev_fraction < 1.0))
    throw bad("dev_fraction must be in (0, 1)");
  if (min_len < 1 || max_len < min_len)
    throw bad("need 1 <= min_len <= max_len");
  if (n_seeds < 1) throw bad("n_seeds must be >= 1");
  if (lm_weights.empty()) throw bad("lm_weights is empty");
  for (double w : lm_weights)
    if (!(w >= 0.0)) throw bad("lm_weights must be >= 0");
  if (!(beam > 0.0)) throw bad("beam must be > 0");
  if (cells.empty()) throw bad("no [cell] sections");
  std::set<std::string> names;
  for (const CellSpec &c : cells) {
    c.Validate();
    if (!names.insert(c.name).second)
      throw bad("duplicate cell '" + c.name + "'");
    if (n_languages < 2 && (c.am_training == Training::kLeaveOneOut ||
                            c.lm_training == Training::kLeaveOneOut))
      throw bad("leave-one-out training needs at least 2 languages");
  }
}

std::vector<uint64_t> ExperimentConfig::Seeds() const {
  std::vector<uint64_t> s;
  for (int i = 0; i < n_seeds; ++i) s.push_back(seed + i);
  return s;
}

int ExperimentConfig::FindCell(std::string_view cell) const {
  for (size_t i = 0; i < cells.size(); ++i)
    if (cells[i].name == cell) return static_cast<int>(i);
  return -1;
}

namespace {

std::string Trim(std::string_view s) {
  size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  size_t e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

double ParseReal(const std::string &v) {
  char *end = nullptr;
  errno = 0;
  double d = std::strtod(v.c_str(), &end);
  if (v.empty() || *end != '\0' || errno == ERANGE || std::isnan(d))
    throw Error(ErrorCode::kMalformedConfig, "bad number '" + v + "'");
  return d;
}

long long ParseInt(const std::string &v) {
  char *end = nullptr;
  errno = 0;
  long long x = std::strtoll(v.c_str(), &end, 10);
  if (v.empty() || *end != '\0' || errno == ERANGE)
    throw Error(ErrorCode::kMalformedConfig, "bad integer '" + v + "'");
  return x;
}

int ParseSmallInt(const std::string &v) {
  long long x = ParseInt(v);
  if (x < -1000000000LL || x > 1000000000LL)
    throw Error(ErrorCode::kMalformedConfig, "integer out of range '" + v + "'");
  return static_cast<int>(x);
}

Training ParseTraining(const std::string &v) {
  if (v == "target") return Training::kTargetOnly;
  if (v == "pooled") return Training::kPooled;
  if (v == "leave_one_out") return Training::kLeaveOneOut;
  throw Error(ErrorCode::kMalformedConfig,
              "expected target, pooled or leave_one_out, got '" + v + "'");
}

}  // namespace

ExperimentConfig ParseConfig(std::istream &in, const std::string &source) {
  ExperimentConfig cfg;
  std::string line;
  size_t lineno = 0;
  enum class Section { kNone, kExperiment, kCell } section = Section::kNone;
  std::vector<size_t> cell_lines;
  std::vector<std::set<std::string>> cell_keys;
  try {
    while (std::getline(in, line)) {
      ++lineno;
      size_t hash = line.find('#');
      std::string text = Trim(hash == std::string::npos ? line
                                                        : line.substr(0, hash));
      if (text.empty()) continue;
      if (text.front() == '[') {
        if (text.back() != ']')
          throw Error(ErrorCode::kMalformedConfig, "unterminated section header");
        std::string inner = Trim(text.substr(1, text.size() - 2));
        if (inner == "experiment") {
          section = Section::kExperiment;
        } else if (inner.rfind("cell", 0) == 0 && inner.size() > 4 &&
                   (inner[4] == ' ' || inner[4] == '\t')) {
          CellSpec c;
          c.name = Trim(inner.substr(4));
          if (c.name.find_first_of(" \t/") != std::string::npos)
            throw Error(ErrorCode::kMalformedConfig,
                        "cell names may not contain blanks or '/'");
          cfg.cells.push_back(c);
          cell_lines.push_back(lineno);
          cell_keys.emplace_back();
          section = Section::kCell;
        } else {
          throw Error(ErrorCode::kMalformedConfig,
                      "unknown section [" + inner + "]");
        }
        continue;
      }
      size_t eq = text.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorCode::kMalformedConfig, "expected 'key = value'");
      std::string key = Trim(text.substr(0, eq));
      std::string value = Trim(text.substr(eq + 1));
      if (section == Section::kNone)
        throw Error(ErrorCode::kMalformedConfig, "key outside of a section");
      if (section == Section::kCell) {
        CellSpec &c = cfg.cells.back();
        if (!cell_keys.back().insert(key).second)
          throw Error(ErrorCode::kMalformedConfig, "duplicate key '" + key + "'");
        if (key == "scenario") {
          if (value == "mono") c.scenario = Scenario::kMono;
          else if (value == "multi") c.scenario = Scenario::kMulti;
          else if (value == "cross") c.scenario = Scenario::kCross;
          else
            throw Error(ErrorCode::kMalformedConfig,
                        "expected mono, multi or cross, got '" + value + "'");
        } else if (key == "am_training") {
          c.am_training = ParseTraining(value);
        } else if (key == "lm_training") {
          c.lm_training = ParseTraining(value);
        } else if (key == "lm_kind") {
          if (value == "phone_ug") c.lm_kind = LmKind::kPhoneUg;
          else if (value == "phone_bg") c.lm_kind = LmKind::kPhoneBg;
          else if (value == "phone_tg") c.lm_kind = LmKind::kPhoneTg;
          else if (value == "word_tg") c.lm_kind = LmKind::kWordTg;
          else
            throw Error(ErrorCode::kMalformedConfig,
                        "unknown lm_kind '" + value + "'");
        } else {
          throw Error(ErrorCode::kMalformedConfig, "unknown cell key '" + key + "'");
        }
        continue;
      }
      if (key == "name") cfg.name = value;
      else if (key == "languages") cfg.n_languages = ParseSmallInt(value);
      else if (key == "n_shared") cfg.n_shared = ParseSmallInt(value);
      else if (key == "n_unique") cfg.n_unique = ParseSmallInt(value);
      else if (key == "pool_size") cfg.pool_size = ParseSmallInt(value);
      else if (key == "temperature") cfg.temperature = ParseReal(value);
      else if (key == "train_utts") cfg.train_utts = ParseSmallInt(value);
      else if (key == "heldout_utts") cfg.heldout_utts = ParseSmallInt(value);
      else if (key == "dev_fraction") cfg.dev_fraction = ParseReal(value);
      else if (key == "min_len") cfg.min_len = ParseSmallInt(value);
      else if (key == "max_len") cfg.max_len = ParseSmallInt(value);
      else if (key == "confusion") cfg.confusion = ParseReal(value);
      else if (key == "same_base_share") cfg.same_base_share = ParseReal(value);
      else if (key == "mean_dur") cfg.mean_dur = ParseReal(value);
      else if (key == "segment_noise") cfg.segment_noise = ParseReal(value);
      else if (key == "frame_noise") cfg.frame_noise = ParseReal(value);
      else if (key == "sharpness") cfg.sharpness = ParseReal(value);
      else if (key == "seed") {
        long long s = ParseInt(value);
        if (s < 0) throw Error(ErrorCode::kMalformedConfig, "seed must be >= 0");
        cfg.seed = static_cast<uint64_t>(s);
      } else if (key == "n_seeds") cfg.n_seeds = ParseSmallInt(value);
      else if (key == "beam") cfg.beam = ParseReal(value);
      else if (key == "insertion_penalty") cfg.insertion_penalty = ParseReal(value);
      else if (key == "lm_weights") {
        cfg.lm_weights.clear();
        size_t start = 0;
        while (start <= value.size()) {
          size_t comma = value.find(',', start);
          if (comma == std::string::npos) comma = value.size();
          cfg.lm_weights.push_back(ParseReal(Trim(value.substr(start, comma - start))));
          start = comma + 1;
        }
      } else if (key == "smoothing") {
        try {
          cfg.smoothing = ParseSmoothing(value);
        } catch (const Error &e) {
          throw Error(ErrorCode::kMalformedConfig, e.message());
        }
      } else {
        throw Error(ErrorCode::kMalformedConfig, "unknown key '" + key + "'");
      }
    }
  } catch (const Error &e) {
    throw e.At(source, lineno);
  }

  static const char *const kCellKeys[] = {"scenario", "am_training",
                                          "lm_training", "lm_kind"};
  for (size_t i = 0; i < cfg.cells.size(); ++i) {
    try {
      for (const char *k : kCellKeys)
        if (!cell_keys[i].count(k))
          throw Error(ErrorCode::kMalformedConfig,
                      "cell '" + cfg.cells[i].name + "' lacks '" + k + "'");
      cfg.cells[i].Validate();
    } catch (const Error &e) {
      throw e.At(source, cell_lines[i]);
    }
  }
  try {
    cfg.Validate();
  } catch (const Error &e) {
    throw e.At(source, lineno);
  }
  return cfg;
}

ExperimentConfig ParseConfigFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ParseConfig(in, path);
}

bool ApplySeedOverride(ExperimentConfig *cfg) {
  const char *env = std::getenv("PHONOTACT_SEED");
  if (env == nullptr || *env == '\0') return false;
  char *end = nullptr;
  errno = 0;
  unsigned long long s = std::strtoull(env, &end, 10);
  if (*end != '\0' || errno == ERANGE || env[0] == '-')
    throw Error(ErrorCode::kInvalidConfig,
                std::string("PHONOTACT_SEED is not a seed: '") + env + "'");
  cfg->seed = s;
  return true;
}

std::vector<SyntheticLanguage> GenerateLanguages(const ExperimentConfig &cfg,
                                                 uint64_t seed) {
  std::vector<SyntheticLanguage> langs;
  std::set<IpaPhone> taken;
  for (int k = 0; k < cfg.n_languages; ++k) {
    GenLanguageOptions o;
    o.id = "L" + std::to_string(k);
    o.n_shared = cfg.n_shared;
    o.n_unique = cfg.n_unique;
    o.temperature = cfg.temperature;
    o.pool_size = cfg.pool_size;
    o.seed = MixSeed(seed, StableHash(o.id));
    o.exclude = taken;
    langs.push_back(GenLanguage(o));
    taken.insert(langs.back().phones.begin(), langs.back().phones.end());
  }
  return langs;
}

namespace {

struct LanguageData {
  std::vector<Utterance> train;
  std::vector<Utterance> dev;
  std::vector<Utterance> eval;
};

struct Simulated {
  PhoneSeq inventory;
  std::vector<Posteriorgram> dev;
  std::vector<Posteriorgram> eval;
};

struct LmBundle {
  std::unique_ptr<NGramModel> lm;
  Lexicon lexicon;  // word LMs only
};

// Languages a model is trained on, as indices.
std::vector<size_t> TrainingSet(Training t, size_t target, size_t n) {
  std::vector<size_t> out;
  for (size_t k = 0; k < n; ++k) {
    if (t == Training::kTargetOnly && k != target) continue;
    if (t == Training::kLeaveOneOut && k == target) continue;
    out.push_back(k);
  }
  return out;
}

std::string SetKey(const std::vector<size_t> &set,
                   const std::vector<SyntheticLanguage> &langs) {
  std::string key;
  for (size_t k : set) {
    if (!key.empty()) key += '+';
    key += langs[k].inventory.language_id;
  }
  return key;
}

int OrderOf(LmKind k) {
  switch (k) {
    case LmKind::kPhoneUg: return 1;
    case LmKind::kPhoneBg: return 2;
    case LmKind::kPhoneTg:
    case LmKind::kWordTg: return 3;
  }
  return 3;
}

std::string FormatWeight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", w);
  return buf;
}

std::string Pct(double fraction) { return FormatFixed(100.0 * fraction, 1); }

std::ofstream OpenOut(const std::filesystem::path &p) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + p.string());
  return out;
}

}  // namespace

ExperimentResult RunExperiment(const ExperimentConfig &cfg,
                               const std::string &out_dir, std::ostream *log) {
  cfg.Validate();
  namespace fs = std::filesystem;
  const bool write = !out_dir.empty();
  std::vector<std::ofstream> cell_out;
  std::ofstream sweep_out;
  if (write) {
    fs::create_directories(fs::path(out_dir) / "cells");
    for (const CellSpec &c : cfg.cells) {
      cell_out.push_back(OpenOut(fs::path(out_dir) / "cells" / (c.name + ".tsv")));
      cell_out.back() << "seed\tlanguage\tlm_weight\tper\tlenient_per\tn_ref\t"
                         "subs\tdels\tins\n";
    }
    sweep_out = OpenOut(fs::path(out_dir) / "sweep.tsv");
    sweep_out << "seed\tcell\tlanguage\tlm_weight\tdev_per\n";
  }

  DecodeConfig dcfg;
  dcfg.beam = cfg.beam;
  dcfg.insertion_penalty = cfg.insertion_penalty;

  ExperimentResult result;
  std::vector<std::vector<RefHyp>> all_pairs(cfg.cells.size());
  // Cross cells: (n_languages, phone) -> (occurrences, errors).
  std::vector<std::map<std::pair<int, IpaPhone>, std::pair<int64_t, int64_t>>>
      share(cfg.cells.size());

  for (uint64_t seed : cfg.Seeds()) {
    SeedResult sr;
    sr.seed = seed;
    sr.languages = GenerateLanguages(cfg, seed);
    const size_t n_lang = sr.languages.size();

    std::vector<LanguageData> data(n_lang);
    for (size_t k = 0; k < n_lang; ++k) {
      const SyntheticLanguage &L = sr.languages[k];
      const std::string &id = L.inventory.language_id;
      data[k].train =
          SampleCorpus(L, cfg.train_utts, cfg.min_len, cfg.max_len,
                       MixSeed(L.seed, StableHash("train")), id + "_train_");
      auto held =
          SampleCorpus(L, cfg.heldout_utts, cfg.min_len, cfg.max_len,
                       MixSeed(L.seed, StableHash("heldout")), id + "_heldout_");
      for (Utterance &u : held) {
        double h = static_cast<double>(StableHash(u.id) % 1000000) / 1e6;
        (h < cfg.dev_fraction ? data[k].dev : data[k].eval).push_back(std::move(u));
      }
      if (data[k].dev.empty() || data[k].eval.empty())
        throw Error(ErrorCode::kInvalidConfig,
                    "dev_fraction leaves an empty dev or eval set for " + id);
    }

    std::map<std::string, Simulated> sims;
    std::map<std::string, LmBundle> lms;
    auto simulated = [&](Training t, size_t target) -> const Simulated & {
      std::vector<size_t> set = TrainingSet(t, target, n_lang);
      std::string am_key = SetKey(set, sr.languages);
      std::string key = sr.languages[target].inventory.language_id + "|" + am_key;
      auto it = sims.find(key);
      if (it != sims.end()) return it->second;
      AmProfile prof;
      prof.inventory.language_id = am_key;
      for (size_t k : set)
        prof.inventory.phones.insert(sr.languages[k].phones.begin(),
                                     sr.languages[k].phones.end());
      prof.confusion = cfg.confusion;
      prof.same_base_share = cfg.same_base_share;
      prof.mean_dur = cfg.mean_dur;
      prof.segment_noise = cfg.segment_noise;
      prof.frame_noise = cfg.frame_noise;
      prof.sharpness = cfg.sharpness;
      prof.seed = MixSeed(seed, StableHash("am/" + am_key));
      Simulated s;
      s.inventory.assign(prof.inventory.phones.begin(), prof.inventory.phones.end());
      for (const Utterance &u : data[target].dev)
        s.dev.push_back(Simulate(u.phones, prof, u.id));
      for (const Utterance &u : data[target].eval)
        s.eval.push_back(Simulate(u.phones, prof, u.id));
      return sims.emplace(key, std::move(s)).first->second;
    };
    auto language_model = [&](LmKind kind, Training t,
                              size_t target) -> const LmBundle & {
      std::vector<size_t> set = TrainingSet(t, target, n_lang);
      std::string key = std::string(LmKindName(kind)) + "|" + SetKey(set, sr.languages);
      auto it = lms.find(key);
      if (it != lms.end()) return it->second;
      LmBundle b;
      if (kind == LmKind::kWordTg) {
        std::vector<Utterance> utts;
        for (size_t k : set)
          utts.insert(utts.end(), data[k].train.begin(), data[k].train.end());
        PseudoWords pw = SegmentPseudoWords(utts);
        b.lm = std::make_unique<NGramModel>(
            TrainNGram(pw.corpus, OrderOf(kind), cfg.smoothing));
        b.lexicon = std::move(pw.lexicon);
      } else {
        std::vector<TokenSeq> corpus;
        for (size_t k : set)
          for (const Utterance &u : data[k].train) {
            TokenSeq s;
            for (const IpaPhone &p : u.phones) s.push_back(p.canonical());
            corpus.push_back(std::move(s));
          }
        b.lm = std::make_unique<NGramModel>(
            TrainNGram(corpus, OrderOf(kind), cfg.smoothing));
      }
      return lms.emplace(key, std::move(b)).first->second;
    };

    for (size_t c = 0; c < cfg.cells.size(); ++c) {
      const CellSpec &cell = cfg.cells[c];
      CellSeedResult cr;
      std::vector<RefHyp> cell_pairs;
      for (size_t target = 0; target < n_lang; ++target) {
        const Simulated &sim = simulated(cell.am_training, target);
        const LmBundle &lmb = language_model(cell.lm_kind, cell.lm_training, target);
        std::vector<DevItem> dev;
        for (size_t i = 0; i < sim.dev.size(); ++i)
          dev.push_back({&sim.dev[i], data[target].dev[i].phones});

        LanguageResult lr;
        lr.language = sr.languages[target].inventory.language_id;
        std::vector<RefHyp> pairs;
        auto run = [&](auto &decoder) {
          SweepResult sw = SweepLmWeight(dev, decoder, cfg.lm_weights, dcfg);
          lr.lm_weight = sw.best_weight;
          lr.sweep = sw.table;
          DecodeConfig d = dcfg;
          d.lm_weight = sw.best_weight;
          for (size_t i = 0; i < sim.eval.size(); ++i)
            pairs.emplace_back(data[target].eval[i].phones,
                               decoder.Decode(sim.eval[i], d).phones);
        };
        if (cell.lm_kind == LmKind::kWordTg) {
          WordLmDecoder decoder(*lmb.lm, lmb.lexicon, sim.inventory);
          run(decoder);
        } else {
          PhoneLmDecoder decoder(*lmb.lm, sim.inventory);
          run(decoder);
        }
        lr.report = ComputePerReport(pairs);
        lr.lenient = ComputeLenientReport(pairs);
        cell_pairs.insert(cell_pairs.end(), pairs.begin(), pairs.end());
        cr.languages.push_back(std::move(lr));
      }
      cr.pooled = ComputePerReport(cell_pairs);
      cr.pooled_lenient = ComputeLenientReport(cell_pairs);
      all_pairs[c].insert(all_pairs[c].end(), cell_pairs.begin(), cell_pairs.end());

      if (cell.scenario == Scenario::kCross) {
        for (const auto &[phone, st] : cr.pooled.per_phone) {
          if (st.occurrences == 0) continue;
          int n = 0;
          for (const SyntheticLanguage &L : sr.languages)
            n += L.inventory.Contains(phone);
          if (n == 0)
            throw Error(ErrorCode::kUnknownPhone,
                        "phone " + phone.canonical() + " is in no inventory");
          auto &acc = share[c][{n, phone}];
          acc.first += st.occurrences;
          acc.second += st.errors();
        }
      }

      if (write) {
        for (const LanguageResult &lr : cr.languages) {
          cell_out[c] << seed << '\t' << lr.language << '\t'
                      << FormatWeight(lr.lm_weight) << '\t' << Pct(lr.report.per)
                      << '\t' << Pct(lr.lenient.per) << '\t' << lr.report.n_ref
                      << '\t' << lr.report.counts.subs << '\t'
                      << lr.report.counts.dels << '\t' << lr.report.counts.inss
                      << '\n';
          for (const auto &[w, per] : lr.sweep)
            sweep_out << seed << '\t' << cell.name << '\t' << lr.language << '\t'
                      << FormatWeight(w) << '\t' << Pct(per) << '\n';
        }
        cell_out[c].flush();
        sweep_out.flush();
      }
      if (log != nullptr)
        *log << "seed " << seed << " cell " << cell.name << " PER "
             << Pct(cr.pooled.per) << "%" << std::endl;
      sr.cells.push_back(std::move(cr));
    }
    result.seeds.push_back(std::move(sr));
  }

  if (write) {
    const fs::path dir(out_dir);
    std::ofstream grid = OpenOut(dir / "grid.tsv");
    grid << "seed\tlanguage";
    for (const CellSpec &c : cfg.cells) grid << '\t' << c.name << '\t' << c.name << ".lambda";
    grid << '\n';
    for (const SeedResult &sr : result.seeds) {
      for (size_t k = 0; k < sr.languages.size(); ++k) {
        grid << sr.seed << '\t' << sr.languages[k].inventory.language_id;
        for (const CellSeedResult &cr : sr.cells)
          grid << '\t' << Pct(cr.languages[k].report.per) << '\t'
               << FormatWeight(cr.languages[k].lm_weight);
        grid << '\n';
      }
    }

    std::vector<std::pair<std::string, PerReport>> strict, lenient;
    for (size_t c = 0; c < cfg.cells.size(); ++c) {
      strict.emplace_back(cfg.cells[c].name, ComputePerReport(all_pairs[c]));
      lenient.emplace_back(cfg.cells[c].name, ComputeLenientReport(all_pairs[c]));
    }
    std::ofstream summary = OpenOut(dir / "summary.tsv");
    WriteSummaryTsv(summary, strict);
    std::ofstream len = OpenOut(dir / "lenient.tsv");
    WriteSummaryTsv(len, lenient);

    for (size_t c = 0; c < cfg.cells.size(); ++c) {
      if (cfg.cells[c].scenario != Scenario::kCross) continue;
      std::vector<PhoneShareRow> rows;
      for (const auto &[key, acc] : share[c])
        rows.push_back({key.second, key.first, acc.first,
                        static_cast<double>(acc.second) /
                            static_cast<double>(acc.first)});
      std::ofstream s = OpenOut(dir / ("share_" + cfg.cells[c].name + ".tsv"));
      WriteShareTsv(s, rows);
    }
  }
  return result;
}

}  // namespace phonotact
