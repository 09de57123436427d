// phonotact/tools/phonotact.cc

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

// Command-line front end. Exit status: 0 success, 1 usage error, 2 data
// error (reported with the offending file and line).

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "phonotact/arpa.h"
#include "phonotact/decoder.h"
#include "phonotact/error.h"
#include "phonotact/experiment.h"
#include "phonotact/ipa.h"
#include "phonotact/ngram.h"
#include "phonotact/posteriorgram.h"
#include "phonotact/scorer.h"
#include "phonotact/synth.h"
#include "phonotact/transcript.h"

namespace fs = std::filesystem;
using namespace phonotact;

namespace {

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

// Output stream that is stdout for "-" or an empty path.
class Output {
 public:
  explicit Output(const std::string &path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorCode::kIo, "cannot write " + path);
    }
  }
  std::ostream &get() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<TokenSeq> LoadCorpus(const std::string &path, bool words) {
  std::vector<TokenSeq> out;
  if (words) {
    for (TokenUtterance &u : ReadTokenCorpusFile(path))
      out.push_back(std::move(u.tokens));
  } else {
    for (const Utterance &u : ReadTranscriptFile(path, TranscriptMode::kRawIpa)) {
      TokenSeq s;
      for (const IpaPhone &p : u.phones) s.push_back(p.canonical());
      out.push_back(std::move(s));
    }
  }
  return out;
}

PhoneInventory LoadInventory(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  PhoneInventory inv;
  inv.language_id = fs::path(path).stem().string();
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    try {
      for (const std::string &f : SplitWhitespace(line))
        inv.phones.insert(IpaPhone::Parse(f));
    } catch (const Error &e) {
      throw e.At(path, lineno);
    }
  }
  return inv;
}

// Language files (LANG v1) or plain phone lists.
PhoneInventory LoadAnyInventory(const std::string &path) {
  std::ifstream in(path);
  std::string first;
  if (in && std::getline(in, first) && first.rfind("LANG v1", 0) == 0)
    return ReadLanguageFile(path).inventory;
  return LoadInventory(path);
}

std::vector<std::string> PgramPaths(const std::vector<std::string> &files,
                                    const std::string &dir) {
  std::vector<std::string> out = files;
  if (!dir.empty()) {
    std::vector<std::string> found;
    for (const auto &e : fs::directory_iterator(dir))
      if (e.is_regular_file() && e.path().extension() == ".pgram")
        found.push_back(e.path().string());
    std::sort(found.begin(), found.end());
    out.insert(out.end(), found.begin(), found.end());
  }
  if (out.empty())
    throw CLI::ValidationError("decode", "no posteriorgrams given");
  return out;
}

std::vector<RefHyp> PairUp(const std::string &ref_path,
                           const std::string &hyp_path) {
  auto refs = ReadTranscriptFile(ref_path, TranscriptMode::kRawIpa);
  auto hyps = ReadTranscriptFile(hyp_path, TranscriptMode::kRawIpa);
  std::map<std::string, const PhoneSeq *> by_id;
  for (const Utterance &h : hyps) by_id[h.id] = &h.phones;
  std::vector<RefHyp> pairs;
  for (const Utterance &r : refs) {
    auto it = by_id.find(r.id);
    if (it == by_id.end())
      throw Error(ErrorCode::kMalformedTranscript,
                  "no hypothesis for utterance '" + r.id + "'", hyp_path);
    pairs.emplace_back(r.phones, *it->second);
    by_id.erase(it);
  }
  if (!by_id.empty())
    throw Error(ErrorCode::kMalformedTranscript,
                "hypothesis for unknown utterance '" + by_id.begin()->first + "'",
                hyp_path);
  return pairs;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"phonotact: phonotactic language models for phone recognition"};
  app.require_subcommand(1);

  // tokenize
  std::string in_path, out_path;
  auto *tok = app.add_subcommand("tokenize", "split raw IPA transcripts into phones");
  tok->add_option("--in", in_path, "transcripts '<id>\\t<IPA>'")->required();
  tok->add_option("--out", out_path, "output (default stdout)");

  // train-lm
  int order = 3;
  std::string smoothing = "witten-bell";
  bool words = false;
  auto *train = app.add_subcommand("train-lm", "train an n-gram LM, write ARPA");
  train->add_option("--order", order, "n-gram order")->check(CLI::Range(1, 6));
  train->add_option("--smoothing", smoothing, "mle | witten-bell");
  train->add_option("--in", in_path, "training transcripts")->required();
  train->add_option("--out", out_path, "ARPA output (default stdout)");
  train->add_flag("--words", words, "corpus holds whitespace-separated words");

  // perplexity
  std::string lm_path;
  auto *ppl = app.add_subcommand("perplexity", "perplexity of a corpus");
  ppl->add_option("--lm", lm_path, "ARPA file")->required();
  ppl->add_option("--in", in_path, "transcripts")->required();
  ppl->add_flag("--words", words, "corpus holds whitespace-separated words");

  // simulate
  std::string inventory_path, out_dir;
  AmProfile prof;
  auto *sim = app.add_subcommand("simulate", "simulate posteriorgrams");
  sim->add_option("--in", in_path, "reference transcripts")->required();
  sim->add_option("--inventory", inventory_path,
                  "AM phone inventory (phone list or language file)")
      ->required();
  sim->add_option("--out-dir", out_dir, "one <utt-id>.pgram per utterance")
      ->required();
  sim->add_option("--confusion", prof.confusion, "mass off the target phone");
  sim->add_option("--same-base-share", prof.same_base_share);
  sim->add_option("--mean-dur", prof.mean_dur, "mean frames per phone");
  sim->add_option("--segment-noise", prof.segment_noise);
  sim->add_option("--frame-noise", prof.frame_noise);
  sim->add_option("--sharpness", prof.sharpness);
  sim->add_option("--seed", prof.seed);

  // decode
  std::vector<std::string> pgram_files;
  std::string pgram_dir, lexicon_path;
  DecodeConfig dcfg;
  auto *dec = app.add_subcommand("decode", "decode posteriorgrams");
  dec->add_option("--lm", lm_path, "phone LM, or word LM with --lexicon")
      ->required();
  dec->add_option("--lexicon", lexicon_path, "word lexicon; selects word mode");
  dec->add_option("--pgram", pgram_files, "posteriorgram files");
  dec->add_option("--pgram-dir", pgram_dir, "directory of *.pgram files");
  dec->add_option("--lm-weight", dcfg.lm_weight);
  dec->add_option("--insertion-penalty", dcfg.insertion_penalty);
  dec->add_option("--beam", dcfg.beam);
  dec->add_option("--out", out_path, "hypotheses (default stdout)");

  // score
  std::string ref_path, hyp_path, system = "hyp";
  bool lenient = false;
  std::vector<std::string> share_inventories;
  std::string share_out;
  auto *score = app.add_subcommand("score", "phone error rate");
  score->add_option("--ref", ref_path)->required();
  score->add_option("--hyp", hyp_path)->required();
  score->add_flag("--lenient", lenient, "strip modifiers first");
  score->add_option("--name", system, "system name in the report");
  score->add_option("--inventories", share_inventories,
                    "inventories for the phone-share report");
  score->add_option("--share-out", share_out, "phone-share report output");
  score->add_option("--out", out_path, "summary (default stdout)");

  // gen-lang
  GenLanguageOptions gopt;
  int sample = 0, min_len = 4, max_len = 12;
  std::string corpus_out;
  auto *gen = app.add_subcommand("gen-lang", "generate a synthetic language");
  gen->add_option("--id", gopt.id);
  gen->add_option("--n-shared", gopt.n_shared);
  gen->add_option("--n-unique", gopt.n_unique);
  gen->add_option("--temperature", gopt.temperature);
  gen->add_option("--pool-size", gopt.pool_size);
  gen->add_option("--seed", gopt.seed);
  gen->add_option("--out", out_path, "language file (default stdout)");
  gen->add_option("--sample", sample, "also sample this many utterances");
  gen->add_option("--min-len", min_len);
  gen->add_option("--max-len", max_len);
  gen->add_option("--corpus-out", corpus_out, "sampled transcripts");

  // run-experiment
  std::string config_path;
  bool quiet = false;
  auto *exp = app.add_subcommand("run-experiment", "run a config-driven grid");
  exp->add_option("--config", config_path)->required();
  exp->add_option("--out-dir", out_dir, "results directory")->required();
  exp->add_flag("--quiet", quiet, "no progress output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsageError;
  }

  try {
    if (*tok) {
      auto utts = ReadTranscriptFile(in_path, TranscriptMode::kRawIpa);
      Output out(out_path);
      WriteTranscripts(out.get(), utts);
    } else if (*train) {
      Smoothing s = ParseSmoothing(smoothing);
      NGramModel m = TrainNGram(LoadCorpus(in_path, words), order, s);
      Output out(out_path);
      WriteArpa(m, out.get());
    } else if (*ppl) {
      NGramModel m = ReadArpaFile(lm_path);
      std::printf("%.6f\n", Perplexity(m, LoadCorpus(in_path, words)));
    } else if (*sim) {
      prof.inventory = LoadAnyInventory(inventory_path);
      fs::create_directories(out_dir);
      for (const Utterance &u :
           ReadTranscriptFile(in_path, TranscriptMode::kRawIpa)) {
        if (u.id.find('/') != std::string::npos)
          throw Error(ErrorCode::kMalformedTranscript,
                      "utterance id '" + u.id + "' contains '/'", in_path);
        WritePgramFile(Simulate(u.phones, prof, u.id),
                       (fs::path(out_dir) / (u.id + ".pgram")).string());
      }
    } else if (*dec) {
      NGramModel lm = ReadArpaFile(lm_path);
      std::vector<Utterance> hyps;
      std::optional<Lexicon> lex;
      if (!lexicon_path.empty()) {
        lex = ReadLexiconFile(lexicon_path);
        dcfg.mode = DecodeMode::kWordLm;
      }
      for (const std::string &p : PgramPaths(pgram_files, pgram_dir)) {
        Posteriorgram pg = ReadPgramFile(p);
        DecodeHypothesis h;
        try {
          h = lex ? DecodeWordLm(pg, lm, *lex, dcfg) : DecodePhoneLm(pg, lm, dcfg);
        } catch (const Error &e) {
          if (!e.where().empty()) throw;
          throw Error(e.code(), e.message(), p);
        }
        hyps.push_back({fs::path(p).stem().string(), std::move(h.phones)});
      }
      Output out(out_path);
      WriteTranscripts(out.get(), hyps);
    } else if (*score) {
      std::vector<RefHyp> pairs = PairUp(ref_path, hyp_path);
      PerReport rep = lenient ? ComputeLenientReport(pairs) : ComputePerReport(pairs);
      Output out(out_path);
      std::vector<std::pair<std::string, PerReport>> rows = {{system, rep}};
      WriteSummaryTsv(out.get(), rows);
      if (!share_out.empty()) {
        std::vector<PhoneInventory> invs;
        for (const std::string &p : share_inventories)
          invs.push_back(LoadAnyInventory(p));
        Output s(share_out);
        WriteShareTsv(s.get(), PhoneShareReport(rep.per_phone, invs));
      }
    } else if (*gen) {
      SyntheticLanguage lang = GenLanguage(gopt);
      {
        Output out(out_path);
        WriteLanguage(lang, out.get());
      }
      if (sample > 0) {
        Output c(corpus_out);
        WriteTranscripts(c.get(), SampleCorpus(lang, sample, min_len, max_len,
                                               gopt.seed, gopt.id + "_"));
      }
    } else if (*exp) {
      ExperimentConfig cfg = ParseConfigFile(config_path);
      if (ApplySeedOverride(&cfg) && !quiet)
        std::cerr << "seed overridden by PHONOTACT_SEED: " << cfg.seed << '\n';
      RunExperiment(cfg, out_dir, quiet ? nullptr : &std::cerr);
    }
  } catch (const CLI::ValidationError &e) {
    std::cerr << "phonotact: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error &e) {
    std::cerr << "phonotact: " << e.what() << '\n';
    return kDataError;
  } catch (const std::filesystem::filesystem_error &e) {
    std::cerr << "phonotact: " << e.what() << '\n';
    return kDataError;
  }
  return 0;
}
