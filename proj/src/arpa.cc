// phonotact/arpa.cc

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

#include "phonotact/arpa.h"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>

#include "phonotact/error.h"
#include "phonotact/transcript.h"

namespace phonotact {

namespace {

std::string FormatValue(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

bool ParseDouble(const std::string &s, double *out) {
  if (s.empty()) return false;
  char *end = nullptr;
  errno = 0;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE) return false;
  *out = v;
  return true;
}

std::string Trim(const std::string &s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

class LineReader {
 public:
  LineReader(std::istream &in, std::string source)
      : in_(in), source_(std::move(source)) {}

  // Next line, trimmed. Returns false at end of input.
  bool Next(std::string *line) {
    std::string raw;
    if (!std::getline(in_, raw)) return false;
    ++lineno_;
    *line = Trim(raw);
    return true;
  }
  bool NextNonBlank(std::string *line) {
    while (Next(line)) {
      if (!line->empty()) return true;
    }
    return false;
  }
  Error Fail(const std::string &msg) const {
    return Error(ErrorCode::kMalformedArpa, msg,
                 source_ + ":" + std::to_string(lineno_));
  }

 private:
  std::istream &in_;
  std::string source_;
  size_t lineno_ = 0;
};

}  // namespace

double RoundToArpa(double v) { return std::strtod(FormatValue(v).c_str(), nullptr); }

void WriteArpa(const NGramModel &m, std::ostream &out) {
  out << "\\data\\\n";
  for (int n = 1; n <= m.order(); ++n)
    out << "ngram " << n << "=" << m.NumNGrams(n) << "\n";
  for (int n = 1; n <= m.order(); ++n) {
    out << "\n\\" << n << "-grams:\n";
    for (const auto &[key, e] : m.SortedNGrams(n)) {
      out << FormatValue(e.logprob) << '\t';
      for (uint8_t i = 0; i < key.len; ++i)
        out << (i ? " " : "") << m.vocab().Token(key.ids[i]);
      if (e.has_backoff) out << '\t' << FormatValue(e.backoff);
      out << '\n';
    }
  }
  out << "\n\\end\\\n";
}

void WriteArpaFile(const NGramModel &m, const std::string &path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  WriteArpa(m, out);
  if (!out) throw Error(ErrorCode::kIo, "error writing " + path);
}

NGramModel ReadArpa(std::istream &in, const std::string &source) {
  LineReader reader(in, source);
  std::string line;
  bool found = false;
  while (reader.Next(&line)) {
    if (line == "\\data\\") {
      found = true;
      break;
    }
  }
  if (!found) throw reader.Fail("missing \\data\\ header");

  std::vector<size_t> declared;
  while (true) {
    if (!reader.NextNonBlank(&line)) throw reader.Fail("truncated header");
    if (line.rfind("ngram ", 0) != 0) break;
    size_t eq = line.find('=');
    if (eq == std::string::npos) throw reader.Fail("bad count line: " + line);
    std::string n_str = Trim(line.substr(6, eq - 6));
    std::string c_str = Trim(line.substr(eq + 1));
    char *end = nullptr;
    long n = std::strtol(n_str.c_str(), &end, 10);
    if (n_str.empty() || *end != '\0' ||
        n != static_cast<long>(declared.size()) + 1)
      throw reader.Fail("expected count for order " +
                        std::to_string(declared.size() + 1));
    unsigned long long c = std::strtoull(c_str.c_str(), &end, 10);
    if (c_str.empty() || *end != '\0' || c_str[0] == '-')
      throw reader.Fail("bad n-gram count: " + c_str);
    declared.push_back(static_cast<size_t>(c));
  }
  if (declared.empty()) throw reader.Fail("no ngram counts declared");
  if (declared.size() > static_cast<size_t>(NGramModel::kMaxOrder))
    throw reader.Fail("order " + std::to_string(declared.size()) +
                      " exceeds the supported maximum");

  const int order = static_cast<int>(declared.size());
  // Vocabulary comes from the unigram section, so entries are buffered.
  Vocabulary vocab;
  std::vector<std::vector<std::pair<std::vector<TokenId>, NGramEntry>>>
      sections(order);
  for (int n = 1; n <= order; ++n) {
    std::string header = "\\" + std::to_string(n) + "-grams:";
    if (line != header)
      throw reader.Fail("expected " + header + ", got '" + line + "'");
    size_t seen = 0;
    bool more = false;
    while ((more = reader.NextNonBlank(&line))) {
      if (line[0] == '\\') break;
      std::vector<std::string> f = SplitWhitespace(line);
      if (f.size() != static_cast<size_t>(n) + 1 &&
          f.size() != static_cast<size_t>(n) + 2)
        throw reader.Fail("wrong number of fields in " + std::to_string(n) +
                          "-gram line");
      NGramEntry e;
      if (!ParseDouble(f[0], &e.logprob))
        throw reader.Fail("bad log probability '" + f[0] + "'");
      if (f.size() == static_cast<size_t>(n) + 2) {
        if (!ParseDouble(f.back(), &e.backoff))
          throw reader.Fail("bad backoff weight '" + f.back() + "'");
        e.has_backoff = true;
      }
      std::vector<TokenId> ids;
      for (int i = 1; i <= n; ++i) {
        if (n == 1) {
          ids.push_back(vocab.Add(f[i]));
        } else {
          auto id = vocab.Find(f[i]);
          if (!id) throw reader.Fail("word '" + f[i] + "' is not a unigram");
          ids.push_back(*id);
        }
      }
      sections[n - 1].emplace_back(std::move(ids), e);
      ++seen;
    }
    if (seen != declared[n - 1])
      throw reader.Fail("\\" + std::to_string(n) + "-grams: declared " +
                        std::to_string(declared[n - 1]) + " entries, found " +
                        std::to_string(seen));
    if (!more) throw reader.Fail("missing \\end\\");
  }
  if (line != "\\end\\") throw reader.Fail("expected \\end\\, got '" + line + "'");

  NGramModel model(order, std::move(vocab), std::nullopt);
  for (int n = 1; n <= order; ++n) {
    for (const auto &[ids, e] : sections[n - 1]) {
      if (model.Find(ids) != nullptr)
        throw Error(ErrorCode::kMalformedArpa, "duplicate n-gram", source);
      model.Insert(ids, e);
    }
  }
  try {
    model.CheckNoOrphans();
  } catch (const Error &e) {
    throw Error(e.code(), e.message(), source);
  }
  return model;
}

NGramModel ReadArpaFile(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return ReadArpa(in, path);
}

}  // namespace phonotact
