// Copyright 2026 The wolofspell Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wolofspell/eval.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "wolofspell/distance.h"
#include "wolofspell/errors.h"
#include "wolofspell/preprocess.h"

namespace wolofspell {
namespace {

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

double harmonic(double a, double b) {
  return (a <= 0 || b <= 0) ? 0.0 : 2.0 / (1.0 / a + 1.0 / b);
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    cols.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return cols;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(std::istream& in, const std::string& source_name) {
  std::vector<CorpusEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line).front() == '#') continue;
    auto cols = split_tabs(line);
    for (auto& c : cols) c = trim(c);
    if (cols.size() == 3 && cols[2].empty()) cols.pop_back();
    if (cols.size() > 3)
      throw MalformedCorpus(source_name, line_no, "too many columns");
    if (cols.size() < 2)
      throw MalformedCorpus(source_name, line_no, "expected word<TAB>label[<TAB>gold]");
    CorpusEntry e;
    e.word = normalize(cols[0]);
    if (e.word.empty()) throw MalformedCorpus(source_name, line_no, "empty word");
    const std::string label = normalize(cols[1]);
    if (label == "valid") {
      e.label = Label::kValid;
      if (cols.size() == 3)
        throw MalformedCorpus(source_name, line_no, "valid row must not carry a gold form");
    } else if (label == "invalid") {
      e.label = Label::kInvalid;
      if (cols.size() != 3)
        throw MalformedCorpus(source_name, line_no, "invalid row is missing its gold form");
      e.gold = normalize(cols[2]);
      if (*e.gold == e.word)
        throw MalformedCorpus(source_name, line_no, "gold form equals the misspelling");
    } else {
      throw MalformedCorpus(source_name, line_no, "unknown label '" + cols[1] + "'");
    }
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus: " + path.string());
  return parse_corpus(in, path.string());
}

DetectionMetrics detection_metrics(const ConfusionCounts& c) {
  DetectionMetrics m;
  m.r_c = ratio(c.tp, c.tp + c.fn);
  m.r_i = ratio(c.tn, c.tn + c.fp);
  m.p_c = ratio(c.tp, c.tp + c.fp);
  m.p_i = ratio(c.tn, c.tn + c.fn);
  m.fm_c = harmonic(m.r_c, m.p_c);
  m.fm_i = harmonic(m.r_i, m.p_i);
  m.pa = ratio(c.tp + c.tn, c.total());
  return m;
}

Histogram histogram(std::span<const CorpusEntry> corpus,
                    const std::function<bool(const CorpusEntry&)>& select) {
  Histogram h;
  std::size_t total = 0;
  for (const auto& e : corpus) {
    if (e.label != Label::kInvalid || !e.gold || !select(e)) continue;
    ++h[plain_edit_distance(e.word, *e.gold)].count;
    ++total;
  }
  for (auto& [d, bucket] : h) bucket.percentage = 100.0 * ratio(bucket.count, total);
  return h;
}

bool EvalReport::operator==(const EvalReport& o) const {
  auto same = [](const DetectionMetrics& a, const DetectionMetrics& b) {
    return a.r_c == b.r_c && a.r_i == b.r_i && a.p_c == b.p_c && a.p_i == b.p_i &&
           a.fm_c == b.fm_c && a.fm_i == b.fm_i && a.pa == b.pa;
  };
  return counts == o.counts && same(detection, o.detection) &&
         invalid_total == o.invalid_total && top1_hits == o.top1_hits && sa == o.sa &&
         mrr == o.mrr && dropped == o.dropped && histogram_all == o.histogram_all &&
         histogram_wrong == o.histogram_wrong;
}

EvalReport evaluate(std::span<const CorpusEntry> corpus, const SpellChecker& checker) {
  if (corpus.empty()) throw EmptyCorpus();
  EvalReport report;
  double reciprocal_sum = 0;
  std::vector<CorpusEntry> invalid_seen;
  std::vector<CorpusEntry> wrong;
  for (const auto& entry : corpus) {
    WordResult r = checker.check_word(entry.word);
    if (r.status == WordStatus::kDropped) {
      ++report.dropped;
      continue;
    }
    const bool accepted = r.status == WordStatus::kCorrect;
    if (entry.label == Label::kValid) {
      ++(accepted ? report.counts.tp : report.counts.fn);
      continue;
    }
    ++(accepted ? report.counts.fp : report.counts.tn);
    invalid_seen.push_back(entry);
    std::size_t rank = 0;
    if (r.suggestions && entry.gold) rank = r.suggestions->rank_of(normalize(*entry.gold));
    if (rank == 1) ++report.top1_hits;
    if (rank > 0) reciprocal_sum += 1.0 / static_cast<double>(rank);
    if (rank != 1) wrong.push_back(entry);
  }
  auto all = [](const CorpusEntry&) { return true; };
  report.invalid_total = invalid_seen.size();
  report.detection = detection_metrics(report.counts);
  report.sa = ratio(report.top1_hits, report.invalid_total);
  report.mrr = report.invalid_total == 0
                   ? 0.0
                   : reciprocal_sum / static_cast<double>(report.invalid_total);
  report.histogram_all = histogram(invalid_seen, all);
  report.histogram_wrong = histogram(wrong, all);
  return report;
}

std::string format_table(const EvalReport& r) {
  const auto& c = r.counts;
  const auto& m = r.detection;
  std::ostringstream out;
  auto frac = [](std::size_t a, std::size_t b) {
    return std::to_string(a) + "/" + std::to_string(b);
  };
  auto row = [&](const char* name, const std::string& ratio_text, double value) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-7s %-12s %s%%\n", name, ratio_text.c_str(),
                  fixed(100.0 * value, 2).c_str());
    out << buf;
  };
  out << "Metric  Ratio        Percentage\n";
  row("R_c", frac(c.tp, c.tp + c.fn), m.r_c);
  row("R_i", frac(c.tn, c.tn + c.fp), m.r_i);
  row("P_c", frac(c.tp, c.tp + c.fp), m.p_c);
  row("P_i", frac(c.tn, c.tn + c.fn), m.p_i);
  row("Fm_c", fixed(m.fm_c, 4), m.fm_c);
  row("Fm_i", fixed(m.fm_i, 4), m.fm_i);
  row("PA", frac(c.tp + c.tn, c.total()), m.pa);
  row("SA", frac(r.top1_hits, r.invalid_total), r.sa);
  row("MRR", fixed(r.mrr, 4), r.mrr);
  out << "\nTP=" << c.tp << " FP=" << c.fp << " FN=" << c.fn << " TN=" << c.tn
      << " dropped=" << r.dropped << "\n";
  auto print_hist = [&](const char* title, const Histogram& h) {
    out << "\n" << title << "\nEdit distance  Count  Percentage\n";
    std::size_t total = 0;
    for (const auto& [d, b] : h) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "%-14zu %-6zu %s%%\n", d, b.count,
                    fixed(b.percentage, 2).c_str());
      out << buf;
      total += b.count;
    }
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-14s %-6zu %s%%\n", "Total", total,
                  total ? "100.00" : "0.00");
    out << buf;
  };
  print_hist("Edit distance of misspellings against their corrections", r.histogram_all);
  print_hist("Edit distance of misspellings with wrong suggestions", r.histogram_wrong);
  return out.str();
}

std::string format_structured(const EvalReport& r) {
  std::ostringstream out;
  out << "tp=" << r.counts.tp << "\n"
      << "fp=" << r.counts.fp << "\n"
      << "fn=" << r.counts.fn << "\n"
      << "tn=" << r.counts.tn << "\n"
      << "r_c=" << shortest(r.detection.r_c) << "\n"
      << "r_i=" << shortest(r.detection.r_i) << "\n"
      << "p_c=" << shortest(r.detection.p_c) << "\n"
      << "p_i=" << shortest(r.detection.p_i) << "\n"
      << "fm_c=" << shortest(r.detection.fm_c) << "\n"
      << "fm_i=" << shortest(r.detection.fm_i) << "\n"
      << "pa=" << shortest(r.detection.pa) << "\n"
      << "sa=" << shortest(r.sa) << "\n"
      << "mrr=" << shortest(r.mrr) << "\n"
      << "invalid_total=" << r.invalid_total << "\n"
      << "top1_hits=" << r.top1_hits << "\n"
      << "dropped=" << r.dropped << "\n";
  auto hist = [&](const char* name, const Histogram& h) {
    for (const auto& [d, b] : h) {
      out << name << "." << d << ".count=" << b.count << "\n";
      out << name << "." << d << ".percentage=" << shortest(b.percentage) << "\n";
    }
  };
  hist("histogram_all", r.histogram_all);
  hist("histogram_wrong", r.histogram_wrong);
  return out.str();
}

EvalReport parse_structured(std::string_view text) {
  EvalReport r;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& what) {
    throw MalformedInput("structured report", line_no, what);
  };
  auto to_size = [&](std::string_view v) {
    std::size_t out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
      fail("bad integer '" + std::string(v) + "'");
    return out;
  };
  auto to_double = [&](std::string_view v) {
    double out = 0;
    auto res = std::from_chars(v.data(), v.data() + v.size(), out);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size())
      fail("bad number '" + std::string(v) + "'");
    return out;
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key=value");
    const std::string key = line.substr(0, eq);
    const std::string_view value = std::string_view(line).substr(eq + 1);
    if (key == "tp") r.counts.tp = to_size(value);
    else if (key == "fp") r.counts.fp = to_size(value);
    else if (key == "fn") r.counts.fn = to_size(value);
    else if (key == "tn") r.counts.tn = to_size(value);
    else if (key == "r_c") r.detection.r_c = to_double(value);
    else if (key == "r_i") r.detection.r_i = to_double(value);
    else if (key == "p_c") r.detection.p_c = to_double(value);
    else if (key == "p_i") r.detection.p_i = to_double(value);
    else if (key == "fm_c") r.detection.fm_c = to_double(value);
    else if (key == "fm_i") r.detection.fm_i = to_double(value);
    else if (key == "pa") r.detection.pa = to_double(value);
    else if (key == "sa") r.sa = to_double(value);
    else if (key == "mrr") r.mrr = to_double(value);
    else if (key == "invalid_total") r.invalid_total = to_size(value);
    else if (key == "top1_hits") r.top1_hits = to_size(value);
    else if (key == "dropped") r.dropped = to_size(value);
    else {
      // histogram_<name>.<distance>.<field>
      const auto dot1 = key.find('.');
      const auto dot2 = key.find('.', dot1 == std::string::npos ? 0 : dot1 + 1);
      if (dot1 == std::string::npos || dot2 == std::string::npos) fail("unknown key " + key);
      const std::string name = key.substr(0, dot1);
      Histogram* h = name == "histogram_all"     ? &r.histogram_all
                     : name == "histogram_wrong" ? &r.histogram_wrong
                                                 : nullptr;
      if (h == nullptr) fail("unknown key " + key);
      const std::size_t d = to_size(std::string_view(key).substr(dot1 + 1, dot2 - dot1 - 1));
      const std::string field = key.substr(dot2 + 1);
      if (field == "count") (*h)[d].count = to_size(value);
      else if (field == "percentage") (*h)[d].percentage = to_double(value);
      else fail("unknown key " + key);
    }
  }
  return r;
}

}  // namespace wolofspell
