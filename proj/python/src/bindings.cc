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

// Python bindings for the wolofspell core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "wolofspell/alphabet.h"
#include "wolofspell/distance.h"
#include "wolofspell/errors.h"
#include "wolofspell/eval.h"
#include "wolofspell/lexicon.h"
#include "wolofspell/pipeline.h"
#include "wolofspell/preprocess.h"
#include "wolofspell/rules.h"
#include "wolofspell/suggest.h"
#include "wolofspell/translit.h"
#include "wolofspell/utf8.h"

namespace py = pybind11;
using namespace wolofspell;

namespace {

py::list segment_py(const std::string& word) {
  py::list out;
  for (const auto& g : Alphabet::standard().segment(std::string_view(word)))
    out.append(py::make_tuple(to_utf8(g.text), std::string(to_string(g.cls))));
  return out;
}

py::dict verdict_py(const RuleVerdict& v) {
  py::list violations;
  for (const auto& x : v.violations)
    violations.append(py::make_tuple(std::string(rule_name(x.rule)), x.index));
  py::dict d;
  d["valid"] = v.valid;
  d["violations"] = violations;
  return d;
}

py::list suggestions_py(const SuggestionList& list) {
  py::list out;
  for (const auto& s : list.items) out.append(py::make_tuple(s.word, s.cost));
  return out;
}

py::dict word_result_py(const WordResult& r) {
  py::dict d;
  d["surface"] = r.original.surface;
  d["position"] = r.original.position == Token::kDropped ? py::object(py::none())
                                                          : py::cast(r.original.position);
  d["status"] = std::string(to_string(r.status));
  d["flagged_by"] = r.flagged_by ? py::cast(std::string(to_string(*r.flagged_by)))
                                 : py::object(py::none());
  d["verdict"] = verdict_py(r.verdict);
  d["transformed"] = r.transformed;
  d["corrected"] = r.corrected ? py::cast(*r.corrected) : py::object(py::none());
  d["suggestions"] = r.suggestions ? py::object(suggestions_py(*r.suggestions))
                                   : py::object(py::none());
  return d;
}

py::dict report_py(const EvalReport& r) {
  py::dict d;
  d["tp"] = r.counts.tp;
  d["fp"] = r.counts.fp;
  d["fn"] = r.counts.fn;
  d["tn"] = r.counts.tn;
  d["r_c"] = r.detection.r_c;
  d["r_i"] = r.detection.r_i;
  d["p_c"] = r.detection.p_c;
  d["p_i"] = r.detection.p_i;
  d["fm_c"] = r.detection.fm_c;
  d["fm_i"] = r.detection.fm_i;
  d["pa"] = r.detection.pa;
  d["sa"] = r.sa;
  d["mrr"] = r.mrr;
  d["invalid_total"] = r.invalid_total;
  d["top1_hits"] = r.top1_hits;
  d["dropped"] = r.dropped;
  auto hist = [](const Histogram& h) {
    py::dict out;
    for (const auto& [dist, b] : h) out[py::cast(dist)] = py::make_tuple(b.count, b.percentage);
    return out;
  };
  d["histogram_all"] = hist(r.histogram_all);
  d["histogram_wrong"] = hist(r.histogram_wrong);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Wolof spelling detection and correction";

  auto error = py::register_exception<Error>(m, "Error");
  py::register_exception<MalformedInput>(m, "MalformedInput", error.ptr());
  py::register_exception<IoError>(m, "IoError", error.ptr());
  py::register_exception<Unsegmentable>(m, "Unsegmentable", error.ptr());
  py::register_exception<EmptyLexicon>(m, "EmptyLexicon", error.ptr());

  m.def("normalize", py::overload_cast<std::string_view>(&normalize),
        "Lowercase NFC form of a string.");
  m.def("clean", &clean, "Punctuation to spaces, then normalize.");
  m.def("tokenize", [](const std::string& text) {
    std::vector<std::string> out;
    for (auto& t : tokenize(clean(text))) out.push_back(std::move(t.surface));
    return out;
  }, "Cleaned words of a text, digit-bearing words removed.");
  m.def("is_wolof_char", [](const std::string& c) {
    const auto s = to_scalars(c);
    if (s.size() != 1) throw py::value_error("expected a single character");
    return is_wolof_char(s[0]);
  });
  m.def("segment", &segment_py, py::arg("word"),
        "Greedy segmentation into (grapheme, class) pairs.");
  m.def("validate", [](const std::string& w) { return verdict_py(validate(std::string_view(w))); },
        py::arg("word"));
  m.def("transliterate",
        [](const std::string& w) { return RuleSet::standard().transform(std::string_view(w)); },
        py::arg("word"), "Rewrite French-influenced spellings with the built-in rules.");

  py::class_<CostModel>(m, "CostModel")
      .def(py::init<>())
      .def_static("unit", &CostModel::unit)
      .def_static("load", &CostModel::load, py::arg("path"))
      .def("substitute_cost", [](const CostModel& c, const std::string& a, const std::string& b) {
        const auto x = to_scalars(a), y = to_scalars(b);
        if (x.size() != 1 || y.size() != 1) throw py::value_error("expected single characters");
        return c.substitute_cost(x[0], y[0]);
      });

  m.def("wld",
        [](const std::string& a, const std::string& b, const CostModel& model) {
          return wld(std::string_view(a), std::string_view(b), model);
        },
        py::arg("a"), py::arg("b"), py::arg("model") = CostModel(),
        "Weighted edit distance.");
  m.def("edit_distance",
        [](const std::string& a, const std::string& b) {
          return plain_edit_distance(std::string_view(a), std::string_view(b));
        },
        py::arg("a"), py::arg("b"), "Unit-cost edit distance.");

  py::class_<TrieDict>(m, "Lexicon")
      .def(py::init([](const std::vector<std::string>& words) { return TrieDict::from_words(words); }),
           py::arg("words"))
      .def_static("load", &TrieDict::load, py::arg("path"))
      .def("__contains__", [](const TrieDict& t, const std::string& w) {
        return t.contains(std::string_view(w));
      })
      .def("__len__", &TrieDict::word_count)
      .def("words", &TrieDict::words)
      .def_property_readonly("node_count", &TrieDict::node_count)
      .def("suggest",
           [](const TrieDict& t, const std::string& q, std::size_t k,
              std::optional<Cost> max_cost, const CostModel& model) {
             return suggestions_py(suggest(q, t, model, {.k = k, .max_cost = max_cost}));
           },
           py::arg("query"), py::arg("k") = 10, py::arg("max_cost") = py::none(),
           py::arg("model") = CostModel(), "Up to k (word, cost) pairs, best first.");

  py::class_<SpellChecker>(m, "SpellChecker")
      .def(py::init([](const TrieDict& lexicon, std::size_t k, std::optional<Cost> max_cost,
                       std::vector<std::string> exclude) {
             return SpellChecker(lexicon, CostModel(), RuleSet::standard(),
                                 {.k = k, .max_cost = max_cost}, ExclusionList(exclude));
           }),
           py::arg("lexicon"), py::arg("k") = 10, py::arg("max_cost") = py::none(),
           py::arg("exclude") = std::vector<std::string>{})
      .def("check_word", [](const SpellChecker& c, const std::string& w) {
        return word_result_py(c.check_word(w));
      })
      .def("check_text",
           [](const SpellChecker& c, const std::string& text) {
             const CheckReport report = c.check_text(text);
             py::list words;
             for (const auto& r : report.results) words.append(word_result_py(r));
             return py::make_tuple(report.corrected_text, words);
           },
           "Returns (corrected_text, per-word results).")
      .def("correct", [](const SpellChecker& c, const std::string& text) {
        return c.check_text(text).corrected_text;
      })
      .def("evaluate", [](const SpellChecker& c, const std::filesystem::path& corpus) {
        return report_py(evaluate(load_corpus(corpus), c));
      }, py::arg("corpus_path"));
}
