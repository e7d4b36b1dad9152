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

// wolofspell: command-line front end.
//
//   wolofspell check [FILE]        correct text from FILE or stdin
//   wolofspell suggest WORD        ranked candidates for one word
//   wolofspell eval CORPUS         metrics over a labeled corpus
//   wolofspell lexicon-stats       lexicon size and grapheme classes
//
// Exit status: 0 success, 1 I/O or configuration error, 2 malformed data
// file (lexicon, corpus, rule or cost table).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "wolofspell/alphabet.h"
#include "wolofspell/errors.h"
#include "wolofspell/eval.h"
#include "wolofspell/pipeline.h"
#include "wolofspell/suggest.h"
#include "wolofspell/utf8.h"

#ifndef WOLOFSPELL_DEFAULT_LEXICON
#define WOLOFSPELL_DEFAULT_LEXICON "data/lexicon_sample.txt"
#endif

namespace {

using namespace wolofspell;

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitMalformed = 2;

struct Config {
  std::string lexicon_path = WOLOFSPELL_DEFAULT_LEXICON;
  std::string costs_path;
  std::string translit_path;
  std::string exclude_path;
  std::size_t k = 10;
  std::optional<Cost> max_cost;
  std::string format = "text";
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fills every setting not given by flag or environment from a TOML/INI
// style `key = value` file.
void apply_config_file(const std::string& path, CLI::App& app, Config& cfg) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const CLI::ParseError& e) {
    throw ConfigError(path + ": " + e.what());
  }
  for (const auto& item : items) {
    if (item.inputs.empty()) continue;
    const std::string& value = item.inputs.front();
    const std::string name = item.name;
    auto unset = [&](const char* flag) { return app.get_option(flag)->count() == 0; };
    try {
      if (name == "lexicon") {
        if (unset("--lexicon")) cfg.lexicon_path = value;
      } else if (name == "costs") {
        if (unset("--costs")) cfg.costs_path = value;
      } else if (name == "translit") {
        if (unset("--translit")) cfg.translit_path = value;
      } else if (name == "exclude") {
        if (unset("--exclude")) cfg.exclude_path = value;
      } else if (name == "k") {
        if (unset("-k")) cfg.k = std::stoul(value);
      } else if (name == "max-cost" || name == "max_cost") {
        if (unset("--max-cost")) cfg.max_cost = static_cast<Cost>(std::stoul(value));
      } else if (name == "format") {
        if (unset("--format")) cfg.format = value;
      } else {
        throw ConfigError(path + ": unknown key '" + name + "'");
      }
    } catch (const std::logic_error&) {
      throw ConfigError(path + ": bad value for '" + name + "'");
    }
  }
  if (cfg.k == 0) throw ConfigError(path + ": k must be at least 1");
  if (cfg.format != "text" && cfg.format != "structured")
    throw ConfigError(path + ": format must be text or structured");
}

SpellChecker make_checker(const Config& cfg) {
  TrieDict lexicon = TrieDict::load(cfg.lexicon_path);
  CostModel costs = cfg.costs_path.empty() ? CostModel() : CostModel::load(cfg.costs_path);
  RuleSet rules = cfg.translit_path.empty() ? RuleSet::standard()
                                            : RuleSet::load(cfg.translit_path);
  ExclusionList exclusions =
      cfg.exclude_path.empty() ? ExclusionList() : ExclusionList::load(cfg.exclude_path);
  CheckerOptions options;
  options.k = cfg.k;
  options.max_cost = cfg.max_cost;
  return SpellChecker(std::move(lexicon), std::move(costs), std::move(rules), options,
                      std::move(exclusions));
}

nlohmann::json word_json(const WordResult& r, std::size_t line) {
  nlohmann::json j;
  j["line"] = line;
  j["surface"] = r.original.surface;
  if (r.original.position != Token::kDropped) j["position"] = r.original.position;
  j["status"] = std::string(to_string(r.status));
  if (r.flagged_by) j["flagged_by"] = std::string(to_string(*r.flagged_by));
  if (!r.verdict.valid) {
    auto& v = j["violations"] = nlohmann::json::array();
    for (const auto& violation : r.verdict.violations)
      v.push_back({{"rule", std::string(rule_name(violation.rule))},
                   {"index", violation.index}});
  }
  if (r.flagged_by) j["transformed"] = r.transformed;
  if (r.corrected) j["corrected"] = *r.corrected;
  if (r.suggestions) {
    auto& s = j["suggestions"] = nlohmann::json::array();
    for (const auto& item : r.suggestions->items)
      s.push_back({{"word", item.word}, {"cost", item.cost}});
  }
  return j;
}

int cmd_check(const Config& cfg, const std::string& input_path, bool quiet) {
  SpellChecker checker = make_checker(cfg);
  std::ifstream file;
  std::istream* in = &std::cin;
  if (!input_path.empty() && input_path != "-") {
    file.open(input_path, std::ios::binary);
    if (!file) throw IoError("cannot open input: " + input_path);
    in = &file;
  }
  const bool structured = cfg.format == "structured";
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(*in, line)) {
    ++line_no;
    CheckReport report = checker.check_text(line);
    if (structured) {
      for (const auto& r : report.results) std::cout << word_json(r, line_no).dump() << "\n";
      continue;
    }
    std::cout << report.corrected_text << "\n";
    if (quiet) continue;
    for (const auto& r : report.results) {
      if (r.status == WordStatus::kCorrect) continue;
      std::cerr << line_no << ":" << r.original.surface << "\t" << to_string(r.status);
      if (r.flagged_by) std::cerr << "\t" << to_string(*r.flagged_by);
      if (r.corrected) std::cerr << "\t" << *r.corrected << "\t" << r.suggestions->items.front().cost;
      std::cerr << "\n";
    }
  }
  if (in->bad()) throw IoError("error reading input");
  return kExitOk;
}

int cmd_suggest(const Config& cfg, const std::string& word, bool transliterate) {
  SpellChecker checker = make_checker(cfg);
  std::string query = normalize(word);
  if (transliterate) query = checker.translit().transform(std::string_view(query));
  SuggestOptions options;
  options.k = cfg.k;
  options.max_cost = cfg.max_cost;
  SuggestionList list = suggest(query, checker.lexicon(), checker.costs(), options);
  if (cfg.format == "structured") {
    nlohmann::json j;
    j["query"] = list.query;
    j["suggestions"] = nlohmann::json::array();
    for (const auto& s : list.items)
      j["suggestions"].push_back({{"word", s.word}, {"cost", s.cost}});
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& s : list.items) std::cout << s.word << "\t" << s.cost << "\n";
  }
  return kExitOk;
}

int cmd_eval(const Config& cfg, const std::string& corpus_path) {
  auto corpus = load_corpus(corpus_path);
  SpellChecker checker = make_checker(cfg);
  EvalReport report = evaluate(corpus, checker);
  std::cout << (cfg.format == "structured" ? format_structured(report)
                                           : format_table(report));
  return kExitOk;
}

int cmd_lexicon_stats(const Config& cfg) {
  TrieDict lexicon = TrieDict::load(cfg.lexicon_path);
  std::map<GraphemeClass, std::size_t> classes;
  std::size_t unsegmentable = 0;
  std::size_t graphemes = 0;
  for (const auto& w : lexicon.words()) {
    auto parse = Alphabet::standard().try_segment(to_scalars(w));
    if (!parse) {
      ++unsegmentable;
      continue;
    }
    for (const auto& g : *parse) {
      ++classes[g.cls];
      ++graphemes;
    }
  }
  if (cfg.format == "structured") {
    std::cout << "words=" << lexicon.word_count() << "\n"
              << "trie_nodes=" << lexicon.node_count() << "\n"
              << "unsegmentable_words=" << unsegmentable << "\n";
    for (GraphemeClass c : kAllGraphemeClasses)
      std::cout << "class." << to_string(c) << "=" << classes[c] << "\n";
    return kExitOk;
  }
  std::cout << "words:               " << lexicon.word_count() << "\n"
            << "trie nodes:          " << lexicon.node_count() << "\n"
            << "unsegmentable words: " << unsegmentable << "\n\n"
            << "grapheme class   count  share\n";
  for (GraphemeClass c : kAllGraphemeClasses) {
    char buf[96];
    const double share = graphemes ? 100.0 * classes[c] / graphemes : 0.0;
    std::snprintf(buf, sizeof buf, "%-16s %-6zu %.2f%%\n",
                  std::string(to_string(c)).c_str(), classes[c], share);
    std::cout << buf;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wolof spelling detection and correction"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string config_path;
  app.add_option("--lexicon", cfg.lexicon_path, "Lexicon file, one word per line")
      ->envname("WOLOFSPELL_LEXICON");
  app.add_option("--costs", cfg.costs_path, "Substitution cost overrides (TSV)")
      ->envname("WOLOFSPELL_COSTS");
  app.add_option("--translit", cfg.translit_path, "Transliteration rules (TSV)")
      ->envname("WOLOFSPELL_TRANSLIT");
  app.add_option("--exclude", cfg.exclude_path, "Words to drop before checking")
      ->envname("WOLOFSPELL_EXCLUDE");
  app.add_option("-k", cfg.k, "Suggestion list depth")
      ->envname("WOLOFSPELL_K")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-cost", cfg.max_cost, "Upper bound on suggestion cost")
      ->envname("WOLOFSPELL_MAX_COST");
  app.add_option("--format", cfg.format, "Output format")
      ->envname("WOLOFSPELL_FORMAT")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_option("--config", config_path, "Config file (key = value)")
      ->envname("WOLOFSPELL_CONFIG");

  std::string input_path;
  bool quiet = false;
  auto* check = app.add_subcommand("check", "Detect and correct misspellings");
  check->add_option("input", input_path, "Input file (default: stdin)");
  check->add_flag("-q,--quiet", quiet, "No per-word diagnostics on stderr");

  std::string word;
  bool transliterate = false;
  auto* suggest_cmd = app.add_subcommand("suggest", "Rank corrections for one word");
  suggest_cmd->add_option("word", word, "Word to look up")->required();
  suggest_cmd->add_flag("--transliterate", transliterate,
                        "Rewrite French-influenced spellings first");

  std::string corpus_path;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate against a labeled corpus");
  eval_cmd->add_option("corpus", corpus_path, "Corpus TSV")->required();

  auto* stats_cmd = app.add_subcommand("lexicon-stats", "Describe the lexicon");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitIo;
  }

  try {
    if (!config_path.empty()) apply_config_file(config_path, app, cfg);
    if (*check) return cmd_check(cfg, input_path, quiet);
    if (*suggest_cmd) return cmd_suggest(cfg, word, transliterate);
    if (*eval_cmd) return cmd_eval(cfg, corpus_path);
    if (*stats_cmd) return cmd_lexicon_stats(cfg);
  } catch (const MalformedInput& e) {
    std::cerr << "wolofspell: malformed input: " << e.what() << "\n";
    return kExitMalformed;
  } catch (const std::exception& e) {
    std::cerr << "wolofspell: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
