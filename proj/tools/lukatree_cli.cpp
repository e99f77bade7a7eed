// Command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "lukatree/lukatree.h"

namespace {

// Domain failure: message already on stderr, exit status 1.
struct Failure {};

void check(lt_status status) {
  if (status != LT_OK) {
    std::cerr << "error: " << lt_status_name(status) << ": " << lt_last_error() << '\n';
    throw Failure{};
  }
}

// Comma-separated numbers; an empty string is an empty list.
bool split_fractions(const std::string& text, std::vector<double>& out) {
  out.clear();
  if (text.empty()) return true;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + end, value);
    if (ec != std::errc() || ptr != text.data() + end) return false;
    out.push_back(value);
    if (end == text.size()) return true;
    start = end + 1;
  }
}

const CLI::Validator kFractionList(
    [](std::string& text) {
      std::vector<double> ignored;
      return split_fractions(text, ignored) ? std::string() : "expected comma-separated numbers";
    },
    "LIST");

struct AlphabetDeleter {
  void operator()(lt_alphabet* p) const { lt_alphabet_free(p); }
};
struct SourceDeleter {
  void operator()(lt_bitsource* p) const { lt_bitsource_free(p); }
};
struct TreeDeleter {
  void operator()(lt_tree* p) const { lt_tree_free(p); }
};
struct WordListDeleter {
  void operator()(lt_word_list* p) const { lt_word_list_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { lt_string_free(p); }
};

using Alphabet = std::unique_ptr<lt_alphabet, AlphabetDeleter>;
using Source = std::unique_ptr<lt_bitsource, SourceDeleter>;
using Tree = std::unique_ptr<lt_tree, TreeDeleter>;
using WordList = std::unique_ptr<lt_word_list, WordListDeleter>;
using String = std::unique_ptr<char, StringDeleter>;

Alphabet load_alphabet(const std::string& text) {
  lt_alphabet* raw = nullptr;
  check(lt_alphabet_parse(text.c_str(), &raw));
  return Alphabet(raw);
}

std::vector<std::uint64_t> load_tuple(const std::string& text) {
  std::vector<std::uint64_t> counts(text.size() + 1);
  size_t k = 0;
  check(lt_tuple_parse(text.c_str(), counts.data(), counts.size(), &k));
  counts.resize(k);
  return counts;
}

String take(char* raw) { return String(raw); }

const std::map<std::string, lt_format> kFormats{
    {"paren", LT_FORMAT_PAREN}, {"dot", LT_FORMAT_DOT}, {"luka", LT_FORMAT_LUKA}};
const std::map<std::string, lt_method> kMethods{
    {"perm", LT_METHOD_PERMUTATION}, {"dicho", LT_METHOD_DICHOTOMIC}};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Uniform random planar trees with a prescribed degree partition"};
  app.require_subcommand(1);

  std::string alphabet_text = "a:-1,b:0,c:1";
  std::string tuple_text;
  std::string word;
  std::uint64_t seed = 0;
  lt_method method = LT_METHOD_DICHOTOMIC;
  lt_format format = LT_FORMAT_LUKA;

  auto add_alphabet = [&](CLI::App* sub) {
    sub->add_option("--alphabet", alphabet_text, "Tree alphabet as letter:degree pairs")
        ->capture_default_str();
  };

  auto* sample = app.add_subcommand("sample", "Draw uniform random trees");
  add_alphabet(sample);
  sample->add_option("--tuple", tuple_text, "Letter counts, e.g. 3,1,2")->required();
  sample->add_option("--method", method, "perm or dicho")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  std::uint64_t count = 1;
  sample->add_option("--count", count, "Number of trees")->capture_default_str();
  sample->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  bool count_bits = false;
  sample->add_flag("--count-bits", count_bits, "Append bits=<b> to each tree");
  sample->add_option("--format", format, "paren, dot or luka")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* check_cmd = app.add_subcommand("check", "Classify a word and print its path");
  add_alphabet(check_cmd);
  check_cmd->add_option("--word", word, "Word as a string of letters")->required();
  bool rotate = false;
  check_cmd->add_flag("--rotate", rotate, "Also print the Lukasiewicz rotation of a valid word");

  auto* count_cmd = app.add_subcommand("count", "Exact number of trees for a tuple");
  add_alphabet(count_cmd);
  count_cmd->add_option("--tuple", tuple_text, "Letter counts")->required();
  bool valid_words = false;
  count_cmd->add_flag("--valid-words", valid_words, "Count valid words instead of trees");

  auto* enumerate = app.add_subcommand("enumerate", "List every Lukasiewicz word of a tuple");
  add_alphabet(enumerate);
  enumerate->add_option("--tuple", tuple_text, "Letter counts")->required();
  std::size_t limit = 12;
  enumerate->add_option("--limit", limit, "Largest n to enumerate")->capture_default_str();

  auto* render = app.add_subcommand("render", "Print the tree of a Lukasiewicz word");
  add_alphabet(render);
  render->add_option("--word", word, "Lukasiewicz word")->required();
  render->add_option("--format", format, "paren, dot or luka")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));

  auto* bitcost = app.add_subcommand("bitcost", "CSV of mean dichotomic bit cost per k");
  std::uint64_t k_max = 64;
  std::uint64_t replicates = 10000;
  bitcost->add_option("--k-max", k_max, "Largest number of parts")->capture_default_str();
  bitcost->add_option("--replicates", replicates, "Draws per k")->capture_default_str();
  bitcost->add_option("--seed", seed, "PRNG seed")->capture_default_str();

  auto* scan = app.add_subcommand("height-scan", "CSV of Motzkin tree heights by unary fraction");
  std::uint64_t n = 1000;
  std::string fractions_text = "0,0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8,0.9";
  std::string leaf_fractions_text;
  unsigned threads = 0;
  scan->add_option("--n", n, "Tree size")->capture_default_str();
  scan->add_option("--fractions", fractions_text, "Unary proportions in [0,1), comma-separated")
      ->check(kFractionList)
      ->capture_default_str();
  scan->add_option("--leaf-fractions", leaf_fractions_text,
                   "Additional rows with floor(q*n) leaves")
      ->check(kFractionList);
  scan->add_option("--replicates", replicates, "Trees per row")->capture_default_str();
  scan->add_option("--seed", seed, "PRNG seed")->capture_default_str();
  scan->add_option("--method", method, "perm or dicho")
      ->transform(CLI::CheckedTransformer(kMethods, CLI::ignore_case));
  scan->add_option("--threads", threads, "Worker threads, 0 for all cores")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sample) {
      auto alphabet = load_alphabet(alphabet_text);
      auto counts = load_tuple(tuple_text);
      lt_bitsource* raw = nullptr;
      check(lt_bitsource_create(seed, &raw));
      Source source(raw);
      for (std::uint64_t i = 0; i < count; ++i) {
        const auto before = lt_bitsource_bits_consumed(source.get());
        lt_tree* tree_raw = nullptr;
        check(lt_sample_tree(source.get(), alphabet.get(), counts.data(), counts.size(), method,
                             &tree_raw));
        Tree tree(tree_raw);
        char* text = nullptr;
        check(lt_tree_serialize(tree.get(), format, &text));
        auto owned = take(text);
        std::string line = owned.get();
        if (!line.empty() && line.back() == '\n') line.pop_back();
        std::cout << line;
        if (count_bits) {
          std::cout << " bits=" << lt_bitsource_bits_consumed(source.get()) - before;
        }
        std::cout << '\n';
      }
    } else if (*check_cmd) {
      auto alphabet = load_alphabet(alphabet_text);
      lt_word_class cls{};
      check(lt_word_classify(alphabet.get(), word.c_str(), &cls));
      std::vector<std::int64_t> heights(word.size());
      size_t length = 0;
      check(lt_word_path_heights(alphabet.get(), word.c_str(), heights.data(), heights.size(),
                                 &length));
      switch (cls) {
        case LT_WORD_LUKASIEWICZ: std::cout << "lukasiewicz\n"; break;
        case LT_WORD_VALID_NOT_LUKASIEWICZ: std::cout << "valid,not-lukasiewicz\n"; break;
        case LT_WORD_INVALID: std::cout << "invalid\n"; break;
      }
      for (size_t i = 0; i < length; ++i) std::cout << (i ? "," : "") << heights[i];
      std::cout << '\n';
      if (rotate && cls != LT_WORD_INVALID) {
        char* text = nullptr;
        check(lt_word_to_lukasiewicz(alphabet.get(), word.c_str(), &text));
        std::cout << take(text).get() << '\n';
      }
    } else if (*count_cmd) {
      auto alphabet = load_alphabet(alphabet_text);
      auto counts = load_tuple(tuple_text);
      char* text = nullptr;
      check(valid_words
                ? lt_count_valid_words(alphabet.get(), counts.data(), counts.size(), &text)
                : lt_count_trees(alphabet.get(), counts.data(), counts.size(), &text));
      std::cout << take(text).get() << '\n';
    } else if (*enumerate) {
      auto alphabet = load_alphabet(alphabet_text);
      auto counts = load_tuple(tuple_text);
      lt_word_list* raw = nullptr;
      check(lt_enumerate_lukasiewicz(alphabet.get(), counts.data(), counts.size(), limit, &raw));
      WordList list(raw);
      for (size_t i = 0; i < lt_word_list_size(list.get()); ++i) {
        std::cout << lt_word_list_get(list.get(), i) << '\n';
      }
    } else if (*render) {
      auto alphabet = load_alphabet(alphabet_text);
      lt_tree* raw = nullptr;
      check(lt_tree_from_word(alphabet.get(), word.c_str(), &raw));
      Tree tree(raw);
      char* text = nullptr;
      check(lt_tree_serialize(tree.get(), format, &text));
      std::string out = take(text).get();
      std::cout << out;
      if (out.empty() || out.back() != '\n') std::cout << '\n';
    } else if (*bitcost) {
      char* csv = nullptr;
      check(lt_run_bitcost_scan(k_max, replicates, seed, &csv));
      std::cout << take(csv).get();
    } else if (*scan) {
      std::vector<double> fractions, leaf_fractions;
      split_fractions(fractions_text, fractions);
      split_fractions(leaf_fractions_text, leaf_fractions);
      lt_height_scan_config config{};
      config.n = n;
      config.unary_fractions = fractions.data();
      config.unary_fraction_count = fractions.size();
      config.leaf_fractions = leaf_fractions.data();
      config.leaf_fraction_count = leaf_fractions.size();
      config.replicates = replicates;
      config.seed = seed;
      config.method = method;
      config.threads = threads;
      char* csv = nullptr;
      check(lt_run_height_scan(&config, &csv));
      std::cout << take(csv).get();
    }
  } catch (const Failure&) {
    return 1;
  }
  return 0;
}
