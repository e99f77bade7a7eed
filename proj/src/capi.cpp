#include "lukatree/lukatree.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "lukatree/alphabet.hpp"
#include "lukatree/bitstream.hpp"
#include "lukatree/enumeration.hpp"
#include "lukatree/error.hpp"
#include "lukatree/experiments.hpp"
#include "lukatree/samplers.hpp"
#include "lukatree/tree.hpp"
#include "lukatree/words.hpp"

struct lt_alphabet {
  lukatree::TreeAlphabet value;
};

struct lt_bitsource {
  lukatree::SeededBitSource value;
};

struct lt_tree {
  lukatree::PlanarTree value;
};

struct lt_word_list {
  std::vector<std::string> words;
};

namespace {

using namespace lukatree;

thread_local std::string last_error;

lt_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateLetter: return LT_ERR_DUPLICATE_LETTER;
    case ErrorCode::FirstDegreeNotMinusOne: return LT_ERR_FIRST_DEGREE_NOT_MINUS_ONE;
    case ErrorCode::DegreesNotSorted: return LT_ERR_DEGREES_NOT_SORTED;
    case ErrorCode::DegreeBelowMinusOne: return LT_ERR_DEGREE_BELOW_MINUS_ONE;
    case ErrorCode::ArityMismatch: return LT_ERR_ARITY_MISMATCH;
    case ErrorCode::NotAValidWord: return LT_ERR_NOT_A_VALID_WORD;
    case ErrorCode::NotAPermutation: return LT_ERR_NOT_A_PERMUTATION;
    case ErrorCode::TupleNotValid: return LT_ERR_TUPLE_NOT_VALID;
    case ErrorCode::DomainTooSmall: return LT_ERR_DOMAIN_TOO_SMALL;
    case ErrorCode::LimitExceeded: return LT_ERR_LIMIT_EXCEEDED;
    case ErrorCode::EmptySupport: return LT_ERR_EMPTY_SUPPORT;
    case ErrorCode::InfeasibleParity: return LT_ERR_INFEASIBLE_PARITY;
    case ErrorCode::ParseError: return LT_ERR_PARSE;
    case ErrorCode::InvalidArgument: return LT_ERR_INVALID_ARGUMENT;
    case ErrorCode::BitsExhausted: return LT_ERR_BITS_EXHAUSTED;
  }
  return LT_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes.
template <typename Body>
lt_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return LT_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return LT_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return LT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return LT_ERR_INTERNAL;
  }
}

template <typename T>
void require(const T* pointer, const char* what) {
  if (pointer == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
}

char* copy_string(const std::string& text) {
  auto* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

DegreeTuple make_tuple(const uint64_t* counts, size_t k) {
  if (k > 0) require(counts, "counts");
  return DegreeTuple(std::vector<std::uint64_t>(counts, counts + k));
}

Method to_method(lt_method method) {
  switch (method) {
    case LT_METHOD_PERMUTATION: return Method::Permutation;
    case LT_METHOD_DICHOTOMIC: return Method::Dichotomic;
  }
  fail(ErrorCode::InvalidArgument, "unknown method");
}

}  // namespace

extern "C" {

const char* lt_status_name(lt_status status) {
  switch (status) {
    case LT_OK: return "OK";
    case LT_ERR_INTERNAL: return "Internal";
    default: return to_string(static_cast<ErrorCode>(status));
  }
}

const char* lt_last_error(void) { return last_error.c_str(); }

void lt_string_free(char* text) { std::free(text); }

lt_status lt_alphabet_create(const char* letters, const int* degrees, size_t k,
                             lt_alphabet** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    if (k > 0) {
      require(letters, "letters");
      require(degrees, "degrees");
    }
    auto alphabet = TreeAlphabet::make(std::vector<char>(letters, letters + k),
                                       std::vector<int>(degrees, degrees + k));
    *out = new lt_alphabet{std::move(alphabet)};
  });
}

lt_status lt_alphabet_parse(const char* text, lt_alphabet** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(text, "text");
    *out = new lt_alphabet{TreeAlphabet::parse(text)};
  });
}

void lt_alphabet_free(lt_alphabet* alphabet) { delete alphabet; }

size_t lt_alphabet_size(const lt_alphabet* alphabet) {
  return alphabet ? alphabet->value.size() : 0;
}

lt_status lt_alphabet_to_string(const lt_alphabet* alphabet, char** out) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(out, "out");
    *out = copy_string(alphabet->value.to_string());
  });
}

lt_status lt_tuple_parse(const char* text, uint64_t* counts, size_t capacity, size_t* k) {
  return guarded([&] {
    require(text, "text");
    require(k, "k");
    auto tuple = DegreeTuple::parse(text);
    *k = tuple.size();
    if (tuple.size() > capacity) fail(ErrorCode::InvalidArgument, "counts buffer too small");
    require(counts, "counts");
    std::copy(tuple.counts().begin(), tuple.counts().end(), counts);
  });
}

lt_status lt_tuple_is_valid(const lt_alphabet* alphabet, const uint64_t* counts, size_t k,
                            int* valid) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(valid, "valid");
    *valid = is_f_valid(make_tuple(counts, k), alphabet->value) ? 1 : 0;
  });
}

lt_status lt_word_classify(const lt_alphabet* alphabet, const char* word, lt_word_class* out) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(word, "word");
    require(out, "out");
    switch (classify(parse_word(word, alphabet->value), alphabet->value)) {
      case WordClass::Lukasiewicz: *out = LT_WORD_LUKASIEWICZ; break;
      case WordClass::ValidNotLukasiewicz: *out = LT_WORD_VALID_NOT_LUKASIEWICZ; break;
      case WordClass::Invalid: *out = LT_WORD_INVALID; break;
    }
  });
}

lt_status lt_word_path_heights(const lt_alphabet* alphabet, const char* word, int64_t* heights,
                               size_t capacity, size_t* length) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(word, "word");
    require(length, "length");
    auto path = path_heights(parse_word(word, alphabet->value), alphabet->value);
    *length = path.size();
    const size_t n = std::min(capacity, path.size());
    if (n > 0) require(heights, "heights");
    std::copy_n(path.begin(), n, heights);
  });
}

lt_status lt_word_rotation_index(const lt_alphabet* alphabet, const char* word, size_t* index) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(word, "word");
    require(index, "index");
    *index = rotation_index(parse_word(word, alphabet->value), alphabet->value);
  });
}

lt_status lt_word_to_lukasiewicz(const lt_alphabet* alphabet, const char* word, char** out) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(word, "word");
    require(out, "out");
    auto luka = to_lukasiewicz(parse_word(word, alphabet->value), alphabet->value);
    *out = copy_string(format_word(luka.letters(), alphabet->value));
  });
}

lt_status lt_word_count_lukasiewicz_rotations(const lt_alphabet* alphabet, const char* word,
                                              size_t* count) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(word, "word");
    require(count, "count");
    *count = rotations_that_are_lukasiewicz(parse_word(word, alphabet->value), alphabet->value);
  });
}

lt_status lt_permutation_to_valid_word(const lt_alphabet* alphabet, const uint64_t* counts,
                                       size_t k, const uint32_t* permutation, size_t n,
                                       char** out) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(out, "out");
    if (n > 0) require(permutation, "permutation");
    Permutation sigma(std::vector<std::uint32_t>(permutation, permutation + n));
    auto word = permutation_to_valid_word(sigma, make_tuple(counts, k), alphabet->value);
    *out = copy_string(format_word(word, alphabet->value));
  });
}

lt_status lt_bitsource_create(uint64_t seed, lt_bitsource** out) {
  return guarded([&] {
    require(out, "out");
    *out = new lt_bitsource{SeededBitSource(seed)};
  });
}

void lt_bitsource_free(lt_bitsource* source) { delete source; }

uint64_t lt_bitsource_bits_consumed(const lt_bitsource* source) {
  return source ? source->value.bits_consumed() : 0;
}

lt_status lt_bitsource_next_bit(lt_bitsource* source, int* bit) {
  return guarded([&] {
    require(source, "source");
    require(bit, "bit");
    *bit = source->value.next_bit() ? 1 : 0;
  });
}

lt_status lt_uniform_int(lt_bitsource* source, uint64_t m, uint64_t* out) {
  return guarded([&] {
    require(source, "source");
    require(out, "out");
    *out = uniform_int(source->value, m);
  });
}

lt_status lt_fisher_yates(lt_bitsource* source, uint32_t* out, size_t n) {
  return guarded([&] {
    require(source, "source");
    require(out, "out");
    auto sigma = fisher_yates(source->value, n);
    std::copy(sigma.images().begin(), sigma.images().end(), out);
  });
}

lt_status lt_dichotomic_draw(lt_bitsource* source, const uint64_t* weights, size_t k,
                             size_t* index) {
  return guarded([&] {
    require(source, "source");
    require(index, "index");
    if (k > 0) require(weights, "weights");
    *index = dichotomic_draw(source->value,
                             DiscreteWeights(std::vector<std::uint64_t>(weights, weights + k)));
  });
}

lt_status lt_tuple_to_valid_word(lt_bitsource* source, const lt_alphabet* alphabet,
                                 const uint64_t* counts, size_t k, char** out) {
  return guarded([&] {
    require(source, "source");
    require(alphabet, "alphabet");
    require(out, "out");
    auto word = tuple_to_valid_word(source->value, make_tuple(counts, k), alphabet->value);
    *out = copy_string(format_word(word, alphabet->value));
  });
}

lt_status lt_sample_tree(lt_bitsource* source, const lt_alphabet* alphabet,
                         const uint64_t* counts, size_t k, lt_method method, lt_tree** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(source, "source");
    require(alphabet, "alphabet");
    auto tree = sample_tree(source->value, make_tuple(counts, k), alphabet->value,
                            to_method(method));
    *out = new lt_tree{std::move(tree)};
  });
}

lt_status lt_tree_from_word(const lt_alphabet* alphabet, const char* word, lt_tree** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(alphabet, "alphabet");
    require(word, "word");
    auto luka = LukasiewiczWord::certify(parse_word(word, alphabet->value), alphabet->value);
    *out = new lt_tree{word_to_tree(luka, alphabet->value)};
  });
}

void lt_tree_free(lt_tree* tree) { delete tree; }

size_t lt_tree_size(const lt_tree* tree) { return tree ? tree->value.size() : 0; }

uint64_t lt_tree_height(const lt_tree* tree) { return tree ? height(tree->value) : 0; }

lt_status lt_tree_degree_census(const lt_tree* tree, uint64_t* counts, size_t capacity) {
  return guarded([&] {
    require(tree, "tree");
    require(counts, "counts");
    auto census = degree_census(tree->value);
    if (capacity < census.size()) fail(ErrorCode::InvalidArgument, "counts buffer too small");
    std::copy(census.counts().begin(), census.counts().end(), counts);
  });
}

lt_status lt_tree_serialize(const lt_tree* tree, lt_format format, char** out) {
  return guarded([&] {
    require(tree, "tree");
    require(out, "out");
    TreeFormat f;
    switch (format) {
      case LT_FORMAT_PAREN: f = TreeFormat::Parenthesized; break;
      case LT_FORMAT_DOT: f = TreeFormat::Dot; break;
      case LT_FORMAT_LUKA: f = TreeFormat::Luka; break;
      default: fail(ErrorCode::InvalidArgument, "unknown format");
    }
    *out = copy_string(serialize(tree->value, f));
  });
}

lt_status lt_count_trees(const lt_alphabet* alphabet, const uint64_t* counts, size_t k,
                         char** out) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(out, "out");
    *out = copy_string(tutte_count(make_tuple(counts, k), alphabet->value).str());
  });
}

lt_status lt_count_valid_words(const lt_alphabet* alphabet, const uint64_t* counts, size_t k,
                               char** out) {
  return guarded([&] {
    require(alphabet, "alphabet");
    require(out, "out");
    *out = copy_string(valid_word_count(make_tuple(counts, k), alphabet->value).str());
  });
}

lt_status lt_enumerate_lukasiewicz(const lt_alphabet* alphabet, const uint64_t* counts, size_t k,
                                   size_t limit, lt_word_list** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    require(alphabet, "alphabet");
    auto words = enumerate_lukasiewicz(make_tuple(counts, k), alphabet->value, limit);
    auto list = std::make_unique<lt_word_list>();
    list->words.reserve(words.size());
    for (const auto& w : words) list->words.push_back(format_word(w.letters(), alphabet->value));
    *out = list.release();
  });
}

size_t lt_word_list_size(const lt_word_list* list) { return list ? list->words.size() : 0; }

const char* lt_word_list_get(const lt_word_list* list, size_t index) {
  if (list == nullptr || index >= list->words.size()) return nullptr;
  return list->words[index].c_str();
}

void lt_word_list_free(lt_word_list* list) { delete list; }

lt_status lt_chi_square_uniformity(const uint64_t* observed, size_t cells,
                                   const char* support_size, lt_chi_square* out) {
  return guarded([&] {
    require(support_size, "support_size");
    require(out, "out");
    if (cells > 0) require(observed, "observed");
    BigCount support;
    try {
      support = BigCount(support_size);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, std::string("bad support size '") + support_size + "'");
    }
    auto result = chi_square_uniformity(std::span<const std::uint64_t>(observed, cells), support);
    *out = {result.statistic, result.degrees, result.p_value};
  });
}

lt_status lt_chi_square_homogeneity(const uint64_t* first, const uint64_t* second, size_t cells,
                                    lt_chi_square* out) {
  return guarded([&] {
    require(out, "out");
    if (cells > 0) {
      require(first, "first");
      require(second, "second");
    }
    auto result = chi_square_homogeneity(std::span<const std::uint64_t>(first, cells),
                                         std::span<const std::uint64_t>(second, cells));
    *out = {result.statistic, result.degrees, result.p_value};
  });
}

lt_status lt_mean_cost_closed_form(uint64_t k, uint64_t* numerator, uint64_t* denominator) {
  return guarded([&] {
    require(numerator, "numerator");
    require(denominator, "denominator");
    auto cost = mean_cost_closed_form(k);
    *numerator = cost.numerator;
    *denominator = cost.denominator;
  });
}

lt_status lt_measure_bit_cost(lt_bitsource* source, const uint64_t* weights, size_t k,
                              uint64_t replicates, double* mean, double* stddev) {
  return guarded([&] {
    require(source, "source");
    require(mean, "mean");
    if (k > 0) require(weights, "weights");
    auto cost = measure_bit_cost(DiscreteWeights(std::vector<std::uint64_t>(weights, weights + k)),
                                 replicates, source->value);
    *mean = cost.mean;
    if (stddev) *stddev = cost.stddev;
  });
}

lt_status lt_motzkin_tuple(uint64_t n, uint64_t unary, uint64_t counts[3]) {
  return guarded([&] {
    require(counts, "counts");
    auto tuple = motzkin_tuple(n, unary);
    std::copy(tuple.counts().begin(), tuple.counts().end(), counts);
  });
}

lt_status lt_run_bitcost_scan(uint64_t k_max, uint64_t replicates, uint64_t seed, char** csv) {
  return guarded([&] {
    require(csv, "csv");
    *csv = copy_string(bitcost_csv(run_bitcost_scan(k_max, replicates, seed)));
  });
}

lt_status lt_run_height_scan(const lt_height_scan_config* config, char** csv) {
  return guarded([&] {
    require(config, "config");
    require(csv, "csv");
    HeightScanConfig cfg;
    cfg.n = config->n;
    if (config->unary_fraction_count > 0) require(config->unary_fractions, "unary_fractions");
    if (config->leaf_fraction_count > 0) require(config->leaf_fractions, "leaf_fractions");
    cfg.unary_fractions.assign(config->unary_fractions,
                               config->unary_fractions + config->unary_fraction_count);
    cfg.leaf_fractions.assign(config->leaf_fractions,
                              config->leaf_fractions + config->leaf_fraction_count);
    cfg.replicates = config->replicates;
    cfg.seed = config->seed;
    cfg.method = to_method(config->method);
    cfg.threads = config->threads;
    *csv = copy_string(height_scan_csv(run_height_scan(cfg)));
  });
}

}  // extern "C"
