/* C interface to the lukatree library.
 *
 * Objects are opaque handles created by *_create / *_parse functions and
 * released with the matching *_free. Every fallible call returns an
 * lt_status; on failure lt_last_error() describes the problem for the
 * calling thread. Strings returned through char** out-parameters are owned
 * by the caller and released with lt_string_free().
 *
 * Letters are addressed by 0-based index; counts and tuples are arrays of
 * uint64_t with one entry per letter.
 */
#ifndef LUKATREE_LUKATREE_H
#define LUKATREE_LUKATREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LUKATREE_BUILDING_LIBRARY)
#    define LT_API __declspec(dllexport)
#  else
#    define LT_API __declspec(dllimport)
#  endif
#else
#  define LT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lt_status {
  LT_OK = 0,
  LT_ERR_DUPLICATE_LETTER = 1,
  LT_ERR_FIRST_DEGREE_NOT_MINUS_ONE = 2,
  LT_ERR_DEGREES_NOT_SORTED = 3,
  LT_ERR_DEGREE_BELOW_MINUS_ONE = 4,
  LT_ERR_ARITY_MISMATCH = 5,
  LT_ERR_NOT_A_VALID_WORD = 6,
  LT_ERR_NOT_A_PERMUTATION = 7,
  LT_ERR_TUPLE_NOT_VALID = 8,
  LT_ERR_DOMAIN_TOO_SMALL = 9,
  LT_ERR_LIMIT_EXCEEDED = 10,
  LT_ERR_EMPTY_SUPPORT = 11,
  LT_ERR_INFEASIBLE_PARITY = 12,
  LT_ERR_PARSE = 13,
  LT_ERR_INVALID_ARGUMENT = 14,
  LT_ERR_BITS_EXHAUSTED = 15,
  LT_ERR_INTERNAL = 99
} lt_status;

typedef enum lt_word_class {
  LT_WORD_LUKASIEWICZ = 0,
  LT_WORD_VALID_NOT_LUKASIEWICZ = 1,
  LT_WORD_INVALID = 2
} lt_word_class;

typedef enum lt_method { LT_METHOD_PERMUTATION = 0, LT_METHOD_DICHOTOMIC = 1 } lt_method;

typedef enum lt_format { LT_FORMAT_PAREN = 0, LT_FORMAT_DOT = 1, LT_FORMAT_LUKA = 2 } lt_format;

typedef struct lt_alphabet lt_alphabet;
typedef struct lt_bitsource lt_bitsource;
typedef struct lt_tree lt_tree;
typedef struct lt_word_list lt_word_list;

LT_API const char* lt_status_name(lt_status status);
LT_API const char* lt_last_error(void);
LT_API void lt_string_free(char* text);

/* Alphabets and tuples */
LT_API lt_status lt_alphabet_create(const char* letters, const int* degrees, size_t k,
                                    lt_alphabet** out);
/* "a:-1,b:0,c:1" */
LT_API lt_status lt_alphabet_parse(const char* text, lt_alphabet** out);
LT_API void lt_alphabet_free(lt_alphabet* alphabet);
LT_API size_t lt_alphabet_size(const lt_alphabet* alphabet);
LT_API lt_status lt_alphabet_to_string(const lt_alphabet* alphabet, char** out);
/* "3,1,2" into a caller buffer; *k receives the number of counts. */
LT_API lt_status lt_tuple_parse(const char* text, uint64_t* counts, size_t capacity, size_t* k);
LT_API lt_status lt_tuple_is_valid(const lt_alphabet* alphabet, const uint64_t* counts, size_t k,
                                   int* valid);

/* Words, given as strings of letter symbols */
LT_API lt_status lt_word_classify(const lt_alphabet* alphabet, const char* word,
                                  lt_word_class* out);
/* Writes min(|w|, capacity) prefix sums; *length receives |w|. */
LT_API lt_status lt_word_path_heights(const lt_alphabet* alphabet, const char* word,
                                      int64_t* heights, size_t capacity, size_t* length);
LT_API lt_status lt_word_rotation_index(const lt_alphabet* alphabet, const char* word,
                                        size_t* index);
LT_API lt_status lt_word_to_lukasiewicz(const lt_alphabet* alphabet, const char* word,
                                        char** out);
LT_API lt_status lt_word_count_lukasiewicz_rotations(const lt_alphabet* alphabet,
                                                     const char* word, size_t* count);
/* permutation holds the images of 1..n */
LT_API lt_status lt_permutation_to_valid_word(const lt_alphabet* alphabet,
                                              const uint64_t* counts, size_t k,
                                              const uint32_t* permutation, size_t n, char** out);

/* Random bits */
LT_API lt_status lt_bitsource_create(uint64_t seed, lt_bitsource** out);
LT_API void lt_bitsource_free(lt_bitsource* source);
LT_API uint64_t lt_bitsource_bits_consumed(const lt_bitsource* source);
LT_API lt_status lt_bitsource_next_bit(lt_bitsource* source, int* bit);
LT_API lt_status lt_uniform_int(lt_bitsource* source, uint64_t m, uint64_t* out);
/* Writes the images of a uniform permutation of 1..n into out[0..n). */
LT_API lt_status lt_fisher_yates(lt_bitsource* source, uint32_t* out, size_t n);
/* 0-based index drawn with probability weights[i] / sum(weights). */
LT_API lt_status lt_dichotomic_draw(lt_bitsource* source, const uint64_t* weights, size_t k,
                                    size_t* index);
LT_API lt_status lt_tuple_to_valid_word(lt_bitsource* source, const lt_alphabet* alphabet,
                                        const uint64_t* counts, size_t k, char** out);

/* Trees */
LT_API lt_status lt_sample_tree(lt_bitsource* source, const lt_alphabet* alphabet,
                                const uint64_t* counts, size_t k, lt_method method,
                                lt_tree** out);
/* The word must be a Lukasiewicz word. */
LT_API lt_status lt_tree_from_word(const lt_alphabet* alphabet, const char* word, lt_tree** out);
LT_API void lt_tree_free(lt_tree* tree);
LT_API size_t lt_tree_size(const lt_tree* tree);
LT_API uint64_t lt_tree_height(const lt_tree* tree);
/* Writes one count per letter; capacity must be at least the alphabet size. */
LT_API lt_status lt_tree_degree_census(const lt_tree* tree, uint64_t* counts, size_t capacity);
LT_API lt_status lt_tree_serialize(const lt_tree* tree, lt_format format, char** out);

/* Exact counting; results are decimal strings. */
LT_API lt_status lt_count_trees(const lt_alphabet* alphabet, const uint64_t* counts, size_t k,
                                char** out);
LT_API lt_status lt_count_valid_words(const lt_alphabet* alphabet, const uint64_t* counts,
                                      size_t k, char** out);
LT_API lt_status lt_enumerate_lukasiewicz(const lt_alphabet* alphabet, const uint64_t* counts,
                                          size_t k, size_t limit, lt_word_list** out);
LT_API size_t lt_word_list_size(const lt_word_list* list);
/* Borrowed pointer, valid until lt_word_list_free. NULL when out of range. */
LT_API const char* lt_word_list_get(const lt_word_list* list, size_t index);
LT_API void lt_word_list_free(lt_word_list* list);

/* Chi-square tests */
typedef struct lt_chi_square {
  double statistic;
  uint64_t degrees;
  double p_value;
} lt_chi_square;

/* support_size is a decimal string so that huge supports can be passed. */
LT_API lt_status lt_chi_square_uniformity(const uint64_t* observed, size_t cells,
                                          const char* support_size, lt_chi_square* out);
LT_API lt_status lt_chi_square_homogeneity(const uint64_t* first, const uint64_t* second,
                                           size_t cells, lt_chi_square* out);

/* Bit cost */
LT_API lt_status lt_mean_cost_closed_form(uint64_t k, uint64_t* numerator, uint64_t* denominator);
LT_API lt_status lt_measure_bit_cost(lt_bitsource* source, const uint64_t* weights, size_t k,
                                     uint64_t replicates, double* mean, double* stddev);

/* Experiments; results are CSV text. */
LT_API lt_status lt_motzkin_tuple(uint64_t n, uint64_t unary, uint64_t counts[3]);
LT_API lt_status lt_run_bitcost_scan(uint64_t k_max, uint64_t replicates, uint64_t seed,
                                     char** csv);

typedef struct lt_height_scan_config {
  uint64_t n;
  const double* unary_fractions;
  size_t unary_fraction_count;
  const double* leaf_fractions;
  size_t leaf_fraction_count;
  uint64_t replicates;
  uint64_t seed;
  lt_method method;
  unsigned threads; /* 0 = hardware concurrency */
} lt_height_scan_config;

LT_API lt_status lt_run_height_scan(const lt_height_scan_config* config, char** csv);

#ifdef __cplusplus
}
#endif

#endif /* LUKATREE_LUKATREE_H */
