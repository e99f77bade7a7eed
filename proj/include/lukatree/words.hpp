#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lukatree/alphabet.hpp"

namespace lukatree {

class BitSource;
class PlanarTree;

using Word = std::vector<Letter>;

// Maps each symbol through the alphabet. Throws ParseError on a symbol the
// alphabet does not contain.
Word parse_word(std::string_view text, const TreeAlphabet& alphabet);
std::string format_word(std::span<const Letter> word, const TreeAlphabet& alphabet);

// Prefix sums s_i = f(w_1) + ... + f(w_i), one per position.
std::vector<std::int64_t> path_heights(std::span<const Letter> word, const TreeAlphabet& alphabet);

enum class WordClass { Lukasiewicz, ValidNotLukasiewicz, Invalid };

const char* to_string(WordClass cls) noexcept;

// Single pass. Invalid iff the total differs from -1; Lukasiewicz iff
// additionally every proper prefix sum is non-negative.
WordClass classify(std::span<const Letter> word, const TreeAlphabet& alphabet);

// A word certified to satisfy the Lukasiewicz conditions. The only ways to
// obtain one are certify() and the library operations that produce them.
class LukasiewiczWord {
 public:
  // Throws NotAValidWord unless classify() returns Lukasiewicz.
  static LukasiewiczWord certify(Word word, const TreeAlphabet& alphabet);

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  bool operator==(const LukasiewiczWord& other) const = default;
  auto operator<=>(const LukasiewiczWord& other) const = default;

 private:
  explicit LukasiewiczWord(Word letters) : letters_(std::move(letters)) {}
  friend LukasiewiczWord to_lukasiewicz(std::span<const Letter>, const TreeAlphabet&);
  friend LukasiewiczWord tree_to_word(const PlanarTree&);
  friend std::vector<LukasiewiczWord> enumerate_lukasiewicz(const DegreeTuple&,
                                                            const TreeAlphabet&, std::size_t);

  Word letters_;
};

// 1-based rotation point: the smallest l minimising s_l. Rotating the word
// to w_{l+1}..w_n w_1..w_l yields its unique Lukasiewicz conjugate. Throws
// NotAValidWord for invalid (or empty) words.
std::size_t rotation_index(std::span<const Letter> word, const TreeAlphabet& alphabet);

// The Lukasiewicz conjugate of a valid word, built into a fresh array.
LukasiewiczWord to_lukasiewicz(std::span<const Letter> word, const TreeAlphabet& alphabet);

// Tests every circular rotation. Quadratic; meant as a check on the cyclic
// lemma, which says the answer is always 1.
std::size_t rotations_that_are_lukasiewicz(std::span<const Letter> word,
                                           const TreeAlphabet& alphabet);

// A permutation of 1..n, stored as its sequence of images.
class Permutation {
 public:
  Permutation() = default;
  // Throws NotAPermutation unless `images` is a bijection onto 1..n.
  explicit Permutation(std::vector<std::uint32_t> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return images_.size(); }
  std::uint32_t operator[](std::size_t i) const { return images_[i]; }
  std::span<const std::uint32_t> images() const noexcept { return images_; }

  bool operator==(const Permutation& other) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<std::uint32_t> images, Unchecked) : images_(std::move(images)) {}
  friend Permutation fisher_yates(BitSource&, std::size_t);

  std::vector<std::uint32_t> images_;
};

// Writes the n_i copies of a_i, block after block, into the slots named by
// consecutive entries of the permutation. The result has occurrence vector
// exactly `tuple`. Throws ArityMismatch, NotAPermutation (length differs
// from n) or TupleNotValid.
Word permutation_to_valid_word(const Permutation& permutation, const DegreeTuple& tuple,
                               const TreeAlphabet& alphabet);

}  // namespace lukatree
