#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lukatree {

// Letters are addressed by their 0-based position in the alphabet.
using Letter = std::uint32_t;

// An ordered alphabet (a_1, ..., a_k) together with the degree offset f.
// A letter of degree d labels nodes with d + 1 children; f(a_1) = -1 and f
// is non-decreasing. Immutable once built.
class TreeAlphabet {
 public:
  // Validates and builds. Throws Error with DuplicateLetter,
  // FirstDegreeNotMinusOne, DegreesNotSorted or DegreeBelowMinusOne, and
  // InvalidArgument for empty or mismatched lists.
  static TreeAlphabet make(std::vector<char> letters, std::vector<int> degrees);

  // Parses "a:-1,b:0,c:1".
  static TreeAlphabet parse(std::string_view text);

  static TreeAlphabet motzkin();  // a:-1,b:0,c:1
  static TreeAlphabet binary();   // a:-1,c:1

  std::size_t size() const noexcept { return letters_.size(); }
  char symbol(Letter letter) const { return letters_.at(letter); }
  int degree(Letter letter) const { return degrees_.at(letter); }
  // Number of children of a node labelled with `letter`.
  std::uint32_t arity(Letter letter) const {
    return static_cast<std::uint32_t>(degrees_.at(letter) + 1);
  }

  std::optional<Letter> find(char symbol) const noexcept;

  std::span<const char> letters() const noexcept { return letters_; }
  std::span<const int> degrees() const noexcept { return degrees_; }

  // Inverse of parse().
  std::string to_string() const;

  bool operator==(const TreeAlphabet& other) const {
    return letters_ == other.letters_ && degrees_ == other.degrees_;
  }

 private:
  TreeAlphabet(std::vector<char> letters, std::vector<int> degrees);

  std::vector<char> letters_;
  std::vector<int> degrees_;
  std::array<std::int32_t, 256> lookup_;
};

// Occurrence counts (n_1, ..., n_k), one per letter.
class DegreeTuple {
 public:
  DegreeTuple() = default;
  explicit DegreeTuple(std::vector<std::uint64_t> counts);

  // Parses "3,1,2".
  static DegreeTuple parse(std::string_view text);

  std::size_t size() const noexcept { return counts_.size(); }
  std::uint64_t operator[](std::size_t i) const { return counts_.at(i); }
  std::span<const std::uint64_t> counts() const noexcept { return counts_; }
  // n = sum of the counts.
  std::uint64_t total() const noexcept { return total_; }

  std::string to_string() const;

  bool operator==(const DegreeTuple& other) const { return counts_ == other.counts_; }

 private:
  std::vector<std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

// True iff sum_i n_i * f(a_i) == -1. Throws ArityMismatch when the tuple
// length differs from the alphabet size.
bool is_f_valid(const DegreeTuple& tuple, const TreeAlphabet& alphabet);

// Throws ArityMismatch or TupleNotValid unless the tuple is f-valid.
void require_f_valid(const DegreeTuple& tuple, const TreeAlphabet& alphabet);

}  // namespace lukatree
