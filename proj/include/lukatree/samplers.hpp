#pragma once

#include <cstdint>
#include <vector>

#include "lukatree/alphabet.hpp"
#include "lukatree/bitstream.hpp"
#include "lukatree/tree.hpp"
#include "lukatree/words.hpp"

namespace lukatree {

// Integer weights (n_1, ..., n_k) with total n >= 1, read as the
// distribution P(i) = n_i / n. Cumulative sums are kept up to date under
// decrement().
class DiscreteWeights {
 public:
  explicit DiscreteWeights(std::vector<std::uint64_t> weights);

  std::size_t size() const noexcept { return weights_.size(); }
  std::uint64_t total() const noexcept { return cumulative_.back(); }
  std::uint64_t weight(std::size_t i) const { return weights_.at(i); }
  // cumulative()[i] = n_1 + ... + n_i, with cumulative()[0] = 0.
  std::span<const std::uint64_t> cumulative() const noexcept { return cumulative_; }

  // Removes one unit from weight i. Throws InvalidArgument if it is zero.
  void decrement(std::size_t i);

 private:
  std::vector<std::uint64_t> weights_;
  std::vector<std::uint64_t> cumulative_;
};

// Draws index i (0-based) with probability exactly n_i / n.
//
// Start from the interval [0, n). Each fair bit keeps its lower half (0) or
// upper half (1). Stop as soon as the interval lies inside one cumulative
// segment [n_1 + ... + n_{i-1}, n_1 + ... + n_i). Endpoints are exact
// dyadic rationals; nothing is rounded. A single-part distribution costs no
// bits.
std::size_t dichotomic_draw(BitSource& source, const DiscreteWeights& weights);

// Fills the word left to right, drawing each letter from the remaining
// counts. Uniform over the valid words with occurrence vector `tuple`.
// Throws ArityMismatch or TupleNotValid.
Word tuple_to_valid_word(BitSource& source, const DegreeTuple& tuple,
                         const TreeAlphabet& alphabet);

enum class Method {
  Permutation,  // Fisher-Yates, then the block layout
  Dichotomic,   // tuple_to_valid_word
};

// Uniform planar tree with degree partition `tuple`: a random valid word is
// rotated to its Lukasiewicz conjugate and decoded. Throws ArityMismatch or
// TupleNotValid.
PlanarTree sample_tree(BitSource& source, const DegreeTuple& tuple, const TreeAlphabet& alphabet,
                       Method method = Method::Dichotomic);

// Same as sample_tree but stops at the Lukasiewicz word.
LukasiewiczWord sample_lukasiewicz(BitSource& source, const DegreeTuple& tuple,
                                   const TreeAlphabet& alphabet,
                                   Method method = Method::Dichotomic);

struct Rational {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;

  double value() const noexcept {
    return static_cast<double>(numerator) / static_cast<double>(denominator);
  }
  bool operator==(const Rational&) const = default;
};

// floor(log2(k-1)) + 1 + k / 2^floor(log2(k-1)), reduced. DomainTooSmall
// for k < 2.
Rational mean_cost_closed_form(std::uint64_t k);

// Whether mean_cost_closed_form(k) <= 2 + log2(k). Decided without
// rounding error: equality holds exactly when k is a power of two, and for
// other k the gap is far wider than double precision.
bool closed_form_within_bound(std::uint64_t k);

struct CostEstimate {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation of bits per draw
  std::uint64_t replicates = 0;

  double standard_error() const noexcept;
};

// Monte Carlo estimate of bits consumed per dichotomic_draw.
CostEstimate measure_bit_cost(const DiscreteWeights& weights, std::uint64_t replicates,
                              BitSource& source);

}  // namespace lukatree
