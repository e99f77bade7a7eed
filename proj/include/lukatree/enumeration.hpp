#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <vector>

#include "lukatree/alphabet.hpp"
#include "lukatree/words.hpp"

namespace lukatree {

using BigCount = boost::multiprecision::cpp_int;

// n! / (n_1! ... n_k!): the number of valid words with this occurrence
// vector. Throws ArityMismatch or TupleNotValid.
BigCount valid_word_count(const DegreeTuple& tuple, const TreeAlphabet& alphabet);

// (n-1)! / (n_1! ... n_k!): the number of planar trees (equivalently of
// Lukasiewicz words) with this degree partition.
BigCount tutte_count(const DegreeTuple& tuple, const TreeAlphabet& alphabet);

inline constexpr std::size_t kDefaultEnumerationLimit = 12;

// Every Lukasiewicz word of type `tuple`, in lexicographic order of letter
// indices. Backtracks over the remaining counts and prunes any prefix whose
// path would dip below zero early. Throws LimitExceeded when n > limit.
std::vector<LukasiewiczWord> enumerate_lukasiewicz(const DegreeTuple& tuple,
                                                   const TreeAlphabet& alphabet,
                                                   std::size_t limit = kDefaultEnumerationLimit);

struct ChiSquareResult {
  double statistic = 0.0;
  std::uint64_t degrees = 0;
  double p_value = 1.0;
};

// Upper tail P(X >= statistic) for X ~ chi-square(degrees).
double chi_square_tail(double statistic, std::uint64_t degrees);

// Pearson goodness of fit against the uniform law on a support of
// `support_size` cells. `observed` lists the counts of the cells that were
// hit; cells never observed count as zero. Throws EmptySupport when the
// support has fewer than two cells, InvalidArgument when more cells were
// observed than exist or nothing was observed.
ChiSquareResult chi_square_uniformity(std::span<const std::uint64_t> observed,
                                      const BigCount& support_size);

// Two-sample Pearson homogeneity test on aligned count vectors. Cells empty
// in both samples are dropped.
ChiSquareResult chi_square_homogeneity(std::span<const std::uint64_t> first,
                                       std::span<const std::uint64_t> second);

}  // namespace lukatree
