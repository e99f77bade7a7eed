#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lukatree/alphabet.hpp"
#include "lukatree/samplers.hpp"

namespace lukatree {

// (leaves, unary, binary) = ((n-u+1)/2, u, (n-u-1)/2) over the Motzkin
// alphabet. Throws InfeasibleParity when n - u is even, InvalidArgument when
// n == 0 or u >= n.
DegreeTuple motzkin_tuple(std::uint64_t n, std::uint64_t unary);

// round(fraction * n), clamped to n - 1 and moved to the nearest feasible
// parity: decremented when n - u is even (incremented instead when u is 0).
std::uint64_t feasible_unary_count(std::uint64_t n, double fraction);

// Unary count for a tree with floor(leaf_fraction * n) leaves.
std::uint64_t unary_count_for_leaves(std::uint64_t n, double leaf_fraction);

// Heights of `replicates` independent uniform trees. Replicate r uses its own
// SeededBitSource(seed ^ r), so the result does not depend on `threads`
// (0 = hardware concurrency).
std::vector<std::uint64_t> sample_heights(const DegreeTuple& tuple, const TreeAlphabet& alphabet,
                                          std::uint64_t replicates, std::uint64_t seed,
                                          Method method = Method::Dichotomic,
                                          unsigned threads = 0);

struct HeightScanConfig {
  std::uint64_t n = 1000;
  // Rows by proportion of unary nodes, in [0, 1).
  std::vector<double> unary_fractions;
  // Extra rows by proportion of leaves, c = floor(fraction * n).
  std::vector<double> leaf_fractions;
  std::uint64_t replicates = 10000;
  std::uint64_t seed = 0;
  Method method = Method::Dichotomic;
  unsigned threads = 0;
};

struct ScanRow {
  double fraction = 0.0;  // requested unary fraction, or u / n for leaf rows
  std::uint64_t unary = 0;
  std::uint64_t leaves = 0;
  std::uint64_t n = 0;
  std::uint64_t replicates = 0;
  double mean_height = 0.0;
  double mean_height_over_sqrt_n = 0.0;
  double mean_norm = 0.0;  // mean of height * sqrt(leaves) / n
  double stddev = 0.0;     // sample standard deviation of height
};

ScanRow summarize_heights(double fraction, std::uint64_t n, std::uint64_t unary,
                          std::span<const std::uint64_t> heights);

// One row per unary fraction, then one per leaf fraction.
std::vector<ScanRow> run_height_scan(const HeightScanConfig& config);

// Header `fraction,u,c,n,replicates,mean_height,mean_height_over_sqrt_n,mean_norm,stddev`.
std::string height_scan_csv(std::span<const ScanRow> rows);

struct BitCostRow {
  std::uint64_t k = 0;
  std::uint64_t total = 0;  // k for unit weights, k + 1 with the first weight doubled
  std::uint64_t replicates = 0;
  double mean_bits = 0.0;
  double stddev = 0.0;
  double closed_form = 0.0;
  double bound = 0.0;  // 2 + log2(k)
  double ratio = 0.0;  // mean_bits / bound
};

// For every k in 2..k_max, measures dichotomic_draw on unit weights and on
// weights (2, 1, ..., 1). Throws DomainTooSmall for k_max < 2.
std::vector<BitCostRow> run_bitcost_scan(std::uint64_t k_max, std::uint64_t replicates,
                                         std::uint64_t seed);

// Header `k,total,replicates,mean_bits,stddev,closed_form,bound,ratio`.
std::string bitcost_csv(std::span<const BitCostRow> rows);

}  // namespace lukatree
