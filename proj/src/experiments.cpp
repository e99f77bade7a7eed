#include "lukatree/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "lukatree/error.hpp"
#include "lukatree/tree.hpp"

namespace lukatree {

DegreeTuple motzkin_tuple(std::uint64_t n, std::uint64_t unary) {
  if (n == 0 || unary >= n) {
    fail(ErrorCode::InvalidArgument, "need n >= 1 and 0 <= u <= n - 1");
  }
  if ((n - unary) % 2 == 0) {
    fail(ErrorCode::InfeasibleParity, "n - u = " + std::to_string(n - unary) +
                                          " is even; a Motzkin tree needs 2b + 1");
  }
  const std::uint64_t rest = n - unary;
  return DegreeTuple({(rest + 1) / 2, unary, (rest - 1) / 2});
}

std::uint64_t feasible_unary_count(std::uint64_t n, double fraction) {
  if (n == 0 || !(fraction >= 0.0 && fraction < 1.0)) {
    fail(ErrorCode::InvalidArgument, "unary fraction must lie in [0, 1)");
  }
  auto u = static_cast<std::uint64_t>(std::llround(fraction * static_cast<double>(n)));
  u = std::min(u, n - 1);
  if ((n - u) % 2 == 0) u = u > 0 ? u - 1 : 1;
  return u;
}

std::uint64_t unary_count_for_leaves(std::uint64_t n, double leaf_fraction) {
  const auto leaves =
      static_cast<std::uint64_t>(std::floor(leaf_fraction * static_cast<double>(n)));
  if (leaves == 0 || 2 * leaves > n + 1) {
    fail(ErrorCode::InvalidArgument, "leaf fraction gives an impossible leaf count");
  }
  return n + 1 - 2 * leaves;
}

std::vector<std::uint64_t> sample_heights(const DegreeTuple& tuple, const TreeAlphabet& alphabet,
                                          std::uint64_t replicates, std::uint64_t seed,
                                          Method method, unsigned threads) {
  require_f_valid(tuple, alphabet);
  std::vector<std::uint64_t> heights(replicates);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(replicates, 1)));

  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t r = begin; r < end; ++r) {
      SeededBitSource source(seed ^ r);
      heights[r] = height(sample_tree(source, tuple, alphabet, method));
    }
  };
  if (threads <= 1) {
    work(0, replicates);
    return heights;
  }
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (replicates + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t begin = std::min(replicates, t * chunk);
      const std::uint64_t end = std::min(replicates, begin + chunk);
      pool.emplace_back(work, begin, end);
    }
  }  // joined here, before heights is returned
  return heights;
}

ScanRow summarize_heights(double fraction, std::uint64_t n, std::uint64_t unary,
                          std::span<const std::uint64_t> heights) {
  ScanRow row;
  row.fraction = fraction;
  row.unary = unary;
  row.leaves = (n - unary + 1) / 2;
  row.n = n;
  row.replicates = heights.size();
  if (heights.empty()) return row;
  double sum = 0.0;
  for (auto h : heights) sum += static_cast<double>(h);
  const double mean = sum / static_cast<double>(heights.size());
  double squares = 0.0;
  for (auto h : heights) squares += (static_cast<double>(h) - mean) * (static_cast<double>(h) - mean);
  const double dn = static_cast<double>(n);
  row.mean_height = mean;
  row.mean_height_over_sqrt_n = mean / std::sqrt(dn);
  row.mean_norm = mean * std::sqrt(static_cast<double>(row.leaves)) / dn;
  row.stddev = heights.size() > 1 ? std::sqrt(squares / static_cast<double>(heights.size() - 1)) : 0.0;
  return row;
}

std::vector<ScanRow> run_height_scan(const HeightScanConfig& config) {
  if (config.replicates == 0) fail(ErrorCode::InvalidArgument, "replicates must be at least 1");
  const auto alphabet = TreeAlphabet::motzkin();
  std::vector<ScanRow> rows;
  auto run_row = [&](double fraction, std::uint64_t unary) {
    const auto tuple = motzkin_tuple(config.n, unary);
    const auto heights = sample_heights(tuple, alphabet, config.replicates, config.seed,
                                        config.method, config.threads);
    rows.push_back(summarize_heights(fraction, config.n, unary, heights));
  };
  for (double p : config.unary_fractions) run_row(p, feasible_unary_count(config.n, p));
  for (double q : config.leaf_fractions) {
    const auto unary = unary_count_for_leaves(config.n, q);
    run_row(static_cast<double>(unary) / static_cast<double>(config.n), unary);
  }
  return rows;
}

namespace {

std::string fixed(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

}  // namespace

std::string height_scan_csv(std::span<const ScanRow> rows) {
  std::string out = "fraction,u,c,n,replicates,mean_height,mean_height_over_sqrt_n,mean_norm,stddev\n";
  for (const auto& r : rows) {
    out += fixed(r.fraction) + ',' + std::to_string(r.unary) + ',' + std::to_string(r.leaves) +
           ',' + std::to_string(r.n) + ',' + std::to_string(r.replicates) + ',' +
           fixed(r.mean_height) + ',' + fixed(r.mean_height_over_sqrt_n) + ',' +
           fixed(r.mean_norm) + ',' + fixed(r.stddev) + '\n';
  }
  return out;
}

std::vector<BitCostRow> run_bitcost_scan(std::uint64_t k_max, std::uint64_t replicates,
                                         std::uint64_t seed) {
  if (k_max < 2) fail(ErrorCode::DomainTooSmall, "k_max must be at least 2");
  if (replicates == 0) fail(ErrorCode::InvalidArgument, "replicates must be at least 1");
  std::vector<BitCostRow> rows;
  for (std::uint64_t k = 2; k <= k_max; ++k) {
    const double closed_form = mean_cost_closed_form(k).value();
    const double bound = 2.0 + std::log2(static_cast<double>(k));
    for (int extra = 0; extra <= 1; ++extra) {
      std::vector<std::uint64_t> weights(k, 1);
      weights[0] += static_cast<std::uint64_t>(extra);
      SeededBitSource source(seed ^ (2 * k + static_cast<std::uint64_t>(extra)));
      const auto cost = measure_bit_cost(DiscreteWeights(std::move(weights)), replicates, source);
      BitCostRow row;
      row.k = k;
      row.total = k + static_cast<std::uint64_t>(extra);
      row.replicates = replicates;
      row.mean_bits = cost.mean;
      row.stddev = cost.stddev;
      row.closed_form = closed_form;
      row.bound = bound;
      row.ratio = cost.mean / bound;
      rows.push_back(row);
    }
  }
  return rows;
}

std::string bitcost_csv(std::span<const BitCostRow> rows) {
  std::string out = "k,total,replicates,mean_bits,stddev,closed_form,bound,ratio\n";
  for (const auto& r : rows) {
    out += std::to_string(r.k) + ',' + std::to_string(r.total) + ',' +
           std::to_string(r.replicates) + ',' + fixed(r.mean_bits) + ',' + fixed(r.stddev) + ',' +
           fixed(r.closed_form) + ',' + fixed(r.bound) + ',' + fixed(r.ratio) + '\n';
  }
  return out;
}

}  // namespace lukatree
