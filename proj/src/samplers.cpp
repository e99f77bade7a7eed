#include "lukatree/samplers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "int128.hpp"
#include "lukatree/error.hpp"

namespace lukatree {

using detail::int128;
using detail::uint128;

DiscreteWeights::DiscreteWeights(std::vector<std::uint64_t> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) fail(ErrorCode::InvalidArgument, "weights must not be empty");
  cumulative_.reserve(weights_.size() + 1);
  cumulative_.push_back(0);
  for (auto w : weights_) {
    if (cumulative_.back() > (std::uint64_t{1} << 62) - w) {
      fail(ErrorCode::InvalidArgument, "total weight exceeds 2^62");
    }
    cumulative_.push_back(cumulative_.back() + w);
  }
  if (total() == 0) fail(ErrorCode::InvalidArgument, "total weight must be at least 1");
}

void DiscreteWeights::decrement(std::size_t i) {
  if (weights_.at(i) == 0) fail(ErrorCode::InvalidArgument, "weight is already zero");
  --weights_[i];
  for (std::size_t j = i + 1; j < cumulative_.size(); ++j) --cumulative_[j];
}

std::size_t dichotomic_draw(BitSource& source, const DiscreteWeights& weights) {
  const auto cum = weights.cumulative();
  const std::size_t k = weights.size();
  const std::uint64_t n = weights.total();

  // Index of the segment containing the integer point x, skipping empty
  // segments: the last i < k with cum[i] <= x.
  auto segment_at = [&](std::uint64_t x) {
    auto it = std::upper_bound(cum.begin(), cum.begin() + static_cast<std::ptrdiff_t>(k), x);
    return static_cast<std::size_t>(it - cum.begin()) - 1;
  };

  // The current interval is [J n / 2^d, (J + 1) n / 2^d).
  uint128 scaled_low = 0;  // J n
  unsigned depth = 0;
  uint128 offset = 0;      // J
  while (true) {
    const uint128 scaled_high = scaled_low + n;
    const uint128 unit = uint128{1} << depth;
    const auto low_floor = static_cast<std::uint64_t>(scaled_low >> depth);
    const auto high_ceil = static_cast<std::uint64_t>((scaled_high + unit - 1) >> depth);
    const std::size_t first = segment_at(low_floor);
    const std::size_t last = segment_at(high_ceil - 1);
    if (first == last) return first;

    if (cum[first + 1] == cum[last]) {
      // One boundary B left inside the interval. Track only where it sits:
      // r = (B - low) * 2^d, with 0 < r < n while it stays inside.
      int128 r = static_cast<int128>((uint128{cum[last]} << depth) - scaled_low);
      const int128 total = n;
      while (true) {
        r = 2 * r - (source.next_bit() ? total : 0);
        if (r <= 0) return last;
        if (r >= total) return first;
      }
    }

    // At least two distinct boundaries inside means the width exceeds 1,
    // so 2^depth < n and the scaled values stay below n^2.
    const bool upper = source.next_bit();
    offset = 2 * offset + (upper ? 1 : 0);
    ++depth;
    scaled_low = offset * n;
  }
}

Word tuple_to_valid_word(BitSource& source, const DegreeTuple& tuple,
                         const TreeAlphabet& alphabet) {
  require_f_valid(tuple, alphabet);
  DiscreteWeights remaining({tuple.counts().begin(), tuple.counts().end()});
  Word word(tuple.total());
  for (auto& slot : word) {
    auto letter = dichotomic_draw(source, remaining);
    slot = static_cast<Letter>(letter);
    remaining.decrement(letter);
  }
  return word;
}

LukasiewiczWord sample_lukasiewicz(BitSource& source, const DegreeTuple& tuple,
                                   const TreeAlphabet& alphabet, Method method) {
  Word valid;
  switch (method) {
    case Method::Permutation: {
      require_f_valid(tuple, alphabet);
      auto sigma = fisher_yates(source, tuple.total());
      valid = permutation_to_valid_word(sigma, tuple, alphabet);
      break;
    }
    case Method::Dichotomic:
      valid = tuple_to_valid_word(source, tuple, alphabet);
      break;
  }
  return to_lukasiewicz(valid, alphabet);
}

PlanarTree sample_tree(BitSource& source, const DegreeTuple& tuple, const TreeAlphabet& alphabet,
                       Method method) {
  return word_to_tree(sample_lukasiewicz(source, tuple, alphabet, method), alphabet);
}

Rational mean_cost_closed_form(std::uint64_t k) {
  if (k < 2) fail(ErrorCode::DomainTooSmall, "mean cost is defined for k >= 2");
  if (k > (std::uint64_t{1} << 52)) fail(ErrorCode::InvalidArgument, "k exceeds 2^52");
  const auto m = static_cast<std::uint64_t>(std::bit_width(k - 1) - 1);
  const std::uint64_t denominator = std::uint64_t{1} << m;
  const std::uint64_t numerator = (m + 1) * denominator + k;
  const auto g = std::gcd(numerator, denominator);
  return {numerator / g, denominator / g};
}

bool closed_form_within_bound(std::uint64_t k) {
  const auto cost = mean_cost_closed_form(k);
  // With x = k / 2^m in (1, 2], the claim reads x - 1 <= log2(x): tight at
  // x = 2 and at least 0.27 / k away from equality elsewhere.
  if (std::has_single_bit(k)) {
    const auto bound = static_cast<std::uint64_t>(2 + std::bit_width(k) - 1);
    return cost.denominator == 1 && cost.numerator == bound;
  }
  const long double lhs =
      static_cast<long double>(cost.numerator) / static_cast<long double>(cost.denominator);
  const long double rhs = 2.0L + std::log2(static_cast<long double>(k));
  return lhs <= rhs;
}

double CostEstimate::standard_error() const noexcept {
  return replicates > 0 ? stddev / std::sqrt(static_cast<double>(replicates)) : 0.0;
}

CostEstimate measure_bit_cost(const DiscreteWeights& weights, std::uint64_t replicates,
                              BitSource& source) {
  if (replicates == 0) fail(ErrorCode::InvalidArgument, "replicates must be at least 1");
  // Welford's running mean and variance.
  double mean = 0.0;
  double m2 = 0.0;
  for (std::uint64_t r = 1; r <= replicates; ++r) {
    const auto before = source.bits_consumed();
    dichotomic_draw(source, weights);
    const auto bits = static_cast<double>(source.bits_consumed() - before);
    const double delta = bits - mean;
    mean += delta / static_cast<double>(r);
    m2 += delta * (bits - mean);
  }
  CostEstimate estimate;
  estimate.mean = mean;
  estimate.replicates = replicates;
  estimate.stddev = replicates > 1 ? std::sqrt(m2 / static_cast<double>(replicates - 1)) : 0.0;
  return estimate;
}

}  // namespace lukatree
