#include "lukatree/enumeration.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include "lukatree/error.hpp"

namespace lukatree {

BigCount valid_word_count(const DegreeTuple& tuple, const TreeAlphabet& alphabet) {
  require_f_valid(tuple, alphabet);
  // Running multinomial: after placing j copies of the current letter among
  // m slots so far, `count` is an integer, so each division is exact.
  BigCount count = 1;
  std::uint64_t m = 0;
  for (auto c : tuple.counts()) {
    for (std::uint64_t j = 1; j <= c; ++j) {
      ++m;
      count *= m;
      count /= j;
    }
  }
  return count;
}

BigCount tutte_count(const DegreeTuple& tuple, const TreeAlphabet& alphabet) {
  return valid_word_count(tuple, alphabet) / tuple.total();
}

std::vector<LukasiewiczWord> enumerate_lukasiewicz(const DegreeTuple& tuple,
                                                   const TreeAlphabet& alphabet,
                                                   std::size_t limit) {
  require_f_valid(tuple, alphabet);
  const std::uint64_t n = tuple.total();
  if (n > limit) {
    fail(ErrorCode::LimitExceeded,
         "n = " + std::to_string(n) + " exceeds the enumeration limit " + std::to_string(limit));
  }
  std::vector<std::uint64_t> remaining(tuple.counts().begin(), tuple.counts().end());
  std::vector<Word> found;
  Word word;
  word.reserve(n);

  // Depth-first over positions; `height` is the path height before the
  // current position.
  auto extend = [&](auto& self, std::int64_t height) -> void {
    if (word.size() == n) {
      found.push_back(word);
      return;
    }
    const bool last = word.size() + 1 == n;
    for (std::size_t letter = 0; letter < remaining.size(); ++letter) {
      if (remaining[letter] == 0) continue;
      const std::int64_t next = height + alphabet.degree(static_cast<Letter>(letter));
      if (last ? next != -1 : next < 0) continue;
      --remaining[letter];
      word.push_back(static_cast<Letter>(letter));
      self(self, next);
      word.pop_back();
      ++remaining[letter];
    }
  };
  extend(extend, 0);
  std::vector<LukasiewiczWord> out;
  out.reserve(found.size());
  for (auto& w : found) out.push_back(LukasiewiczWord(std::move(w)));
  return out;
}

double chi_square_tail(double statistic, std::uint64_t degrees) {
  if (degrees == 0) fail(ErrorCode::InvalidArgument, "chi-square needs at least one degree");
  if (statistic <= 0.0) return 1.0;
  return boost::math::gamma_q(static_cast<double>(degrees) / 2.0, statistic / 2.0);
}

ChiSquareResult chi_square_uniformity(std::span<const std::uint64_t> observed,
                                      const BigCount& support_size) {
  if (support_size < 2) fail(ErrorCode::EmptySupport, "support must have at least two cells");
  if (BigCount(observed.size()) > support_size) {
    fail(ErrorCode::InvalidArgument, "more observed cells than the support holds");
  }
  double draws = 0.0;
  for (auto o : observed) draws += static_cast<double>(o);
  if (draws == 0.0) fail(ErrorCode::InvalidArgument, "no observations");
  const double cells = support_size.convert_to<double>();
  const double expected = draws / cells;
  double statistic = 0.0;
  for (auto o : observed) {
    const double d = static_cast<double>(o) - expected;
    statistic += d * d / expected;
  }
  // Each unobserved cell contributes (0 - e)^2 / e = e.
  statistic += (cells - static_cast<double>(observed.size())) * expected;
  ChiSquareResult result;
  result.statistic = statistic;
  result.degrees = (support_size - 1).convert_to<std::uint64_t>();
  result.p_value = chi_square_tail(statistic, result.degrees);
  return result;
}

ChiSquareResult chi_square_homogeneity(std::span<const std::uint64_t> first,
                                       std::span<const std::uint64_t> second) {
  if (first.size() != second.size()) {
    fail(ErrorCode::InvalidArgument, "samples must be aligned cell by cell");
  }
  double total_first = 0.0;
  double total_second = 0.0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    total_first += static_cast<double>(first[i]);
    total_second += static_cast<double>(second[i]);
  }
  if (total_first == 0.0 || total_second == 0.0) {
    fail(ErrorCode::InvalidArgument, "both samples need observations");
  }
  const double grand = total_first + total_second;
  double statistic = 0.0;
  std::uint64_t cells = 0;
  for (std::size_t i = 0; i < first.size(); ++i) {
    const double column = static_cast<double>(first[i]) + static_cast<double>(second[i]);
    if (column == 0.0) continue;
    ++cells;
    const double e1 = column * total_first / grand;
    const double e2 = column * total_second / grand;
    const double d1 = static_cast<double>(first[i]) - e1;
    const double d2 = static_cast<double>(second[i]) - e2;
    statistic += d1 * d1 / e1 + d2 * d2 / e2;
  }
  if (cells < 2) fail(ErrorCode::EmptySupport, "need at least two non-empty cells");
  ChiSquareResult result;
  result.statistic = statistic;
  result.degrees = cells - 1;
  result.p_value = chi_square_tail(statistic, result.degrees);
  return result;
}

}  // namespace lukatree
