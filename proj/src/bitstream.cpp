#include "lukatree/bitstream.hpp"

#include <bit>
#include <numeric>

#include "lukatree/error.hpp"

namespace lukatree {

SeededBitSource::SeededBitSource(std::uint64_t seed) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  engine_.seed(seq);
}

bool ScriptedBitSource::draw() {
  if (next_ >= bits_.size()) fail(ErrorCode::BitsExhausted, "scripted bit source exhausted");
  return bits_[next_++];
}

std::uint64_t uniform_int(BitSource& source, std::uint64_t m) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "uniform_int needs m >= 1");
  if (m == 1) return 0;
  const int width = std::bit_width(m - 1);
  while (true) {
    std::uint64_t value = 0;
    for (int i = 0; i < width; ++i) value = (value << 1) | (source.next_bit() ? 1u : 0u);
    if (value < m) return value;
  }
}

Permutation fisher_yates(BitSource& source, std::size_t n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "fisher_yates needs n >= 1");
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 1u);
  for (std::size_t i = n; i >= 2; --i) {
    auto j = uniform_int(source, i);
    std::swap(images[i - 1], images[j]);
  }
  return Permutation(std::move(images), Permutation::Unchecked{});
}

}  // namespace lukatree
