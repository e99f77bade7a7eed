#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lukatree/words.hpp"

namespace lukatree {

// A stream of fair random bits that counts every bit it hands out. The
// counter is the cost model for all samplers: composite operations consume
// randomness only through next_bit().
//
// Not thread-safe; give each thread its own source.
class BitSource {
 public:
  virtual ~BitSource() = default;

  bool next_bit() {
    ++consumed_;
    return draw();
  }

  std::uint64_t bits_consumed() const noexcept { return consumed_; }

 protected:
  virtual bool draw() = 0;

 private:
  std::uint64_t consumed_ = 0;
};

// Bits taken 64 at a time from a Mersenne Twister. Equal seeds give equal
// bit sequences.
class SeededBitSource final : public BitSource {
 public:
  explicit SeededBitSource(std::uint64_t seed);

 protected:
  bool draw() override {
    if (available_ == 0) {
      buffer_ = engine_();
      available_ = 64;
    }
    bool bit = buffer_ & 1u;
    buffer_ >>= 1;
    --available_;
    return bit;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t buffer_ = 0;
  unsigned available_ = 0;
};

// Replays a fixed bit string and throws BitsExhausted past its end. Used to
// compute exact output distributions by walking every bit prefix.
class ScriptedBitSource final : public BitSource {
 public:
  explicit ScriptedBitSource(std::vector<bool> bits) : bits_(std::move(bits)) {}

 protected:
  bool draw() override;

 private:
  std::vector<bool> bits_;
  std::size_t next_ = 0;
};

// Uniform on {0, ..., m-1}: draw ceil(log2 m) bits, reject values >= m.
// m == 1 consumes nothing. Throws InvalidArgument for m == 0.
std::uint64_t uniform_int(BitSource& source, std::uint64_t m);

// Uniform permutation of 1..n. For i = n down to 2, swaps slot i with a
// uniformly chosen slot in 1..i.
Permutation fisher_yates(BitSource& source, std::size_t n);

}  // namespace lukatree
