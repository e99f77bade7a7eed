#include "lukatree/words.hpp"

#include <limits>

#include "lukatree/error.hpp"

namespace lukatree {

Word parse_word(std::string_view text, const TreeAlphabet& alphabet) {
  Word word;
  word.reserve(text.size());
  for (char c : text) {
    auto letter = alphabet.find(c);
    if (!letter) {
      fail(ErrorCode::ParseError, std::string("letter '") + c + "' is not in the alphabet " +
                                      alphabet.to_string());
    }
    word.push_back(*letter);
  }
  return word;
}

std::string format_word(std::span<const Letter> word, const TreeAlphabet& alphabet) {
  std::string out;
  out.reserve(word.size());
  for (auto letter : word) out += alphabet.symbol(letter);
  return out;
}

std::vector<std::int64_t> path_heights(std::span<const Letter> word,
                                       const TreeAlphabet& alphabet) {
  std::vector<std::int64_t> heights;
  heights.reserve(word.size());
  std::int64_t sum = 0;
  for (auto letter : word) {
    sum += alphabet.degree(letter);
    heights.push_back(sum);
  }
  return heights;
}

const char* to_string(WordClass cls) noexcept {
  switch (cls) {
    case WordClass::Lukasiewicz: return "lukasiewicz";
    case WordClass::ValidNotLukasiewicz: return "valid,not-lukasiewicz";
    case WordClass::Invalid: return "invalid";
  }
  return "unknown";
}

WordClass classify(std::span<const Letter> word, const TreeAlphabet& alphabet) {
  std::int64_t sum = 0;
  bool dipped = false;
  for (std::size_t i = 0; i < word.size(); ++i) {
    sum += alphabet.degree(word[i]);
    if (sum < 0 && i + 1 < word.size()) dipped = true;
  }
  if (sum != -1) return WordClass::Invalid;
  return dipped ? WordClass::ValidNotLukasiewicz : WordClass::Lukasiewicz;
}

LukasiewiczWord LukasiewiczWord::certify(Word word, const TreeAlphabet& alphabet) {
  if (classify(word, alphabet) != WordClass::Lukasiewicz) {
    fail(ErrorCode::NotAValidWord,
         "'" + format_word(word, alphabet) + "' is not a Lukasiewicz word");
  }
  return LukasiewiczWord(std::move(word));
}

std::size_t rotation_index(std::span<const Letter> word, const TreeAlphabet& alphabet) {
  std::int64_t sum = 0;
  std::int64_t minimum = std::numeric_limits<std::int64_t>::max();
  std::size_t index = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    sum += alphabet.degree(word[i]);
    // Strict comparison keeps the first minimiser.
    if (sum < minimum) {
      minimum = sum;
      index = i + 1;
    }
  }
  if (word.empty() || sum != -1) {
    fail(ErrorCode::NotAValidWord,
         "'" + format_word(word, alphabet) + "' is not f-valid (sum " + std::to_string(sum) + ")");
  }
  return index;
}

LukasiewiczWord to_lukasiewicz(std::span<const Letter> word, const TreeAlphabet& alphabet) {
  const std::size_t split = rotation_index(word, alphabet);
  Word rotated;
  rotated.reserve(word.size());
  rotated.insert(rotated.end(), word.begin() + static_cast<std::ptrdiff_t>(split), word.end());
  rotated.insert(rotated.end(), word.begin(), word.begin() + static_cast<std::ptrdiff_t>(split));
  return LukasiewiczWord(std::move(rotated));
}

std::size_t rotations_that_are_lukasiewicz(std::span<const Letter> word,
                                           const TreeAlphabet& alphabet) {
  if (classify(word, alphabet) == WordClass::Invalid || word.empty()) {
    fail(ErrorCode::NotAValidWord, "'" + format_word(word, alphabet) + "' is not f-valid");
  }
  std::size_t found = 0;
  Word rotated(word.size());
  for (std::size_t shift = 0; shift < word.size(); ++shift) {
    for (std::size_t i = 0; i < word.size(); ++i) rotated[i] = word[(shift + i) % word.size()];
    if (classify(rotated, alphabet) == WordClass::Lukasiewicz) ++found;
  }
  return found;
}

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (auto v : images_) {
    if (v == 0 || v > images_.size() || seen[v]) {
      fail(ErrorCode::NotAPermutation,
           "not a permutation of 1.." + std::to_string(images_.size()));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::uint32_t> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<std::uint32_t>(i + 1);
  return Permutation(std::move(images), Unchecked{});
}

Word permutation_to_valid_word(const Permutation& permutation, const DegreeTuple& tuple,
                               const TreeAlphabet& alphabet) {
  require_f_valid(tuple, alphabet);
  if (permutation.size() != tuple.total()) {
    fail(ErrorCode::NotAPermutation, "permutation has length " +
                                         std::to_string(permutation.size()) + " but n = " +
                                         std::to_string(tuple.total()));
  }
  Word word(permutation.size());
  std::size_t pos = 0;
  for (std::size_t letter = 0; letter < tuple.size(); ++letter) {
    for (std::uint64_t j = 0; j < tuple[letter]; ++j) {
      word[permutation[pos] - 1] = static_cast<Letter>(letter);
      ++pos;
    }
  }
  return word;
}

}  // namespace lukatree
