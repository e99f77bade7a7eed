#include <gtest/gtest.h>

#include <map>
#include <numeric>

#include "lukatree/error.hpp"
#include "lukatree/words.hpp"
#include "oracles.hpp"

using namespace lukatree;

namespace {

const TreeAlphabet kMotzkin = TreeAlphabet::motzkin();
const TreeAlphabet kBinary = TreeAlphabet::binary();

Word w(const char* text, const TreeAlphabet& a = kMotzkin) { return parse_word(text, a); }

std::vector<std::int64_t> heights(const char* text) {
  return path_heights(w(text), kMotzkin);
}

// Every word of length `len` over the alphabet's symbols.
std::vector<std::string> all_words(const std::string& symbols, std::size_t len) {
  std::vector<std::string> out{""};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<std::string> next;
    for (const auto& s : out)
      for (char c : symbols) next.push_back(s + c);
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST(PathHeights, WorkedExamples) {
  EXPECT_EQ(heights("ccbabaa"), (std::vector<std::int64_t>{1, 2, 2, 1, 1, 0, -1}));
  // Forced by the degrees: the final c lands at -2 + 1.
  EXPECT_EQ(heights("babacac"), (std::vector<std::int64_t>{0, -1, -1, -2, -1, -2, -1}));
  EXPECT_EQ(heights("babacca"), (std::vector<std::int64_t>{0, -1, -1, -2, -1, 0, -1}));
  EXPECT_TRUE(heights("").empty());
}

TEST(Classify, WorkedExamples) {
  EXPECT_EQ(classify(w("ccbabaa"), kMotzkin), WordClass::Lukasiewicz);
  EXPECT_EQ(classify(w("babacac"), kMotzkin), WordClass::ValidNotLukasiewicz);
  EXPECT_EQ(classify(w("babacca"), kMotzkin), WordClass::ValidNotLukasiewicz);
  EXPECT_EQ(classify(w("cacabaa"), kMotzkin), WordClass::Invalid);
  EXPECT_EQ(heights("cacabaa").back(), -2);
  EXPECT_EQ(classify(w(""), kMotzkin), WordClass::Invalid);
}

TEST(Classify, AgreesWithDefinitionOnAllShortWords) {
  for (std::size_t len = 1; len <= 7; ++len) {
    for (const auto& s : all_words("abc", len)) {
      auto word = w(s.c_str());
      auto got = classify(word, kMotzkin);
      switch (oracle::classify(s, oracle::motzkin())) {
        case oracle::Kind::Luka: EXPECT_EQ(got, WordClass::Lukasiewicz) << s; break;
        case oracle::Kind::Valid: EXPECT_EQ(got, WordClass::ValidNotLukasiewicz) << s; break;
        case oracle::Kind::Invalid: EXPECT_EQ(got, WordClass::Invalid) << s; break;
      }
      EXPECT_EQ(path_heights(word, kMotzkin).back() == -1, got != WordClass::Invalid) << s;
    }
  }
}

TEST(Rotation, IndexExamples) {
  EXPECT_EQ(rotation_index(w("babacac"), kMotzkin), 4u);
  EXPECT_EQ(rotation_index(w("ccbabaa"), kMotzkin), 7u);
  auto ab = TreeAlphabet::make({'a', 'b'}, {-1, 0});
  EXPECT_EQ(rotation_index(parse_word("ab", ab), ab), 1u);
  EXPECT_THROW(rotation_index(w("cacabaa"), kMotzkin), Error);
  EXPECT_THROW(rotation_index(w(""), kMotzkin), Error);
}

TEST(Rotation, ToLukasiewicz) {
  auto rotated = to_lukasiewicz(w("babacac"), kMotzkin);
  EXPECT_EQ(format_word(rotated.letters(), kMotzkin), "cacbaba");
  EXPECT_EQ(format_word(to_lukasiewicz(w("ccbabaa"), kMotzkin).letters(), kMotzkin), "ccbabaa");
  auto ab = TreeAlphabet::make({'a', 'b'}, {-1, 0});
  EXPECT_EQ(format_word(to_lukasiewicz(parse_word("ab", ab), ab).letters(), ab), "ba");
  try {
    to_lukasiewicz(w("cacabaa"), kMotzkin);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotAValidWord);
  }
}

TEST(Rotation, ExhaustiveCountExamples) {
  EXPECT_EQ(rotations_that_are_lukasiewicz(w("babacac"), kMotzkin), 1u);
  EXPECT_EQ(rotations_that_are_lukasiewicz(w("aac", kBinary), kBinary), 1u);
  EXPECT_EQ(rotations_that_are_lukasiewicz(w("a"), kMotzkin), 1u);
  EXPECT_THROW(rotations_that_are_lukasiewicz(w("cc"), kMotzkin), Error);
}

TEST(Rotation, CyclicLemmaOnAllValidMotzkinWordsUpTo8) {
  for (std::size_t len = 1; len <= 8; ++len) {
    for (const auto& s : all_words("abc", len)) {
      if (oracle::classify(s, oracle::motzkin()) == oracle::Kind::Invalid) continue;
      auto word = w(s.c_str());
      ASSERT_EQ(rotations_that_are_lukasiewicz(word, kMotzkin), 1u) << s;
      auto luka = to_lukasiewicz(word, kMotzkin);
      std::string text = format_word(luka.letters(), kMotzkin);
      EXPECT_EQ(oracle::classify(text, oracle::motzkin()), oracle::Kind::Luka) << s;
      // It is a rotation of the input by the reported index.
      auto l = rotation_index(word, kMotzkin);
      EXPECT_EQ(text, s.substr(l) + s.substr(0, l));
    }
  }
}

TEST(LukasiewiczWordTest, Certify) {
  EXPECT_NO_THROW(LukasiewiczWord::certify(w("caa"), kMotzkin));
  EXPECT_THROW(LukasiewiczWord::certify(w("aca"), kMotzkin), Error);
}

TEST(PermutationTest, Validation) {
  EXPECT_NO_THROW(Permutation({3, 1, 2}));
  for (auto bad : {std::vector<std::uint32_t>{1, 1, 2}, std::vector<std::uint32_t>{0, 1, 2},
                   std::vector<std::uint32_t>{1, 2, 4}}) {
    try {
      Permutation p(bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NotAPermutation);
    }
  }
}

TEST(PermutationToValidWord, HandTraces) {
  DegreeTuple t({2, 1});
  EXPECT_EQ(format_word(permutation_to_valid_word(Permutation({1, 2, 3}), t, kBinary), kBinary),
            "aac");
  EXPECT_EQ(format_word(permutation_to_valid_word(Permutation({3, 1, 2}), t, kBinary), kBinary),
            "aca");
}

TEST(PermutationToValidWord, Errors) {
  auto expect_code = [](auto f, ErrorCode code) {
    try {
      f();
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code);
    }
  };
  expect_code([] { permutation_to_valid_word(Permutation({1, 2}), DegreeTuple({2, 1}), kBinary); },
              ErrorCode::NotAPermutation);
  expect_code([] { permutation_to_valid_word(Permutation({1, 2, 3}), DegreeTuple({2, 1, 0}), kBinary); },
              ErrorCode::ArityMismatch);
  expect_code([] { permutation_to_valid_word(Permutation({1, 2, 3}), DegreeTuple({1, 2}), kBinary); },
              ErrorCode::TupleNotValid);
}

// Grouping all n! permutations by image: every fibre has prod n_i! members,
// so there are n! / prod n_i! distinct valid words.
TEST(PermutationToValidWord, FibreSizes) {
  const std::vector<std::pair<TreeAlphabet, std::vector<std::uint64_t>>> cases{
      {kBinary, {2, 1}}, {kBinary, {3, 2}}, {kBinary, {4, 3}},
      {kMotzkin, {3, 1, 2}}, {kMotzkin, {2, 3, 1}}, {kMotzkin, {4, 1, 3}}};
  for (const auto& [alphabet, counts] : cases) {
    DegreeTuple t(counts);
    const auto n = t.total();
    std::vector<std::uint32_t> images(n);
    std::iota(images.begin(), images.end(), 1u);
    std::map<Word, std::uint64_t> fibres;
    std::uint64_t perms = 0;
    do {
      auto word = permutation_to_valid_word(Permutation(images), t, alphabet);
      // Occurrence vector is exactly t.
      std::vector<std::uint64_t> occ(alphabet.size(), 0);
      for (auto l : word) ++occ[l];
      ASSERT_EQ(occ, counts);
      ++fibres[word];
      ++perms;
    } while (std::next_permutation(images.begin(), images.end()));
    std::uint64_t fibre = 1;
    for (auto c : counts)
      for (std::uint64_t j = 2; j <= c; ++j) fibre *= j;
    for (const auto& [word, size] : fibres) EXPECT_EQ(size, fibre);
    EXPECT_EQ(fibres.size() * fibre, perms);
  }
}
