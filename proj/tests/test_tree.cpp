#include <gtest/gtest.h>

#include "lukatree/error.hpp"
#include "lukatree/tree.hpp"
#include "oracles.hpp"

using namespace lukatree;

namespace {

PlanarTree tree_of(const char* text, const TreeAlphabet& a = TreeAlphabet::motzkin()) {
  return word_to_tree(LukasiewiczWord::certify(parse_word(text, a), a), a);
}

// Height computed from the Lukasiewicz word alone: the depth of position i
// is the number of open slots before it, tracked with an explicit stack.
std::uint64_t height_from_word(const std::string& w, const oracle::DegreeMap& f) {
  std::vector<int> open;  // remaining child slots per ancestor
  std::uint64_t best = 0;
  for (char c : w) {
    best = std::max<std::uint64_t>(best, open.size());
    if (!open.empty()) --open.back();
    int arity = f.at(c) + 1;
    if (arity > 0) open.push_back(arity);
    while (!open.empty() && open.back() == 0) open.pop_back();
  }
  return best;
}

}  // namespace

TEST(TreeCodec, SmallExamples) {
  auto t = tree_of("caa");
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(height(t), 1u);
  EXPECT_EQ(serialize(t, TreeFormat::Parenthesized), "c(a,a)");
  EXPECT_EQ(oracle::counts_of(degree_census(t)), (std::vector<std::uint64_t>{2, 0, 1}));

  auto single = tree_of("a");
  EXPECT_EQ(height(single), 0u);
  EXPECT_EQ(serialize(single, TreeFormat::Parenthesized), "a");

  auto t2 = tree_of("cacbaba");
  EXPECT_EQ(serialize(t2, TreeFormat::Parenthesized), "c(a,c(b(a),b(a)))");
  EXPECT_EQ(height(t2), 3u);
  EXPECT_EQ(oracle::counts_of(degree_census(t2)), (std::vector<std::uint64_t>{3, 2, 2}));
  EXPECT_EQ(serialize(t2, TreeFormat::Luka), "cacbaba");
}

TEST(TreeCodec, DotOutput) {
  auto t = tree_of("caa");
  EXPECT_EQ(serialize(t, TreeFormat::Dot),
            "digraph tree {\n"
            "  n0 [label=\"c\"];\n"
            "  n1 [label=\"a\"];\n"
            "  n2 [label=\"a\"];\n"
            "  n0 -> n1;\n"
            "  n0 -> n2;\n"
            "}\n");
}

TEST(TreeCodec, PreorderIds) {
  auto t = tree_of("cbaa");
  EXPECT_EQ(t.root(), 0u);
  auto kids = t.children(0);
  ASSERT_EQ(kids.size(), 2u);
  EXPECT_EQ(kids[0], 1u);
  EXPECT_EQ(kids[1], 3u);
  ASSERT_EQ(t.children(1).size(), 1u);
  EXPECT_EQ(t.children(1)[0], 2u);
  EXPECT_TRUE(t.children(2).empty());
}

TEST(TreeCodec, ExhaustiveRoundTrip) {
  auto m = TreeAlphabet::motzkin();
  auto f = oracle::motzkin();
  for (int n = 1; n <= 10; ++n) {
    for (int c = 0; 2 * c + 1 <= n; ++c) {
      const int leaves = c + 1, unary = n - 2 * c - 1;
      for (const auto& w : oracle::arrangements("abc", {leaves, unary, c})) {
        if (oracle::classify(w, f) != oracle::Kind::Luka) continue;
        auto word = LukasiewiczWord::certify(parse_word(w, m), m);
        auto tree = word_to_tree(word, m);
        ASSERT_EQ(tree_to_word(tree), word) << w;
        EXPECT_EQ(height(tree), height_from_word(w, f)) << w;
        EXPECT_LE(height(tree), static_cast<std::uint64_t>(n - 1));
        EXPECT_EQ(tree.size(), static_cast<std::size_t>(n));
      }
    }
  }
}

TEST(TreeCodec, ParenthesizedMatchesGrammarOracle) {
  // The set of serialized trees equals the brute-force tree list.
  auto m = TreeAlphabet::motzkin();
  const std::vector<int> counts{3, 2, 2};
  auto expected = oracle::trees("abc", {-1, 0, 1}, counts);
  std::set<std::string> want(expected.begin(), expected.end());
  std::set<std::string> got;
  for (const auto& w : oracle::arrangements("abc", counts)) {
    if (oracle::classify(w, oracle::motzkin()) != oracle::Kind::Luka) continue;
    got.insert(serialize(tree_of(w.c_str(), m), TreeFormat::Parenthesized));
  }
  EXPECT_EQ(got, want);
}

TEST(TreeCodec, DeepChainDoesNotRecurse) {
  // One leaf under 200000 unary nodes.
  auto m = TreeAlphabet::motzkin();
  Word w(200000, 1);
  w.push_back(0);
  auto tree = word_to_tree(LukasiewiczWord::certify(w, m), m);
  EXPECT_EQ(height(tree), 200000u);
  EXPECT_EQ(tree_to_word(tree).letters().size(), 200001u);
  EXPECT_EQ(serialize(tree, TreeFormat::Parenthesized).size(), 200000u * 3 + 1);
}

TEST(FromChildren, BuildsAndValidates) {
  auto m = TreeAlphabet::motzkin();
  // Root 2 (c) with children 0 (a) and 1 (a).
  auto t = PlanarTree::from_children(m, {0, 0, 2}, {{}, {}, {0, 1}}, 2);
  EXPECT_EQ(serialize(t, TreeFormat::Parenthesized), "c(a,a)");
  EXPECT_EQ(tree_to_word(t), tree_to_word(tree_of("caa")));
  // Non-preorder ids still serialize in preorder.
  EXPECT_EQ(serialize(t, TreeFormat::Dot), serialize(tree_of("caa"), TreeFormat::Dot));

  auto expect_invalid = [&](std::vector<Letter> labels, std::vector<std::vector<NodeId>> kids,
                            NodeId root) {
    try {
      PlanarTree::from_children(m, labels, kids, root);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::InvalidArgument);
    }
  };
  expect_invalid({0, 0, 2}, {{}, {}, {0}}, 2);          // arity
  expect_invalid({0, 1, 1}, {{}, {2}, {1}}, 0);         // cycle, unreachable
  expect_invalid({0, 0, 2}, {{}, {}, {0, 0}}, 2);       // shared child
  expect_invalid({0, 0, 2}, {{}, {}, {0, 5}}, 2);       // out of range
  expect_invalid({0, 7}, {{}, {0}}, 1);                 // bad label
  expect_invalid({0, 2, 0}, {{}, {0, 2}, {}}, 0);       // root is a child
  expect_invalid({0}, {{}, {}}, 0);                     // size mismatch
}
