#include <gtest/gtest.h>

#include "lukatree/alphabet.hpp"
#include "lukatree/error.hpp"

using namespace lukatree;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Alphabet, MotzkinFromLetters) {
  auto a = TreeAlphabet::make({'a', 'b', 'c'}, {-1, 0, 1});
  EXPECT_EQ(a.size(), 3u);
  EXPECT_EQ(a.degree(0), -1);
  EXPECT_EQ(a.arity(2), 2u);
  EXPECT_EQ(a, TreeAlphabet::motzkin());
  EXPECT_EQ(a.to_string(), "a:-1,b:0,c:1");
  EXPECT_EQ(*a.find('b'), 1u);
  EXPECT_FALSE(a.find('z').has_value());
}

TEST(Alphabet, LeafOnly) {
  auto a = TreeAlphabet::make({'a'}, {-1});
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a.arity(0), 0u);
}

TEST(Alphabet, RejectsBadInput) {
  EXPECT_EQ(code_of([] { TreeAlphabet::make({'a', 'b'}, {0, 1}); }),
            ErrorCode::FirstDegreeNotMinusOne);
  EXPECT_EQ(code_of([] { TreeAlphabet::make({'a', 'a'}, {-1, 0}); }), ErrorCode::DuplicateLetter);
  EXPECT_EQ(code_of([] { TreeAlphabet::make({'a', 'b', 'c'}, {-1, 2, 1}); }),
            ErrorCode::DegreesNotSorted);
  EXPECT_EQ(code_of([] { TreeAlphabet::make({'a', 'b'}, {-2, 0}); }),
            ErrorCode::DegreeBelowMinusOne);
  EXPECT_EQ(code_of([] { TreeAlphabet::make({}, {}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { TreeAlphabet::make({'a'}, {-1, 0}); }), ErrorCode::InvalidArgument);
}

TEST(Alphabet, SeveralLeafColours) {
  auto a = TreeAlphabet::make({'x', 'y', 'z'}, {-1, -1, 2});
  EXPECT_TRUE(is_f_valid(DegreeTuple({2, 1, 1}), a));
}

TEST(Alphabet, ParseRoundTripIsIdempotent) {
  for (const char* text : {"a:-1,b:0,c:1", "a:-1", "x:-1,y:-1,z:3", "a:-1,c:1"}) {
    auto a = TreeAlphabet::parse(text);
    EXPECT_EQ(a.to_string(), text);
    auto again = TreeAlphabet::parse(a.to_string());
    EXPECT_EQ(again, a);
    auto rebuilt = TreeAlphabet::make({a.letters().begin(), a.letters().end()},
                                      {a.degrees().begin(), a.degrees().end()});
    EXPECT_EQ(rebuilt, a);
  }
}

TEST(Alphabet, ParseErrors) {
  EXPECT_EQ(code_of([] { TreeAlphabet::parse("a-1"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { TreeAlphabet::parse("a:x"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { TreeAlphabet::parse("ab:-1"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { TreeAlphabet::parse("a:0,b:1"); }), ErrorCode::FirstDegreeNotMinusOne);
}

TEST(DegreeTupleTest, ParseAndTotal) {
  auto t = DegreeTuple::parse("3,1,2");
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.total(), 6u);
  EXPECT_EQ(t.to_string(), "3,1,2");
  EXPECT_EQ(code_of([] { DegreeTuple::parse("3,,2"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { DegreeTuple::parse("-1"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { DegreeTuple({0, 0}); }), ErrorCode::InvalidArgument);
}

TEST(Validity, MotzkinExamples) {
  auto m = TreeAlphabet::motzkin();
  EXPECT_TRUE(is_f_valid(DegreeTuple({3, 1, 2}), m));
  EXPECT_FALSE(is_f_valid(DegreeTuple({2, 0, 2}), m));
  EXPECT_TRUE(is_f_valid(DegreeTuple({1, 0, 0}), m));
  EXPECT_EQ(code_of([&] { is_f_valid(DegreeTuple({1, 0}), m); }), ErrorCode::ArityMismatch);
  EXPECT_EQ(code_of([&] { require_f_valid(DegreeTuple({2, 0, 2}), m); }),
            ErrorCode::TupleNotValid);
}

TEST(Validity, InvariantUnderSwappingEqualDegrees) {
  auto a = TreeAlphabet::make({'a', 'b', 'c', 'd', 'e'}, {-1, -1, 1, 1, 2});
  auto swapped = TreeAlphabet::make({'b', 'a', 'd', 'c', 'e'}, {-1, -1, 1, 1, 2});
  for (std::uint64_t n1 = 0; n1 < 5; ++n1)
    for (std::uint64_t n2 = 0; n2 < 5; ++n2)
      for (std::uint64_t n3 = 0; n3 < 3; ++n3)
        for (std::uint64_t n4 = 0; n4 < 3; ++n4)
          for (std::uint64_t n5 = 0; n5 < 2; ++n5) {
            if (n1 + n2 + n3 + n4 + n5 == 0) continue;
            EXPECT_EQ(is_f_valid(DegreeTuple({n1, n2, n3, n4, n5}), a),
                      is_f_valid(DegreeTuple({n2, n1, n4, n3, n5}), swapped));
          }
}

TEST(Validity, ValidTuplesHaveALeaf) {
  auto m = TreeAlphabet::motzkin();
  for (std::uint64_t l = 0; l < 8; ++l)
    for (std::uint64_t u = 0; u < 8; ++u)
      for (std::uint64_t b = 0; b < 8; ++b) {
        if (l + u + b == 0) continue;
        DegreeTuple t({l, u, b});
        if (is_f_valid(t, m)) {
          EXPECT_GE(t[0], 1u);
          EXPECT_LT(t.total() - t[0], t.total());
        }
      }
}
