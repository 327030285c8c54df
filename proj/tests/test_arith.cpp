#include "leavitt/arith.hpp"

#include <doctest.h>

#include "oracles.hpp"

using leavitt::composeTerms;
using leavitt::contains;
using leavitt::intersectProgressions;
using leavitt::PatternTerm;
using leavitt::Progression;
using leavitt::transposeTerm;

TEST_CASE("progression intersection: pinned cases") {
  // subset: {2,3,4,...} meets {3,5,7,...} in the latter
  auto r = intersectProgressions({2, 1}, {3, 2});
  REQUIRE(r.has_value());
  CHECK(*r == Progression{3, 2});

  // oracle-derived: scan both sets up to 200 and fit start/step
  auto s = oracle::scanIntersect({2, 3}, {5, 4}, 200);
  REQUIRE(s.has_value());
  CHECK(*s == Progression{5, 12});
  r = intersectProgressions({2, 3}, {5, 4});
  REQUIRE(r.has_value());
  CHECK(*r == Progression{5, 12});

  // parity-disjoint
  CHECK(!intersectProgressions({2, 2}, {3, 2}).has_value());
}

TEST_CASE("progression intersection: membership property") {
  auto g = oracle::rng(0xa11ce);
  for (int iter = 0; iter < 150; ++iter) {
    const auto p = oracle::randomProgression(g);
    const auto q = oracle::randomProgression(g);
    const auto r = intersectProgressions(p, q);
    for (long long x = 1; x <= 10000; ++x) {
      const bool both = contains(p, x) && contains(q, x);
      const bool in = r.has_value() && contains(*r, x);
      if (both != in) {
        CAPTURE(p.start);
        CAPTURE(p.step);
        CAPTURE(q.start);
        CAPTURE(q.step);
        CAPTURE(x);
        REQUIRE(both == in);
      }
    }
    if (r) CHECK(r->step == (leavitt::Int(p.step) / std::gcd(p.step, q.step) * leavitt::Int(q.step)).value());
  }
}

TEST_CASE("composeTerms: identity pattern on either side") {
  const PatternTerm id{2, 1, 2, 1, 1};
  auto g = oracle::rng(0xc0ffee);
  for (int iter = 0; iter < 50; ++iter) {
    const auto t = oracle::randomTerm(g);
    auto r = composeTerms(t, id, 2);
    REQUIRE(r.has_value());
    CHECK(*r == t);
    r = composeTerms(id, t, 2);
    REQUIRE(r.has_value());
    CHECK(*r == t);
  }
}

TEST_CASE("composeTerms: pinned products") {
  // block-enumeration oracle agrees on all block indices <= 50
  const PatternTerm t1{2, 1, 4, 2, 1};
  const PatternTerm t2{2, 1, 2, 1, 3};
  auto r = composeTerms(t1, t2, 2);
  REQUIRE(r.has_value());
  CHECK(*r == PatternTerm{2, 1, 4, 2, 3});
  CHECK(oracle::termProductBlocks(t1, t2, 50) == oracle::termBlocks(*r, 50));

  // rows of the right factor all odd, columns of the left factor all even
  const PatternTerm even{2, 2, 2, 2, 1};
  const PatternTerm odd{2, 2, 3, 2, 1};
  CHECK(!composeTerms(even, odd, 2).has_value());
  CHECK(oracle::termProductBlocks(even, odd, 50).empty());
}

TEST_CASE("composeTerms matches block-enumeration oracle on random terms") {
  auto g = oracle::rng(0xbead);
  for (int iter = 0; iter < 300; ++iter) {
    const auto t1 = oracle::randomTerm(g);
    const auto t2 = oracle::randomTerm(g);
    const auto expect = oracle::termProductBlocks(t1, t2, 50);
    const auto got = composeTerms(t1, t2, 3);
    if (!got) {
      CHECK(expect.empty());
    } else {
      CHECK(oracle::termBlocks(*got, 50) == expect);
    }
  }
}

TEST_CASE("transposeTerm: pinned, involution, antihomomorphism") {
  const PatternTerm sym{2, 1, 2, 1, 7};
  CHECK(transposeTerm(sym) == sym);
  CHECK(transposeTerm(PatternTerm{2, 1, 4, 2, 5}) == PatternTerm{4, 2, 2, 1, 5});

  auto g = oracle::rng(0x7ea);
  for (int iter = 0; iter < 200; ++iter) {
    const auto t = oracle::randomTerm(g);
    CHECK(transposeTerm(transposeTerm(t)) == t);

    // entry-evaluation oracle: the transposed block set is the block set
    // with every (m, n) flipped
    const auto blocks = oracle::termBlocks(t, 100);
    auto flipped = oracle::termBlocks(transposeTerm(t), 100);
    for (const auto& [mn, c] : blocks) {
      REQUIRE(flipped[{mn.second, mn.first}] == c);
    }

    const auto u = oracle::randomTerm(g);
    const auto lhs = composeTerms(t, u, 2);
    const auto rhs = composeTerms(transposeTerm(u), transposeTerm(t), 2);
    REQUIRE(lhs.has_value() == rhs.has_value());
    if (lhs) CHECK(transposeTerm(*lhs) == *rhs);
  }
}

TEST_CASE("validation rejects malformed inputs") {
  CHECK_THROWS_AS(intersectProgressions({0, 1}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(composeTerms({1, 1, 2, 1, 1}, {2, 1, 2, 1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(composeTerms({2, 1, 2, 1, 0}, {2, 1, 2, 1, 1}, 2), std::invalid_argument);
  CHECK_THROWS_AS(transposeTerm({2, 0, 2, 1, 1}), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
  const long long big = (1LL << 62);
  CHECK_THROWS_AS(intersectProgressions({1, big}, {2, big - 1}), leavitt::OverflowError);
  CHECK_THROWS_AS(leavitt::Int(big) * leavitt::Int(big), leavitt::OverflowError);
}
