#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>

#include "laws/expr.hpp"
#include "laws/rng.hpp"
#include "laws/word.hpp"

using namespace laws;

namespace {

Word w(const char* text) { return parse_word(text); }

Letters random_letters(Rng& rng, std::size_t len, int rank) {
  Letters out;
  for (std::size_t i = 0; i < len; ++i)
    out.push_back(Generator{static_cast<std::uint8_t>(rng.below(static_cast<std::uint64_t>(2 * rank)))});
  return out;
}

}  // namespace

TEST_CASE("free reduction") {
  CHECK(w("abBA").empty());             // a b b^-1 a^-1 -> e
  CHECK(to_string(w("aab")) == "aab");  // already reduced
  CHECK(to_string(w("aBba")) == "aa");  // inner cancellation
}

TEST_CASE("reduce is idempotent on random letter sequences") {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    Letters raw = random_letters(rng, rng.below(40), 2);
    Word once = reduce(raw, 2);
    Word twice = reduce(once.letters(), 2);
    CHECK(once == twice);
  }
}

TEST_CASE("word algebra") {
  CHECK(to_string(commutator(w("a"), w("b"))) == "abAB");
  CHECK(commutator(w("a"), w("b")).length() == 4);
  CHECK(to_string(power(w("a"), 5)) == "aaaaa");
  CHECK(to_string(concat(w("ab"), w("Ba"))) == "aa");
  CHECK(power(w("ab"), 0).empty());
  CHECK_THROWS_AS(concat(w("ab"), parse_word("ac")), error);  // rank 2 vs rank 3
}

TEST_CASE("concat with inverse cancels for random words") {
  Rng rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    Word u = reduce(random_letters(rng, rng.below(30), 2), 2);
    CHECK(concat(u, inverse(u)).empty());
  }
}

TEST_CASE("is_generator_power") {
  CHECK(is_generator_power(w("aaaaa")) == 0);
  CHECK(!is_generator_power(w("abA")).has_value());
  CHECK(is_generator_power(w("BBB")) == 1);
  CHECK_THROWS_AS(is_generator_power(Word(2)), error);
}

TEST_CASE("parse and serialize") {
  CHECK(to_string(w("abAB")) == "abAB");
  CHECK(w("").empty());
  CHECK(to_string(parse_word("aaB")) == "aaB");
  CHECK_THROWS_AS(parse_word("xyz"), parse_error);
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = reduce(random_letters(rng, rng.below(25), 4), 4);
    CHECK(parse_word(to_string(u), 4) == u);
  }
}

TEST_CASE("nominal length accounting") {
  WordExpr a = ExprNode::gen(Generator::make(0, +1), 2);
  WordExpr b = ExprNode::gen(Generator::make(1, +1), 2);
  WordExpr comm_ab = ExprNode::comm(a, b);
  CHECK(nominal_length(comm_ab) == 4);
  CHECK(nominal_length(ExprNode::pow(comm_ab, 3)) == 12);

  // Subst(Comm(a,c), standard images) -> 2*1 + 2*5
  WordExpr c = ExprNode::gen(Generator::make(2, +1), 4);
  WordExpr a4 = ExprNode::gen(Generator::make(0, +1), 4);
  WordExpr body = ExprNode::comm(a4, c);
  std::array<Word, 4> images{w("a"), parse_word("baB", 2), parse_word("bbaBB", 2),
                             parse_word("bbbaBBB", 2)};
  WordExpr sub = ExprNode::subst(body, images);
  CHECK(nominal_length(sub) == 12);
  CHECK(to_string(flatten(sub)) == "abbaBBAbbABB");
}

TEST_CASE("flatten basics") {
  WordExpr a = ExprNode::gen(Generator::make(0, +1), 2);
  CHECK(flatten(ExprNode::comm(a, a)).empty());
  WordExpr p3 = ExprNode::pow(a, 3);
  WordExpr round = ExprNode::concat({p3, ExprNode::inv(p3)});
  CHECK(flatten(round).empty());
  CHECK_THROWS_AS(ExprNode::pow(a, 0), error);
}

TEST_CASE("nominal dominates reduced length on random expressions") {
  Rng rng(23);
  std::function<WordExpr(int)> build = [&](int depth) -> WordExpr {
    if (depth == 0 || rng.below(4) == 0) {
      Word u = reduce(random_letters(rng, 1 + rng.below(6), 2), 2);
      if (u.empty()) u = w("a");
      return ExprNode::lit(u);
    }
    switch (rng.below(4)) {
      case 0: return ExprNode::concat({build(depth - 1), build(depth - 1)});
      case 1: return ExprNode::inv(build(depth - 1));
      case 2: return ExprNode::pow(build(depth - 1), 1 + rng.below(4));
      default: return ExprNode::comm(build(depth - 1), build(depth - 1));
    }
  };
  for (int trial = 0; trial < 300; ++trial) {
    WordExpr e = build(3);
    CHECK(nominal_length(e) >= flatten(e).length());
  }
}

TEST_CASE("expression json round trip") {
  WordExpr a = ExprNode::gen(Generator::make(0, +1), 2);
  WordExpr b = ExprNode::gen(Generator::make(1, +1), 2);
  WordExpr e = ExprNode::pow(ExprNode::comm(a, b), 6);
  auto j = expr_to_json(e);
  WordExpr back = expr_from_json(j);
  CHECK(expr_to_json(back) == j);
  CHECK(flatten(back) == flatten(e));

  WordExpr c = ExprNode::gen(Generator::make(2, +1), 4);
  WordExpr body = ExprNode::comm(ExprNode::lit(parse_word("aa", 4)), c);
  std::array<Word, 4> images{w("a"), parse_word("baB", 2), parse_word("bbaBB", 2),
                             parse_word("bbbaBBB", 2)};
  WordExpr sub = ExprNode::subst(body, images);
  auto js = expr_to_json(sub);
  WordExpr back2 = expr_from_json(js);
  CHECK(expr_to_json(back2) == js);
  CHECK(flatten(back2) == flatten(sub));
}

TEST_CASE("substitute_expr matches word-level substitution") {
  WordExpr body = ExprNode::lit(parse_word("abAB", 2));
  WordExpr im0 = ExprNode::lit(parse_word("ba", 2));
  WordExpr im1 = ExprNode::lit(parse_word("aB", 2));
  WordExpr result = substitute_expr(body, {im0, im1});
  Word expected = concat(concat(w("ba"), w("aB")), concat(w("AB"), w("bA")));
  CHECK(flatten(result) == expected);
}
