#include <doctest.h>

#include "cellgeom/coxeter.hpp"
#include "oracles.hpp"

using namespace cellgeom;

namespace {
CoxeterElement P(const char* s) { return parse_perm(s, static_cast<int>(std::string(s).size())); }
}  // namespace

TEST_CASE("string notation round trip") {
  const auto x = P("438721a965cb");
  CHECK(x(7) == 10);
  CHECK(x(12) == 11);
  CHECK(to_string(x) == "438721a965cb");
  CHECK_THROWS_AS(parse_perm("1123", 4), Error);
  CHECK_THROWS_AS(parse_perm("123", 4), Error);
  CHECK_THROWS_AS(parse_perm("1", 1), Error);
  CHECK(digit_value('z') == 35);
  CHECK(digit_value('!') == -1);
}

TEST_CASE("type B notation") {
  const auto sys = CoxeterSystem::type_b(2);
  const auto w = parse_element(sys, "[-2,1]");
  CHECK(to_string(w) == "[-2,1]");
  CHECK(w(-1) == 2);
  CHECK(parse_element(sys, "w:10") == w);  // t s
  CHECK_THROWS_AS(parse_element(sys, "[2,2]"), Error);
}

TEST_CASE("lengths") {
  CHECK(length(P("21654387")) == 8);
  CHECK(length(P("62845173")) == 16);
  CHECK(length(P("438721a965cb")) == 22);
  CHECK(length(P("4387a2c691b5")) == 30);
  const auto b2 = CoxeterSystem::type_b(2);
  CHECK(length(longest_element(b2)) == 4);
  CHECK(length(longest_element(CoxeterSystem::type_b(3))) == 9);
}

TEST_CASE("type B lengths agree with breadth-first search") {
  for (int n : {2, 3}) {
    const auto sys = CoxeterSystem::type_b(n);
    const auto dist = oracle::bfs_lengths(sys);
    CHECK(dist.size() == enumerate_group(sys).size());
    for (const auto& [w, d] : dist) CHECK(length(w) == d);
  }
}

TEST_CASE("products and descents") {
  const auto sys = CoxeterSystem::type_a(4);
  const auto w = P("3142");
  // Right multiplication swaps positions, left multiplication swaps values.
  CHECK(mult_gen(w, 1, Side::Right) == P("1342"));
  CHECK(mult_gen(w, 1, Side::Left) == P("3241"));
  CHECK(mult(w, inverse(w)).is_identity());
  CHECK(descents(w, Side::Right) == std::vector<int>{1, 3});
  CHECK(descents(w, Side::Left) == std::vector<int>{2});
  const auto b2 = CoxeterSystem::type_b(2);
  const auto s = CoxeterElement::generator(b2, 0), t = CoxeterElement::generator(b2, 1);
  const auto sts = mult(s, mult(t, s));
  CHECK(descents(sts, Side::Left) == std::vector<int>{0});
  CHECK(descents(sts, Side::Right) == std::vector<int>{0});
  CHECK(length(sts) == 3);
  CHECK(sys.generators() == std::vector<int>{1, 2, 3});
}

TEST_CASE("words") {
  const auto sys = CoxeterSystem::type_a(12);
  CHECK(to_string(word_to_elt(sys, parse_word("b567895678712345123431"))) == "438721a965cb");
  CHECK(to_string(word_to_elt(sys, parse_word("56789aba1234567897845671234531"))) == "4387a2c691b5");
  CHECK(parse_word("11,5,6") == std::vector<int>{11, 5, 6});
  const auto x = P("4387a2c691b5");
  const auto rw = reduced_word(x);
  CHECK(static_cast<int>(rw.size()) == length(x));
  CHECK(word_to_elt(sys, rw) == x);
  CHECK(word_to_string(parse_word("b5")) == "b5");
}

TEST_CASE("Bruhat order matches the subword criterion on S4 and B2") {
  for (const auto& sys : {CoxeterSystem::type_a(4), CoxeterSystem::type_b(2)}) {
    const auto all = enumerate_group(sys);
    for (const auto& y : all) {
      const auto lower = oracle::lower_interval(y);
      for (const auto& x : all) CHECK(bruhat_leq(x, y) == (lower.count(x) == 1));
    }
  }
}

TEST_CASE("published Bruhat relations") {
  CHECK(bruhat_leq(P("21654387"), P("62845173")));
  CHECK(bruhat_leq(P("438721a965cb"), P("4387a2c691b5")));
  CHECK_FALSE(bruhat_leq(P("4387a2c691b5"), P("438721a965cb")));
  CHECK(bruhat_leq(P("2143"), P("4231")));
}

TEST_CASE("longest elements") {
  const auto sys = CoxeterSystem::type_a(8);
  CHECK(to_string(longest_parabolic_elt(sys, {1, 3, 4, 5, 7})) == "21654387");
  CHECK(to_string(longest_element(CoxeterSystem::type_a(4))) == "4321");
  CHECK(to_string(longest_element(CoxeterSystem::type_b(2))) == "[-1,-2]");
  CHECK(enumerate_group(CoxeterSystem::type_a(5)).size() == 120);
  CHECK(enumerate_group(CoxeterSystem::type_b(3)).size() == 48);
}
