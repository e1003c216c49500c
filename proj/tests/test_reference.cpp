#include <doctest.h>

#include <set>

#include "cellgeom/coxeter.hpp"
#include "cellgeom/reference_data.hpp"

using namespace cellgeom;

TEST_CASE("keys are unique and located") {
  std::set<std::string> keys;
  for (const auto& e : reference_data()) {
    CHECK(keys.insert(e.key).second);
    CHECK(!e.location.empty());
    CHECK(!e.value.empty());
  }
  CHECK_THROWS_AS(reference_entry("no.such.key"), Error);
  CHECK(reference_value("gl8.u") == "21654387");
}

TEST_CASE("permutations and words are well formed") {
  for (auto key : {"gl8.u", "gl8.v", "gl12.x", "gl12.y", "n4.x", "n4.y"}) {
    const auto& s = reference_value(key);
    CHECK_NOTHROW(parse_perm(s, static_cast<int>(s.size())));
  }
  CHECK(parse_word(reference_value("gl12.x.word")).size() == 22);
  CHECK(parse_word(reference_value("gl12.y.word")).size() == 30);
}

TEST_CASE("block layouts") {
  const auto l = parse_block_layout(reference_value("gl8.layout"));
  REQUIRE(l.size() == 4);
  for (const auto& row : l) CHECK(row.size() == 4);
  CHECK(l[3][0] == "A0");
  CHECK(l[1][2] == "J");
  const auto g = parse_block_layout(reference_value("gl12.layout"));
  REQUIRE(g.size() == 6);
  CHECK(g[5][4] == "A4");
  CHECK_THROWS_AS(parse_block_layout("0,0/0"), Error);
}
