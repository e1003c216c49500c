#include <doctest.h>

#include "cellgeom/reference_data.hpp"
#include "cellgeom/schubert.hpp"

using namespace cellgeom;

namespace {

CoxeterElement perm(const std::string& s) { return parse_perm(s, static_cast<int>(s.size())); }

std::vector<Rational> random_point(Rng& rng, int n, int bound, int zero_odds) {
  std::vector<Rational> p(n);
  for (auto& v : p)
    if (uniform_int(rng, 0, zero_odds) == 0) v = uniform_int(rng, -bound, bound);
  return p;
}

}  // namespace

TEST_CASE("chart of 2143") {
  const auto c = slice_chart(perm("2143"));
  REQUIRE(c.var_count == 4);
  const std::vector<std::pair<int, int>> expect{{3, 1}, {4, 1}, {3, 2}, {4, 2}};
  CHECK(c.var_pos == expect);
  CHECK(c.var_name(0) == "g31");
  CHECK(c.var_at(4, 2) == 3);
  CHECK(c.var_at(1, 1) == -1);
  const auto m = c.evaluate({0, 0, 0, 0});
  for (int j = 1; j <= 4; ++j)
    for (int i = 1; i <= 4; ++i) CHECK(m(i - 1, j - 1) == (perm("2143")(j) == i ? 1 : 0));
}

TEST_CASE("chart dimension is the codimension of the cell") {
  const auto sys = CoxeterSystem::type_a(5);
  for (const auto& x : enumerate_group(sys)) {
    const auto c = slice_chart(x);
    CHECK(c.var_count == 10 - length(x));
    CHECK(static_cast<int>(c.var_pos.size()) == c.var_count);
  }
  CHECK(slice_chart(perm("a9b8c7654321")).var_count >= 0);
}

TEST_CASE("essential sets") {
  const auto e = essential_conditions(perm("4231"));
  REQUIRE(e.size() == 1);
  CHECK(e[0] == RankCondition{3, 2, 1});
  CHECK(essential_conditions(perm("4321")).empty());
  CHECK(essential_conditions(perm("54321")).empty());
  CHECK(rank_profile(perm("4231"), 3, 2) == 1);
  std::vector<std::string> warn;
  rank_conditions(perm("4231"), perm("1234"), true, &warn);
  CHECK(warn.size() == 1);
}

TEST_CASE("the 2x2 minor of the four-variable slice") {
  const auto c = slice_chart(perm("2143"));
  const auto conds = rank_conditions(perm("2143"), perm("4231"), true);
  const auto minors = condition_minors(c, conds.at(0));
  REQUIRE(minors.size() == 1);
  const std::string names = "acbd";
  CHECK(minors[0].to_string([&](int k) { return std::string(1, names[k]); }) == "a*d - c*b");
  const auto ad_bc = SymPoly::variable(0) * SymPoly::variable(3) - SymPoly::variable(2) * SymPoly::variable(1);
  CHECK(minors[0] == ad_bc);
  CHECK(in_slice_schubert(c, conds, {1, 1, 1, 1}));
  CHECK(in_slice_schubert(c, conds, {0, 0, 0, 0}));
  CHECK_FALSE(in_slice_schubert(c, conds, {1, 0, 0, 1}));
  for (auto m : {TangentMethod::Kernel, TangentMethod::Minors}) {
    CHECK(slice_tangent_dim(c, conds, {0, 0, 0, 0}, m) == 4);
    CHECK(slice_tangent_dim(c, conds, {1, 2, 3, 6}, m) == 3);
  }
}

TEST_CASE("pruned and full conditions agree") {
  Rng rng(19);
  const auto sys = CoxeterSystem::type_a(5);
  const auto group = enumerate_group(sys);
  for (int trial = 0; trial < 300; ++trial) {
    const auto& x = group[uniform_int(rng, 0, static_cast<std::int64_t>(group.size()) - 1)];
    const auto& y = group[uniform_int(rng, 0, static_cast<std::int64_t>(group.size()) - 1)];
    const auto c = slice_chart(x);
    const auto full = rank_conditions(x, y, false), pruned = rank_conditions(x, y, true);
    for (int k = 0; k < 5; ++k) {
      const auto p = random_point(rng, c.var_count, 1, 1 + k % 3);
      CHECK(in_slice_schubert(c, full, p) == in_slice_schubert(c, pruned, p));
    }
  }
}

TEST_CASE("the chart origin lies in X_y exactly when x <= y") {
  const auto group = enumerate_group(CoxeterSystem::type_a(4));
  for (const auto& x : group) {
    const auto c = slice_chart(x);
    const std::vector<Rational> zero(c.var_count);
    for (const auto& y : group) CHECK(in_slice_schubert(c, rank_conditions(x, y, true), zero) == bruhat_leq(x, y));
  }
}

TEST_CASE("tangent methods agree") {
  Rng rng(23);
  const auto group = enumerate_group(CoxeterSystem::type_a(5));
  int checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    const auto& x = group[uniform_int(rng, 0, static_cast<std::int64_t>(group.size()) - 1)];
    const auto& y = group[uniform_int(rng, 0, static_cast<std::int64_t>(group.size()) - 1)];
    if (!bruhat_leq(x, y)) continue;
    const auto c = slice_chart(x);
    const auto conds = rank_conditions(x, y, true);
    const auto p = random_point(rng, c.var_count, 2, 2);
    if (!in_slice_schubert(c, conds, p)) continue;
    ++checked;
    CHECK(slice_tangent_dim(c, conds, p, TangentMethod::Kernel) == slice_tangent_dim(c, conds, p, TangentMethod::Minors));
  }
  CHECK(checked > 20);
}

TEST_CASE("block patterns of the two realizations") {
  const auto u = parse_perm(reference_value("gl8.u"), 8);
  CHECK(slice_chart(u).var_count == 20);
  CHECK(block_pattern(slice_chart(u)) == std::vector<std::string>{"J000", "V0J0", "VJ00", "VVVJ"});
  const auto x = parse_perm(reference_value("gl12.x"), 12);
  CHECK(slice_chart(x).var_count == 44);
  CHECK(block_pattern(slice_chart(x)) ==
        std::vector<std::string>{"00J000", "J00000", "V0V0J0", "VJ0000", "VVVJ00", "VVVVVJ"});
}

TEST_CASE("symbolic polynomials") {
  const auto a = SymPoly::variable(0), b = SymPoly::variable(1);
  const auto f = a * a * b - SymPoly::constant(3) * b;
  CHECK(f.evaluate({2, 5}) == 5);
  CHECK(f.derivative(0) == SymPoly::constant(2) * a * b);
  CHECK(f.derivative(1) == a * a - SymPoly::constant(3));
  CHECK((f - f).is_zero());
}
