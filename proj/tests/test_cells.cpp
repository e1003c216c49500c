#include <doctest.h>

#include <set>

#include "cellgeom/cells.hpp"

using namespace cellgeom;

namespace {
CoxeterElement P(const char* s) { return parse_perm(s, static_cast<int>(std::string(s).size())); }

std::vector<std::string> names(const std::vector<CoxeterElement>& v) {
  std::vector<std::string> out;
  for (const auto& e : v) out.push_back(to_string(e));
  return out;
}
}  // namespace

TEST_CASE("tableaux of the GL12 pair") {
  const auto x = rsk(P("438721a965cb")), y = rsk(P("4387a2c691b5"));
  CHECK(x.P.to_string() == "1 5 9 b\n2 6 a c\n3 7\n4 8");
  CHECK(x.Q.to_string() == "1 3 7 b\n2 4 8 c\n5 9\n6 a");
  CHECK(y.P.to_string() == "1 5 9 b\n2 6 a c\n3 7\n4 8");
  CHECK(y.Q.to_string() == "1 3 5 7\n2 4 9 b\n6 8\na c");
  CHECK(x.P.is_standard());
  CHECK(x.P.shape() == std::vector<int>{4, 4, 2, 2});
}

TEST_CASE("RSK is a bijection on S5") {
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& w : enumerate_group(CoxeterSystem::type_a(5))) {
    const auto tp = rsk(w);
    CHECK(tp.P.shape() == tp.Q.shape());
    CHECK(tp.P.is_standard());
    CHECK(tp.Q.is_standard());
    seen.emplace(tp.P.to_string(), tp.Q.to_string());
    // Inverse swaps the tableaux.
    const auto ti = rsk(inverse(w));
    CHECK(ti.P == tp.Q);
  }
  CHECK(seen.size() == 120);
}

TEST_CASE("partition helpers") {
  CHECK(transpose_partition({3, 1}) == std::vector<int>{2, 1, 1});
  CHECK(transpose_partition({2, 2}) == std::vector<int>{2, 2});
  CHECK(parabolic_generators({3, 1}) == std::vector<int>{1, 2});
  CHECK(parabolic_generators({2, 1, 1}) == std::vector<int>{1});
  CHECK(to_string(longest_of_partition({3, 1})) == "3214");
  CHECK(parse_partition("2,1,1") == std::vector<int>{2, 1, 1});
  CHECK(partition_to_string({2, 1, 1}) == "(2,1,1)");
  CHECK_THROWS_AS(parse_partition("2,x"), Error);
}

TEST_CASE("S4 cells") {
  KLCache cache(CoxeterSystem::type_a(4));
  CHECK(compute_cells(cache, CellKind::Left).size() == 10);
  CHECK(compute_cells(cache, CellKind::Right).size() == 10);
  CHECK(compute_cells(cache, CellKind::TwoSided).size() == 5);
  CHECK(names(cell_of_partition(cache, {3, 1})) == std::vector<std::string>{"3214", "4213", "4312"});
  CHECK(names(cell_of_partition(cache, {2, 1, 1})) == std::vector<std::string>{"2134", "3124", "4123"});
  CHECK(names(cell_of_partition(cache, {2, 2})) == std::vector<std::string>{"2143", "3142"});
  CHECK(partition_label(P("3214")) == std::vector<int>{3, 1});
  CHECK_THROWS_AS(cell_of_partition(cache, {2, 1}), Error);
  CHECK_THROWS_AS(cell_of_partition(cache, {1, 3}), Error);
}

TEST_CASE("left cells have constant right descents") {
  KLCache cache(CoxeterSystem::type_a(5));
  for (const auto& c : left_cells(cache))
    for (const auto& w : c) CHECK(descents(w, Side::Right) == descents(c.front(), Side::Right));
}

TEST_CASE("B2 cells and W-graph") {
  KLCache cache(CoxeterSystem::type_b(2));
  const auto sys = cache.system();
  const auto s = CoxeterElement::generator(sys, 0), t = CoxeterElement::generator(sys, 1);
  const auto cells = left_cells(cache);
  CHECK(cells.size() == 4);
  std::vector<CoxeterElement> cell = {s, mult(t, s), mult(s, mult(t, s))};
  CHECK(std::find(cells.begin(), cells.end(), cell) != cells.end());
  const auto g = wgraph_of_cell(cache, cell);
  REQUIRE(g.vertices.size() == 3);
  CHECK(g.vertices[0].descents == std::vector<int>{0});
  CHECK(g.vertices[1].descents == std::vector<int>{1});
  CHECK(g.vertices[2].descents == std::vector<int>{0});
  REQUIRE(g.edges.size() == 2);
  CHECK(g.edges[0].lower == 0);
  CHECK(g.edges[0].upper == 1);
  CHECK(g.edges[1].lower == 1);
  CHECK(g.edges[1].upper == 2);
  CHECK(same_cell(cache, s, mult(s, mult(t, s)), CellKind::Right));
}

TEST_CASE("cell module of the B2 cell") {
  KLCache cache(CoxeterSystem::type_b(2));
  const auto sys = cache.system();
  const auto s = CoxeterElement::generator(sys, 0), t = CoxeterElement::generator(sys, 1);
  const auto m = cell_module(cache, {mult(s, mult(t, s)), s, mult(t, s)});
  CHECK(names(m.vertices) == names({s, mult(t, s), mult(s, mult(t, s))}));
  const auto q2 = v_pow(1) + v_pow(-1);
  const auto& as = m.action.at(0);
  const auto& at = m.action.at(1);
  CHECK(as[0][0] == q2);
  CHECK(as[2][2] == q2);
  CHECK(as[0][1] == LaurentPoly(1));
  CHECK(as[2][1] == LaurentPoly(1));
  CHECK(at[1][1] == q2);
  CHECK(at[1][0] == LaurentPoly(1));
  CHECK(at[1][2] == LaurentPoly(1));
  CHECK(at[0][0].is_zero());
}

TEST_CASE("W-graphs of left cells in one two-sided cell of S4 have the same shape") {
  KLCache cache(CoxeterSystem::type_a(4));
  CellStructure cs(cache);
  std::map<int, std::multiset<std::pair<std::size_t, std::size_t>>> shapes;
  for (const auto& ids : cs.cells(CellKind::Left)) {
    std::vector<CoxeterElement> cell;
    for (int i : ids) cell.push_back(cache.element(i));
    const auto g = wgraph_of_cell(cache, cell);
    const auto key = std::make_pair(g.vertices.size(), g.edges.size());
    const int ts = cs.cell_id(ids.front(), CellKind::TwoSided);
    if (!shapes[ts].empty()) CHECK(*shapes[ts].begin() == key);
    shapes[ts].insert(key);
  }
}
