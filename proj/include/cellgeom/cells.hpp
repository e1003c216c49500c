#pragma once

// Kazhdan-Lusztig cells, W-graphs and cell modules; Robinson-Schensted for
// type A.
//
// Cell convention: left cells are generated by left multiplication. In type A
// this means x ~_L y iff Q(x) = Q(y) and x ~_R y iff P(x) = P(y), where P is
// the row-insertion tableau of the image list x(1) ... x(n).

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "cellgeom/coxeter.hpp"
#include "cellgeom/hecke.hpp"

namespace cellgeom {

struct Tableau {
  std::vector<std::vector<int>> rows;

  std::vector<int> shape() const;
  int size() const;
  /// Rows on separate lines, entries separated by one space, letters a, b, ...
  /// for values above 9: "1 5 9 b\n2 6 a c\n3 7\n4 8".
  std::string to_string() const;
  bool is_standard() const;
  friend bool operator==(const Tableau&, const Tableau&) = default;
};

struct TableauPair {
  Tableau P;  // insertion
  Tableau Q;  // recording
};

TableauPair rsk(const CoxeterElement& x);
std::vector<int> transpose_partition(const std::vector<int>& lambda);

enum class CellKind { Left, Right, TwoSided };

/// Type A only: compares RSK symbols.
bool same_cell(const CoxeterElement& x, const CoxeterElement& y, CellKind kind);

/// Cell ids for every element of a cache's group, from the KL preorders.
class CellStructure {
 public:
  explicit CellStructure(KLCache& cache);

  int cell_id(int element, CellKind kind) const;
  bool same_cell(int x, int y, CellKind kind) const { return cell_id(x, kind) == cell_id(y, kind); }
  /// Cells as sorted element-index lists, ordered by their first member.
  std::vector<std::vector<int>> cells(CellKind kind) const;
  KLCache& cache() const { return *cache_; }

 private:
  KLCache* cache_;
  std::vector<int> left_, right_, two_sided_;
};

using CellPartition = std::vector<std::vector<CoxeterElement>>;

/// Cells sorted internally by (length, string) and then by first member.
CellPartition compute_cells(KLCache& cache, CellKind kind);
CellPartition left_cells(KLCache& cache);
bool same_cell(KLCache& cache, const CoxeterElement& x, const CoxeterElement& y, CellKind kind);

/// Sorts by increasing length, ties by string notation.
void sort_cell(std::vector<CoxeterElement>& cell);

struct WGraphVertex {
  CoxeterElement elt;
  std::vector<int> descents;  // left descents
};

struct WGraphEdge {
  int lower;  // vertex index of the shorter element
  int upper;
  Integer mu;
};

struct WGraph {
  std::vector<WGraphVertex> vertices;
  std::vector<WGraphEdge> edges;
};

WGraph wgraph_of_cell(KLCache& cache, std::vector<CoxeterElement> cell);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Left cell module with basis {M_x : x in cell}. action.at(s)[i][j] is the
/// coefficient of M_{vertex i} in Hbar_s M_{vertex j}.
struct CellModule {
  CoxeterSystem system;
  std::vector<CoxeterElement> vertices;
  std::map<int, LaurentMatrix> action;

  int dim() const { return static_cast<int>(vertices.size()); }
  int vertex_index(const CoxeterElement& w) const;  // -1 if absent
};

CellModule cell_module(KLCache& cache, std::vector<CoxeterElement> cell);

/// Generators of the standard parabolic subgroup for a composition of n:
/// lambda = (l1, l2, ...) gives the blocks {s_1..s_{l1-1}}, {s_{l1+1}..}, ...
std::vector<int> parabolic_generators(const std::vector<int>& lambda);
CoxeterElement longest_of_partition(const std::vector<int>& lambda);
/// The left cell containing the longest element of W_lambda (type A).
std::vector<CoxeterElement> cell_of_partition(KLCache& cache, const std::vector<int>& lambda);
/// Inverse of the above labelling: the transpose of the RSK shape.
std::vector<int> partition_label(const CoxeterElement& x);

std::vector<int> parse_partition(const std::string& s);
std::string partition_to_string(const std::vector<int>& lambda);

}  // namespace cellgeom
