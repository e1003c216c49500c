#pragma once

// Search for alternative positive bases of a left cell module.
//
// A candidate is M'_y = M_y + sum_{x<y} m_{x,y} M_x with every m_{x,y}
// self-dual with nonnegative coefficients. It is admissible when every
// generator Hbar_s acts on {M'} with self-dual nonnegative structure
// constants. Only the generators are tested: this is a necessary condition
// for the action of a whole positive basis.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cellgeom/cells.hpp"

namespace cellgeom {

struct SearchConfig {
  int max_degree = 2;  // per pair further capped at l(y) - l(x) - 1
  int max_coeff = 3;
  /// Only allow m_{x,y} != 0 when L(x) contains L(y) and R(x) contains R(y).
  bool descent_filter = true;
  int threads = 0;
};

struct CandidateBasis {
  std::vector<CoxeterElement> cell;
  /// (i, j) vertex indices with i < j  ->  m_{cell[i], cell[j]}; zeros omitted.
  std::map<std::pair<int, int>, LaurentPoly> coeffs;

  bool is_trivial() const { return coeffs.empty(); }
  LaurentPoly coeff(int i, int j) const;
  /// Column j holds the coordinates of M'_{cell[j]} in the old basis.
  LaurentMatrix matrix() const;
  std::string to_string() const;
};

/// Structure constants of Hbar_s in the new basis: U^-1 A_s U.
LaurentMatrix action_in_basis(const CandidateBasis& basis, const CellModule& module, int s);

/// Positivity of the structure constants for every generator.
bool admissible(const CandidateBasis& basis, const CellModule& module);

/// Upper-triangularity, self-dual nonnegative coefficients and, when
/// descent_filter is set, the descent containment for every nonzero m_{x,y}.
bool satisfies_shape(const CandidateBasis& basis, bool descent_filter = true);

/// Every admissible basis within the bounds; the trivial basis comes first,
/// the rest sorted by number of nonzero coefficients, then by value.
std::vector<CandidateBasis> enumerate_bases(const CellModule& module, const SearchConfig& cfg = {});

struct CellCandidates {
  std::vector<CoxeterElement> cell;  // a left cell
  int two_sided = 0;                 // index into the report's two-sided cells
  std::string label;                 // partition for type A, else first element
  std::vector<CandidateBasis> bases;
  /// Nonzero m_{x,y} with x and y in one right cell, over all bases.
  std::vector<std::pair<CoxeterElement, CoxeterElement>> right_cell_pairs;
};

struct CandidateReport {
  CoxeterSystem system;
  SearchConfig cfg;
  std::vector<std::vector<CoxeterElement>> two_sided_cells;
  std::vector<CellCandidates> cells;
};

CandidateReport report_candidates(KLCache& cache, const SearchConfig& cfg = {});

}  // namespace cellgeom
