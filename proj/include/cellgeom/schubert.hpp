#pragma once

// Affine charts and normal slices in the flag variety of GL_n, and the rank
// conditions cutting out a Schubert variety inside them.
//
// Matrices act by xdot(e_i) = e_{x(i)}, so xdot has its ones at (x(j), j).
// The normal slice N_x to the cell of x has g_{x(j), j} = 1, g_{x(i), j} = 0
// for j > i, g_{i,j} = 0 for i < x(j), and free entries elsewhere.

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cellgeom/coxeter.hpp"
#include "cellgeom/linalg.hpp"

namespace cellgeom {

enum class SlotKind { Zero, One, Var };

struct ChartSlot {
  SlotKind kind = SlotKind::Zero;
  int var = -1;
};

struct SliceChart {
  int n = 0;
  CoxeterElement x;
  std::vector<std::vector<ChartSlot>> grid;  // 0-based [row][col]
  int var_count = 0;
  std::vector<std::pair<int, int>> var_pos;  // 1-based (row, col) per variable

  Grid affine_grid() const;
  QMatrix evaluate(const std::vector<Rational>& point) const;
  /// "g31" for the entry in row 3, column 1; rows and columns above 9 use
  /// letters as in string notation.
  std::string var_name(int k) const;
  int var_at(int row, int col) const;  // 1-based; -1 if not a variable
};

/// Southwest rank bound: rank of rows a..n, columns 1..b at most `bound`.
struct RankCondition {
  int a = 1, b = 1;
  int bound = 0;
  friend bool operator==(const RankCondition&, const RankCondition&) = default;
};

/// #{ j <= b : y(j) >= a }.
int rank_profile(const CoxeterElement& y, int a, int b);
SliceChart slice_chart(const CoxeterElement& x);
/// Essential set of y (the southeast corners of its diagram, after flipping
/// rows so that southwest ranks become northwest ranks).
std::vector<RankCondition> essential_conditions(const CoxeterElement& y);
/// All n^2 conditions, or the essential ones. Appends to `warnings` when
/// x is not below y.
std::vector<RankCondition> rank_conditions(const CoxeterElement& x, const CoxeterElement& y, bool prune,
                                           std::vector<std::string>* warnings = nullptr);

QMatrix condition_submatrix(const QMatrix& g, const RankCondition& c);
bool in_slice_schubert(const SliceChart& chart, const std::vector<RankCondition>& conditions,
                       const std::vector<Rational>& point);

/// One character per k x k block: '0' all zero, 'V' all variables, 'J' the
/// antidiagonal ones, 'I' the identity, '?' anything else.
std::vector<std::string> block_pattern(const SliceChart& chart, int k = 2);

enum class TangentMethod { Kernel, Minors };

/// Linear equations of the tangent space of {rank <= r} at the chart point,
/// in the chart variables, one row per equation (possibly dependent).
/// Kernel: p^T dM q = 0 over left and right kernel vectors of the condition
/// submatrix. Minors: gradients of the (r+1)-minors. Both span the same row
/// space at points where the submatrix has rank exactly r; if its rank is
/// below r there are no equations.
void add_tangent_equations(const SliceChart& chart, const RankCondition& c, const std::vector<Rational>& point,
                           TangentMethod method, EchelonBasis& out);
int slice_tangent_dim(const SliceChart& chart, const std::vector<RankCondition>& conditions,
                      const std::vector<Rational>& point, TangentMethod method = TangentMethod::Kernel);

/// Integer polynomial in chart variables; monomials are sorted variable lists.
class SymPoly {
 public:
  SymPoly() = default;
  static SymPoly constant(const Integer& c);
  static SymPoly variable(int k);

  const std::map<std::vector<int>, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  SymPoly& operator+=(const SymPoly& o);
  SymPoly& operator-=(const SymPoly& o);
  friend SymPoly operator*(const SymPoly& a, const SymPoly& b);
  friend SymPoly operator+(SymPoly a, const SymPoly& b) { return a += b; }
  friend SymPoly operator-(SymPoly a, const SymPoly& b) { return a -= b; }
  SymPoly operator-() const;
  friend bool operator==(const SymPoly&, const SymPoly&) = default;

  Rational evaluate(const std::vector<Rational>& point) const;
  SymPoly derivative(int k) const;
  std::string to_string(const std::function<std::string(int)>& name) const;

 private:
  std::map<std::vector<int>, Integer> terms_;
};

/// Leibniz expansion of a minor of an affine grid.
SymPoly symbolic_minor(const Grid& g, const std::vector<int>& rows, const std::vector<int>& cols);
/// Nonzero (r+1)-minors of the condition's region, as polynomials.
std::vector<SymPoly> condition_minors(const SliceChart& chart, const RankCondition& c);

}  // namespace cellgeom
