#pragma once

// Exact dense linear algebra over Q.

#include <functional>
#include <string>
#include <vector>

#include "cellgeom/numeric.hpp"

namespace cellgeom {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  static QMatrix identity(int n);
  static QMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  static QMatrix from_ints(const std::vector<std::vector<long>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  std::vector<Rational> row(int i) const;
  QMatrix transpose() const;
  /// Rows [r0, r0+nr), columns [c0, c0+nc).
  QMatrix block(int r0, int c0, int nr, int nc) const;
  QMatrix select(const std::vector<int>& rows, const std::vector<int>& cols) const;
  bool is_zero() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  std::string to_string() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

/// Fraction-free (Bareiss) elimination after clearing row denominators.
int rank(const QMatrix& m);
int kernel_dim(const QMatrix& m);
/// Basis of {x : m x = 0}, one vector per free column of the reduced form.
std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m);
Rational determinant(const QMatrix& m);
/// adj(m) with m * adj(m) = det(m) I. Rank-aware, so singular input is cheap.
QMatrix adjugate(const QMatrix& m);

/// Row space accumulated one vector at a time, kept in reduced echelon form.
class EchelonBasis {
 public:
  explicit EchelonBasis(int cols) : cols_(cols) {}
  /// Returns true if v was independent of the rows added so far.
  bool add(std::vector<Rational> v);
  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

 private:
  int cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

/// Entry of an affine matrix: a constant or one variable.
struct GridEntry {
  int var = -1;  // >= 0 for a variable
  Rational value;

  static GridEntry constant(const Rational& c) { return {-1, c}; }
  static GridEntry variable(int k) { return {k, 0}; }
  bool is_var() const { return var >= 0; }
};

using Grid = std::vector<std::vector<GridEntry>>;

int grid_var_count(const Grid& g);
QMatrix evaluate_grid(const Grid& g, const std::vector<Rational>& point);

/// Calls f(gradient) for every k x k minor of the grid (rows and columns in
/// lexicographic order), the gradient taken with respect to all variables and
/// evaluated at `point`. Each partial derivative is the signed complementary
/// cofactor. Stops early when f returns false.
void for_each_minor_gradient(const Grid& g, const std::vector<Rational>& point, int k,
                             const std::function<bool(const std::vector<Rational>&)>& f);
/// All gradients stacked, one row per minor.
QMatrix minor_gradients(const Grid& g, const std::vector<Rational>& point, int k);

}  // namespace cellgeom
