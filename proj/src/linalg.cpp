#include "cellgeom/linalg.hpp"

#include <algorithm>
#include <set>

namespace cellgeom {

namespace {

// Integer matrix with each row scaled by the lcm of its denominators.
std::vector<std::vector<Integer>> integer_rows(const QMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (int j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

// Bareiss elimination in place; returns the rank and the pivot columns.
int bareiss(std::vector<std::vector<Integer>>& a, int cols, std::vector<int>* pivot_cols = nullptr) {
  const int rows = static_cast<int>(a.size());
  Integer prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        a[i][j] = a[i][j] * a[r][c] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<int> rref(QMatrix& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw Error("ragged matrix rows");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

QMatrix QMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> q;
  for (const auto& r : rows) q.emplace_back(r.begin(), r.end());
  return from_rows(q);
}

std::vector<Rational> QMatrix::row(int i) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(i) * cols_,
          data_.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols_};
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

QMatrix QMatrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || nr < 0 || nc < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    throw Error("block out of range");
  QMatrix b(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

QMatrix QMatrix::select(const std::vector<int>& rows, const std::vector<int>& cols) const {
  QMatrix b(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) b(i, j) = (*this)(rows[i], cols[j]);
  return b;
}

bool QMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) throw Error("dimension mismatch in product");
  QMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QMatrix operator+(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("dimension mismatch in sum");
  QMatrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

QMatrix operator-(const QMatrix& a, const QMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("dimension mismatch in difference");
  QMatrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

std::string QMatrix::to_string() const {
  std::string out = "[";
  for (int i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).get_str();
    }
    out += "]";
  }
  return out + "]";
}

int rank(const QMatrix& m) {
  auto a = integer_rows(m);
  return bareiss(a, m.cols());
}

int kernel_dim(const QMatrix& m) { return m.cols() - rank(m); }

std::vector<std::vector<Rational>> kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  const auto pivots = rref(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(static_cast<int>(i), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  // Bareiss with sign tracking; the last pivot is det of the scaled matrix.
  Integer scale = 1;
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (int i = 0; i < n; ++i) {
    Integer l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  Rational d(sign * a[n - 1][n - 1], scale);
  d.canonicalize();
  return d;
}

QMatrix adjugate(const QMatrix& m) {
  if (m.rows() != m.cols()) throw Error("adjugate of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return {};
  if (n == 1) return QMatrix::identity(1);
  const int r = rank(m);
  if (r <= n - 2) return QMatrix(n, n);
  if (r == n) {
    // Solve m X = det(m) I column by column via the reduced form of [m | I].
    QMatrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
      aug(i, n + i) = 1;
    }
    rref(aug);
    const Rational d = determinant(m);
    QMatrix adj(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) adj(i, j) = d * aug(i, n + j);
    return adj;
  }
  // Rank n-1: adj = c * x y^T with m x = 0 and y^T m = 0. Fix c from one
  // nonzero cofactor.
  const auto x = kernel_basis(m).front();
  const auto y = kernel_basis(m.transpose()).front();
  int i0 = 0, j0 = 0;
  while (x[i0] == 0) ++i0;
  while (y[j0] == 0) ++j0;
  std::vector<int> rows, cols;
  for (int k = 0; k < n; ++k) {
    if (k != j0) rows.push_back(k);
    if (k != i0) cols.push_back(k);
  }
  // adj(i0, j0) = (-1)^(i0+j0) * minor with row j0 and column i0 removed.
  Rational cof = determinant(m.select(rows, cols));
  if ((i0 + j0) % 2) cof = -cof;
  const Rational c = cof / (x[i0] * y[j0]);
  QMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) adj(i, j) = c * x[i] * y[j];
  return adj;
}

bool EchelonBasis::add(std::vector<Rational> v) {
  if (static_cast<int>(v.size()) != cols_) throw Error("vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const int p = pivots_[k];
    if (v[p] == 0) continue;
    const Rational f = v[p];
    for (int j = p; j < cols_; ++j)
      if (rows_[k][j] != 0) v[j] -= f * rows_[k][j];
  }
  int p = 0;
  while (p < cols_ && v[p] == 0) ++p;
  if (p == cols_) return false;
  const Rational inv = 1 / v[p];
  for (int j = p; j < cols_; ++j) v[j] *= inv;
  // Keep the form reduced so later reductions stay single-pass.
  for (auto& row : rows_) {
    if (row[p] == 0) continue;
    const Rational f = row[p];
    for (int j = p; j < cols_; ++j)
      if (v[j] != 0) row[j] -= f * v[j];
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

int grid_var_count(const Grid& g) {
  int n = 0;
  for (const auto& row : g)
    for (const auto& e : row)
      if (e.is_var()) n = std::max(n, e.var + 1);
  return n;
}

QMatrix evaluate_grid(const Grid& g, const std::vector<Rational>& point) {
  const int r = static_cast<int>(g.size());
  const int c = r ? static_cast<int>(g[0].size()) : 0;
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) {
      const auto& e = g[i][j];
      if (!e.is_var()) {
        m(i, j) = e.value;
        continue;
      }
      if (e.var >= static_cast<int>(point.size())) throw Error("point misses variable " + std::to_string(e.var));
      m(i, j) = point[e.var];
    }
  return m;
}

void for_each_minor_gradient(const Grid& g, const std::vector<Rational>& point, int k,
                             const std::function<bool(const std::vector<Rational>&)>& f) {
  const int r = static_cast<int>(g.size());
  const int c = r ? static_cast<int>(g[0].size()) : 0;
  if (k < 1 || k > r || k > c) throw Error("minor size exceeds matrix dimensions");
  const int nvars = std::max(grid_var_count(g), static_cast<int>(point.size()));
  const QMatrix m = evaluate_grid(g, point);
  std::vector<int> rows(k), cols(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  do {
    for (int j = 0; j < k; ++j) cols[j] = j;
    do {
      std::vector<Rational> grad(nvars);
      bool has_var = false;
      for (int a = 0; a < k && !has_var; ++a)
        for (int b = 0; b < k; ++b)
          if (g[rows[a]][cols[b]].is_var()) {
            has_var = true;
            break;
          }
      if (has_var) {
        const QMatrix adj = adjugate(m.select(rows, cols));
        for (int a = 0; a < k; ++a)
          for (int b = 0; b < k; ++b) {
            const auto& e = g[rows[a]][cols[b]];
            if (e.is_var()) grad[e.var] += adj(b, a);
          }
      }
      if (!f(grad)) return;
    } while (next_combination(cols, c));
  } while (next_combination(rows, r));
}

QMatrix minor_gradients(const Grid& g, const std::vector<Rational>& point, int k) {
  std::vector<std::vector<Rational>> rows;
  for_each_minor_gradient(g, point, k, [&](const std::vector<Rational>& grad) {
    rows.push_back(grad);
    return true;
  });
  if (rows.empty()) return QMatrix(0, std::max(grid_var_count(g), static_cast<int>(point.size())));
  return QMatrix::from_rows(rows);
}

}  // namespace cellgeom
