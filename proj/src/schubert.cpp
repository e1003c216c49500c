#include "cellgeom/schubert.hpp"

#include <algorithm>
#include <numeric>

namespace cellgeom {

namespace {

void check_type_a(const CoxeterElement& w) {
  if (w.system().family != Family::A) throw Error("Schubert charts need a permutation");
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

std::vector<int> iota_vec(int from, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), from);
  return v;
}

}  // namespace

Grid SliceChart::affine_grid() const {
  Grid g(n, std::vector<GridEntry>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& s = grid[i][j];
      g[i][j] = s.kind == SlotKind::Var ? GridEntry::variable(s.var)
                                        : GridEntry::constant(s.kind == SlotKind::One ? 1 : 0);
    }
  return g;
}

QMatrix SliceChart::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != var_count)
    throw Error("point has " + std::to_string(point.size()) + " coordinates, chart has " +
                std::to_string(var_count) + " variables");
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& s = grid[i][j];
      if (s.kind == SlotKind::One)
        m(i, j) = 1;
      else if (s.kind == SlotKind::Var)
        m(i, j) = point[s.var];
    }
  return m;
}

std::string SliceChart::var_name(int k) const {
  const auto [r, c] = var_pos.at(k);
  return std::string("g") + digit_char(r) + digit_char(c);
}

int SliceChart::var_at(int row, int col) const {
  if (row < 1 || col < 1 || row > n || col > n) return -1;
  const auto& s = grid[row - 1][col - 1];
  return s.kind == SlotKind::Var ? s.var : -1;
}

int rank_profile(const CoxeterElement& y, int a, int b) {
  check_type_a(y);
  const int n = y.size();
  if (a < 1 || a > n || b < 1 || b > n) throw Error("rank_profile corner out of range");
  int r = 0;
  for (int j = 1; j <= b; ++j)
    if (y(j) >= a) ++r;
  return r;
}

SliceChart slice_chart(const CoxeterElement& x) {
  check_type_a(x);
  SliceChart c;
  c.n = x.size();
  c.x = x;
  c.grid.assign(c.n, std::vector<ChartSlot>(c.n));
  std::vector<bool> used_row(c.n + 1, false);
  for (int j = 1; j <= c.n; ++j) {
    for (int i = 1; i <= c.n; ++i) {
      auto& s = c.grid[i - 1][j - 1];
      if (i == x(j)) {
        s.kind = SlotKind::One;
      } else if (i > x(j) && !used_row[i]) {
        s.kind = SlotKind::Var;
        s.var = c.var_count++;
        c.var_pos.emplace_back(i, j);
      }
    }
    used_row[x(j)] = true;
  }
  return c;
}

std::vector<RankCondition> essential_conditions(const CoxeterElement& y) {
  check_type_a(y);
  const int n = y.size();
  // w(p) = y^-1(n+1-p) turns southwest rank bounds of y into northwest bounds
  // of w, whose essential set is given by the diagram.
  const auto yi = inverse(y);
  std::vector<int> w(n + 1), wi(n + 1);
  for (int p = 1; p <= n; ++p) {
    w[p] = yi(n + 1 - p);
    wi[w[p]] = p;
  }
  auto in_diagram = [&](int p, int q) { return p <= n && q <= n && w[p] > q && wi[q] > p; };
  std::vector<RankCondition> out;
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      if (!in_diagram(p, q) || in_diagram(p + 1, q) || in_diagram(p, q + 1)) continue;
      const int a = n + 1 - p;
      out.push_back({a, q, rank_profile(y, a, q)});
    }
  return out;
}

std::vector<RankCondition> rank_conditions(const CoxeterElement& x, const CoxeterElement& y, bool prune,
                                           std::vector<std::string>* warnings) {
  check_type_a(x);
  check_type_a(y);
  if (x.system() != y.system()) throw Error("x and y live in different groups");
  if (warnings && !bruhat_leq(x, y))
    warnings->push_back(to_string(x) + " is not below " + to_string(y) + " in Bruhat order; the slice misses Z_y");
  if (prune) return essential_conditions(y);
  std::vector<RankCondition> out;
  const int n = y.size();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) out.push_back({a, b, rank_profile(y, a, b)});
  return out;
}

QMatrix condition_submatrix(const QMatrix& g, const RankCondition& c) {
  return g.block(c.a - 1, 0, g.rows() - c.a + 1, c.b);
}

bool in_slice_schubert(const SliceChart& chart, const std::vector<RankCondition>& conditions,
                       const std::vector<Rational>& point) {
  const QMatrix g = chart.evaluate(point);
  for (const auto& c : conditions)
    if (rank(condition_submatrix(g, c)) > c.bound) return false;
  return true;
}

std::vector<std::string> block_pattern(const SliceChart& chart, int k) {
  if (k < 1 || chart.n % k) throw Error("block size must divide n");
  std::vector<std::string> out;
  for (int bi = 0; bi < chart.n / k; ++bi) {
    std::string row;
    for (int bj = 0; bj < chart.n / k; ++bj) {
      bool zero = true, var = true, anti = true, ident = true;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          const auto kind = chart.grid[bi * k + i][bj * k + j].kind;
          const bool one_here = kind == SlotKind::One;
          zero &= kind == SlotKind::Zero;
          var &= kind == SlotKind::Var;
          anti &= kind != SlotKind::Var && one_here == (i + j == k - 1);
          ident &= kind != SlotKind::Var && one_here == (i == j);
        }
      row += zero ? '0' : var ? 'V' : anti ? 'J' : ident ? 'I' : '?';
    }
    out.push_back(row);
  }
  return out;
}

void add_tangent_equations(const SliceChart& chart, const RankCondition& c, const std::vector<Rational>& point,
                           TangentMethod method, EchelonBasis& out) {
  const QMatrix sub = condition_submatrix(chart.evaluate(point), c);
  const int rk = rank(sub);
  if (rk > c.bound) throw Error("point violates the rank condition");
  if (rk < c.bound) return;
  const int rows = sub.rows(), cols = sub.cols();
  if (method == TangentMethod::Kernel) {
    const auto right = kernel_basis(sub);
    const auto left = kernel_basis(sub.transpose());
    for (const auto& p : left)
      for (const auto& q : right) {
        std::vector<Rational> eq(chart.var_count);
        bool nonzero = false;
        for (int i = 0; i < rows; ++i) {
          if (p[i] == 0) continue;
          for (int j = 0; j < cols; ++j) {
            const int v = chart.var_at(c.a + i, j + 1);
            if (v < 0 || q[j] == 0) continue;
            eq[v] += p[i] * q[j];
            nonzero = true;
          }
        }
        if (nonzero) out.add(std::move(eq));
      }
    return;
  }
  const Grid full = chart.affine_grid();
  Grid g;
  for (int i = c.a - 1; i < chart.n; ++i) g.emplace_back(full[i].begin(), full[i].begin() + c.b);
  const int cap = (rows - c.bound) * (cols - c.bound);
  int added = 0;
  for_each_minor_gradient(g, point, c.bound + 1, [&](const std::vector<Rational>& grad) {
    if (out.add(grad)) ++added;
    return added < cap && out.rank() < out.cols();
  });
}

int slice_tangent_dim(const SliceChart& chart, const std::vector<RankCondition>& conditions,
                      const std::vector<Rational>& point, TangentMethod method) {
  EchelonBasis eqs(chart.var_count);
  for (const auto& c : conditions) {
    if (eqs.rank() == chart.var_count) break;
    add_tangent_equations(chart, c, point, method, eqs);
  }
  return chart.var_count - eqs.rank();
}

SymPoly SymPoly::constant(const Integer& c) {
  SymPoly p;
  if (c != 0) p.terms_[{}] = c;
  return p;
}

SymPoly SymPoly::variable(int k) {
  SymPoly p;
  p.terms_[{k}] = 1;
  return p;
}

SymPoly& SymPoly::operator+=(const SymPoly& o) {
  for (const auto& [m, c] : o.terms_) {
    auto& slot = terms_[m];
    slot += c;
    if (slot == 0) terms_.erase(m);
  }
  return *this;
}

SymPoly& SymPoly::operator-=(const SymPoly& o) { return *this += -o; }

SymPoly SymPoly::operator-() const {
  SymPoly p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

SymPoly operator*(const SymPoly& a, const SymPoly& b) {
  SymPoly p;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      std::vector<int> m;
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      auto& slot = p.terms_[m];
      slot += ca * cb;
      if (slot == 0) p.terms_.erase(m);
    }
  return p;
}

Rational SymPoly::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int k : m) t *= point.at(k);
    total += t;
  }
  return total;
}

SymPoly SymPoly::derivative(int k) const {
  SymPoly p;
  for (const auto& [m, c] : terms_) {
    const auto cnt = std::count(m.begin(), m.end(), k);
    if (!cnt) continue;
    std::vector<int> rest = m;
    rest.erase(std::find(rest.begin(), rest.end(), k));
    SymPoly q;
    q.terms_[rest] = c * static_cast<long>(cnt);
    p += q;
  }
  return p;
}

std::string SymPoly::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest degree first, reads like the usual ad - bc.
  std::vector<std::pair<std::vector<int>, Integer>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.first.size() > b.first.size(); });
  for (const auto& [m, c] : ordered) {
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (std::size_t i = 0; i < m.size(); ++i) mono += (i ? "*" : "") + name(m[i]);
    if (mono.empty())
      out += mag.get_str();
    else
      out += (mag == 1 ? "" : mag.get_str() + "*") + mono;
  }
  return out;
}

SymPoly symbolic_minor(const Grid& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  if (static_cast<int>(cols.size()) != k) throw Error("minor needs as many rows as columns");
  std::vector<int> perm = iota_vec(0, k);
  SymPoly det;
  do {
    int inversions = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (perm[i] > perm[j]) ++inversions;
    SymPoly term = SymPoly::constant(inversions % 2 ? -1 : 1);
    for (int i = 0; i < k && !term.is_zero(); ++i) {
      const auto& e = g[rows[i]][cols[perm[i]]];
      if (e.is_var()) {
        term = term * SymPoly::variable(e.var);
      } else {
        if (e.value.get_den() != 1) throw Error("symbolic minors need integer constants");
        term = term * SymPoly::constant(e.value.get_num());
      }
    }
    det += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return det;
}

std::vector<SymPoly> condition_minors(const SliceChart& chart, const RankCondition& c) {
  const Grid g = chart.affine_grid();
  const int rows = chart.n - c.a + 1, k = c.bound + 1;
  std::vector<SymPoly> out;
  if (k > rows || k > c.b) return out;
  std::vector<int> r = iota_vec(0, k);
  do {
    std::vector<int> cc = iota_vec(0, k);
    do {
      std::vector<int> abs_rows;
      for (int i : r) abs_rows.push_back(c.a - 1 + i);
      auto m = symbolic_minor(g, abs_rows, cc);
      if (!m.is_zero()) out.push_back(std::move(m));
    } while (next_combination(cc, c.b));
  } while (next_combination(r, rows));
  return out;
}

}  // namespace cellgeom
