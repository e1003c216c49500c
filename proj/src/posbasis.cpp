#include "cellgeom/posbasis.hpp"

#include <algorithm>
#include <set>

#include "cellgeom/parallel.hpp"

namespace cellgeom {

namespace {

// Column j of U^-1 A U by back substitution, U upper unitriangular.
std::vector<LaurentPoly> transformed_column(const LaurentMatrix& a, const LaurentMatrix& u, int j) {
  const int d = static_cast<int>(a.size());
  std::vector<LaurentPoly> au(d);
  for (int i = 0; i < d; ++i)
    for (int l = 0; l <= j; ++l)
      if (!a[i][l].is_zero() && !u[l][j].is_zero()) au[i] += a[i][l] * u[l][j];
  std::vector<LaurentPoly> b(d);
  for (int i = d - 1; i >= 0; --i) {
    b[i] = std::move(au[i]);
    for (int p = i + 1; p < d; ++p)
      if (!u[i][p].is_zero() && !b[p].is_zero()) b[i] -= u[i][p] * b[p];
  }
  return b;
}

LaurentMatrix identity_matrix(int d) {
  LaurentMatrix u(d, std::vector<LaurentPoly>(d));
  for (int i = 0; i < d; ++i) u[i][i] = LaurentPoly(1);
  return u;
}

// c0 + sum_i c_i (v^i + v^-i), all c in [0, max_coeff], zero first.
std::vector<LaurentPoly> selfdual_candidates(int degree, int max_coeff) {
  std::vector<LaurentPoly> out;
  std::vector<int> c(degree + 1, 0);
  while (true) {
    std::vector<LaurentPoly::Term> terms;
    for (int i = 0; i <= degree; ++i) {
      if (c[i] == 0) continue;
      terms.emplace_back(i, c[i]);
      if (i) terms.emplace_back(-i, c[i]);
    }
    out.push_back(LaurentPoly::from_terms(std::move(terms)));
    int k = 0;
    while (k <= degree && c[k] == max_coeff) c[k++] = 0;
    if (k > degree) break;
    ++c[k];
  }
  return out;
}

bool descent_contains(const CoxeterElement& x, const CoxeterElement& y) {
  for (Side side : {Side::Left, Side::Right}) {
    const auto dx = descent_mask(x, side), dy = descent_mask(y, side);
    if ((dx & dy) != dy) return false;
  }
  return true;
}

struct Var {
  int i, j;
  std::vector<LaurentPoly> candidates;
};

struct Check {
  int s;
  int i, j;
};

class Search {
 public:
  Search(const CellModule& module, const SearchConfig& cfg) : module_(module), d_(module.dim()) {
    const auto& cell = module.vertices;
    for (int i = d_ - 1; i >= 0; --i) {
      for (int j = i + 1; j < d_; ++j) {
        if (!bruhat_leq(cell[i], cell[j]) || cell[i] == cell[j]) continue;
        if (cfg.descent_filter && !descent_contains(cell[i], cell[j])) continue;
        const int deg = std::min(cfg.max_degree, length(cell[j]) - length(cell[i]) - 1);
        if (deg < 0) continue;
        vars_.push_back({i, j, selfdual_candidates(deg, cfg.max_coeff)});
      }
    }
    var_at_.assign(d_, std::vector<int>(d_, -1));
    for (int t = 0; t < static_cast<int>(vars_.size()); ++t) var_at_[vars_[t].i][vars_[t].j] = t;
    schedule_checks();
  }

  bool root_checks_pass() const { return evaluate(root_checks_, identity_matrix(d_)); }
  int var_count() const { return static_cast<int>(vars_.size()); }
  const Var& var(int t) const { return vars_[t]; }

  // All completions with var 0 fixed to its candidate `first`.
  void run_from(int first, std::vector<CandidateBasis>& out) const {
    LaurentMatrix u = identity_matrix(d_);
    dfs(0, first, u, out);
  }

  void run_all(std::vector<CandidateBasis>& out) const {
    LaurentMatrix u = identity_matrix(d_);
    emit(u, out);
  }

 private:
  // Max search position among variables a transformed entry can depend on.
  void schedule_checks() {
    checks_.assign(vars_.size(), {});
    for (const auto& [s, a] : module_.action) {
      std::vector<std::vector<int>> last(d_, std::vector<int>(d_, -1));
      for (int j = 0; j < d_; ++j) {
        for (int i = d_ - 1; i >= 0; --i) {
          int m = -1;
          for (int l = 0; l <= j; ++l)
            if (!a[i][l].is_zero() && l != j && var_at_[l][j] >= 0) m = std::max(m, var_at_[l][j]);
          for (int p = i + 1; p < d_; ++p)
            if (var_at_[i][p] >= 0) m = std::max({m, var_at_[i][p], last[p][j]});
          last[i][j] = m;
          (m < 0 ? root_checks_ : checks_[m]).push_back({s, i, j});
        }
      }
    }
  }

  bool evaluate(const std::vector<Check>& checks, const LaurentMatrix& u) const {
    std::map<std::pair<int, int>, std::vector<LaurentPoly>> columns;
    for (const auto& c : checks) {
      auto key = std::make_pair(c.s, c.j);
      auto it = columns.find(key);
      if (it == columns.end())
        it = columns.emplace(key, transformed_column(module_.action.at(c.s), u, c.j)).first;
      if (!is_selfdual_nonneg(it->second[c.i])) return false;
    }
    return true;
  }

  void dfs(int t, int only, LaurentMatrix& u, std::vector<CandidateBasis>& out) const {
    const Var& v = vars_[t];
    const int lo = only >= 0 ? only : 0;
    const int hi = only >= 0 ? only + 1 : static_cast<int>(v.candidates.size());
    for (int k = lo; k < hi; ++k) {
      u[v.i][v.j] = v.candidates[k];
      if (!evaluate(checks_[t], u)) continue;
      if (t + 1 == var_count())
        emit(u, out);
      else
        dfs(t + 1, -1, u, out);
    }
    u[v.i][v.j] = LaurentPoly();
  }

  void emit(const LaurentMatrix& u, std::vector<CandidateBasis>& out) const {
    CandidateBasis b{module_.vertices, {}};
    for (const auto& v : vars_)
      if (!u[v.i][v.j].is_zero()) b.coeffs.emplace(std::make_pair(v.i, v.j), u[v.i][v.j]);
    out.push_back(std::move(b));
  }

  const CellModule& module_;
  int d_;
  std::vector<Var> vars_;
  std::vector<std::vector<int>> var_at_;
  std::vector<Check> root_checks_;
  std::vector<std::vector<Check>> checks_;
};

bool basis_less(const CandidateBasis& a, const CandidateBasis& b) {
  if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
  auto ia = a.coeffs.begin(), ib = b.coeffs.begin();
  for (; ia != a.coeffs.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return false;
}

}  // namespace

LaurentPoly CandidateBasis::coeff(int i, int j) const {
  if (i == j) return LaurentPoly(1);
  auto it = coeffs.find({i, j});
  return it == coeffs.end() ? LaurentPoly() : it->second;
}

LaurentMatrix CandidateBasis::matrix() const {
  const int d = static_cast<int>(cell.size());
  LaurentMatrix u = identity_matrix(d);
  for (const auto& [ij, p] : coeffs) u[ij.first][ij.second] = p;
  return u;
}

std::string CandidateBasis::to_string() const {
  if (is_trivial()) return "trivial";
  std::string out;
  for (const auto& [ij, p] : coeffs) {
    if (!out.empty()) out += "; ";
    out += "M'_" + cellgeom::to_string(cell[ij.second]) + " += (" + p.to_string() + ") M_" +
           cellgeom::to_string(cell[ij.first]);
  }
  return out;
}

LaurentMatrix action_in_basis(const CandidateBasis& basis, const CellModule& module, int s) {
  if (basis.cell != module.vertices) throw Error("basis and module have different cells");
  const auto u = basis.matrix();
  const auto& a = module.action.at(s);
  const int d = module.dim();
  LaurentMatrix b(d, std::vector<LaurentPoly>(d));
  for (int j = 0; j < d; ++j) {
    auto col = transformed_column(a, u, j);
    for (int i = 0; i < d; ++i) b[i][j] = std::move(col[i]);
  }
  return b;
}

bool admissible(const CandidateBasis& basis, const CellModule& module) {
  for (const auto& [ij, p] : basis.coeffs)
    if (ij.first >= ij.second) return false;
  for (const auto& [s, a] : module.action) {
    for (const auto& row : action_in_basis(basis, module, s))
      for (const auto& c : row)
        if (!is_selfdual_nonneg(c)) return false;
  }
  return true;
}

bool satisfies_shape(const CandidateBasis& basis, bool descent_filter) {
  for (const auto& [ij, p] : basis.coeffs) {
    const auto& x = basis.cell[ij.first];
    const auto& y = basis.cell[ij.second];
    if (x == y || !bruhat_leq(x, y)) return false;
    if (!is_selfdual_nonneg(p)) return false;
    if (descent_filter && !descent_contains(x, y)) return false;
  }
  return true;
}

std::vector<CandidateBasis> enumerate_bases(const CellModule& module, const SearchConfig& cfg) {
  if (cfg.max_degree < 0 || cfg.max_coeff < 0) throw Error("search bounds must be nonnegative");
  Search search(module, cfg);
  std::vector<CandidateBasis> out;
  if (!search.root_checks_pass()) return out;
  if (search.var_count() == 0) {
    search.run_all(out);
    return out;
  }
  const auto roots = search.var(0).candidates.size();
  std::vector<std::vector<CandidateBasis>> parts(roots);
  parallel_for(roots, cfg.threads, [&](std::size_t k, int) {
    search.run_from(static_cast<int>(k), parts[k]);
  });
  for (auto& p : parts)
    for (auto& b : p) out.push_back(std::move(b));
  std::sort(out.begin(), out.end(), basis_less);
  return out;
}

CandidateReport report_candidates(KLCache& cache, const SearchConfig& cfg) {
  CellStructure cs(cache);
  CandidateReport report{cache.system(), cfg, {}, {}};
  std::map<int, int> two_sided_index;
  for (const auto& ids : cs.cells(CellKind::TwoSided)) {
    std::vector<CoxeterElement> cell;
    for (int i : ids) cell.push_back(cache.element(i));
    sort_cell(cell);
    two_sided_index[cs.cell_id(ids.front(), CellKind::TwoSided)] =
        static_cast<int>(report.two_sided_cells.size());
    report.two_sided_cells.push_back(std::move(cell));
  }
  for (const auto& ids : cs.cells(CellKind::Left)) {
    CellCandidates cc;
    for (int i : ids) cc.cell.push_back(cache.element(i));
    sort_cell(cc.cell);
    cc.two_sided = two_sided_index.at(cs.cell_id(ids.front(), CellKind::TwoSided));
    cc.label = cache.system().family == Family::A ? partition_to_string(partition_label(cc.cell.front()))
                                                  : to_string(cc.cell.front());
    cc.bases = enumerate_bases(cell_module(cache, cc.cell), cfg);
    std::set<std::pair<int, int>> seen;
    for (const auto& b : cc.bases) {
      for (const auto& [ij, p] : b.coeffs) {
        const int x = cache.index_of(cc.cell[ij.first]);
        const int y = cache.index_of(cc.cell[ij.second]);
        if (cs.same_cell(x, y, CellKind::Right) && seen.insert(ij).second)
          cc.right_cell_pairs.emplace_back(cc.cell[ij.first], cc.cell[ij.second]);
      }
    }
    report.cells.push_back(std::move(cc));
  }
  std::stable_sort(report.cells.begin(), report.cells.end(), [](const auto& a, const auto& b) {
    return a.two_sided < b.two_sided;
  });
  return report;
}

}  // namespace cellgeom
