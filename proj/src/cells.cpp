#include "cellgeom/cells.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cellgeom {

namespace {

using Graph = std::vector<std::vector<int>>;

// Edges y -> x whenever Hbar_x occurs in Hbar_s Hbar_y (left) or
// Hbar_y Hbar_s (right) for some generator s.
void add_preorder_edges(KLCache& cache, Side side, Graph& g) {
  const int n = cache.size();
  const auto gens = cache.system().generators();
  for (int y = 0; y < n; ++y) {
    const auto& row = cache.row(y);
    for (int s : gens) {
      if (cache.is_descent(y, s, side)) continue;
      g[y].push_back(cache.mult_gen(y, s, side));
      for (const auto& [z, h] : row) {
        if (z != y && cache.is_descent(z, s, side) && h.coeff(1) != 0) g[y].push_back(z);
      }
    }
  }
}

// Tarjan's algorithm, iterative. Component ids are arbitrary; callers
// canonicalize.
std::vector<int> strongly_connected(const Graph& g) {
  const int n = static_cast<int>(g.size());
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  int counter = 0, ncomp = 0;
  std::vector<std::pair<int, std::size_t>> call;
  for (int root = 0; root < n; ++root) {
    if (index[root] >= 0) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, next] = call.back();
      if (next < g[v].size()) {
        const int w = g[v][next++];
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        int w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
      const int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return comp;
}

// Relabel components by their smallest member so ids are deterministic.
std::vector<int> canonical_ids(const std::vector<int>& comp) {
  std::map<int, int> first;
  for (int i = 0; i < static_cast<int>(comp.size()); ++i) first.try_emplace(comp[i], i);
  std::vector<int> out(comp.size());
  for (int i = 0; i < static_cast<int>(comp.size()); ++i) out[i] = first[comp[i]];
  return out;
}

bool cell_order(const CoxeterElement& a, const CoxeterElement& b) {
  const int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return to_string(a) < to_string(b);
}

}  // namespace

std::vector<int> Tableau::shape() const {
  std::vector<int> s;
  for (const auto& r : rows) s.push_back(static_cast<int>(r.size()));
  return s;
}

int Tableau::size() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.size());
  return n;
}

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) out += '\n';
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      if (j) out += ' ';
      out += digit_char(rows[i][j]);
    }
  }
  return out;
}

bool Tableau::is_standard() const {
  const int n = size();
  std::vector<bool> seen(n + 1, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty() || (i && rows[i].size() > rows[i - 1].size())) return false;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const int x = rows[i][j];
      if (x < 1 || x > n || seen[x]) return false;
      seen[x] = true;
      if (j && rows[i][j - 1] >= x) return false;
      if (i && rows[i - 1][j] >= x) return false;
    }
  }
  return true;
}

TableauPair rsk(const CoxeterElement& x) {
  if (x.system().family != Family::A) throw Error("RSK is only defined here for type A");
  TableauPair tp;
  auto& P = tp.P.rows;
  auto& Q = tp.Q.rows;
  for (int pos = 1; pos <= x.size(); ++pos) {
    int val = x(pos);
    std::size_t r = 0;
    while (true) {
      if (r == P.size()) {
        P.push_back({val});
        Q.push_back({pos});
        break;
      }
      auto it = std::upper_bound(P[r].begin(), P[r].end(), val);
      if (it == P[r].end()) {
        P[r].push_back(val);
        Q[r].push_back(pos);
        break;
      }
      std::swap(val, *it);
      ++r;
    }
  }
  return tp;
}

std::vector<int> transpose_partition(const std::vector<int>& lambda) {
  std::vector<int> out;
  if (lambda.empty()) return out;
  for (int c = 0; c < lambda.front(); ++c) {
    int h = 0;
    for (int part : lambda)
      if (part > c) ++h;
    out.push_back(h);
  }
  return out;
}

bool same_cell(const CoxeterElement& x, const CoxeterElement& y, CellKind kind) {
  if (x.system() != y.system()) throw Error("elements from different systems");
  const auto a = rsk(x), b = rsk(y);
  switch (kind) {
    case CellKind::Left:
      return a.Q == b.Q;
    case CellKind::Right:
      return a.P == b.P;
    case CellKind::TwoSided:
      return a.P.shape() == b.P.shape();
  }
  return false;
}

CellStructure::CellStructure(KLCache& cache) : cache_(&cache) {
  cache.build_all();
  const int n = cache.size();
  Graph left(n), right(n), both(n);
  add_preorder_edges(cache, Side::Left, left);
  add_preorder_edges(cache, Side::Right, right);
  for (int i = 0; i < n; ++i) {
    both[i] = left[i];
    both[i].insert(both[i].end(), right[i].begin(), right[i].end());
  }
  left_ = canonical_ids(strongly_connected(left));
  right_ = canonical_ids(strongly_connected(right));
  two_sided_ = canonical_ids(strongly_connected(both));
}

int CellStructure::cell_id(int element, CellKind kind) const {
  switch (kind) {
    case CellKind::Left:
      return left_[element];
    case CellKind::Right:
      return right_[element];
    case CellKind::TwoSided:
      return two_sided_[element];
  }
  return -1;
}

std::vector<std::vector<int>> CellStructure::cells(CellKind kind) const {
  std::map<int, std::vector<int>> groups;
  for (int i = 0; i < cache_->size(); ++i) groups[cell_id(i, kind)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [id, members] : groups) out.push_back(std::move(members));
  return out;
}

void sort_cell(std::vector<CoxeterElement>& cell) { std::sort(cell.begin(), cell.end(), cell_order); }

CellPartition compute_cells(KLCache& cache, CellKind kind) {
  CellStructure cs(cache);
  CellPartition out;
  for (const auto& ids : cs.cells(kind)) {
    std::vector<CoxeterElement> cell;
    for (int i : ids) cell.push_back(cache.element(i));
    sort_cell(cell);
    out.push_back(std::move(cell));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return cell_order(a.front(), b.front()); });
  return out;
}

CellPartition left_cells(KLCache& cache) { return compute_cells(cache, CellKind::Left); }

bool same_cell(KLCache& cache, const CoxeterElement& x, const CoxeterElement& y, CellKind kind) {
  CellStructure cs(cache);
  return cs.same_cell(cache.index_of(x), cache.index_of(y), kind);
}

WGraph wgraph_of_cell(KLCache& cache, std::vector<CoxeterElement> cell) {
  sort_cell(cell);
  WGraph g;
  std::vector<int> idx;
  for (const auto& w : cell) {
    g.vertices.push_back({w, descents(w, Side::Left)});
    idx.push_back(cache.index_of(w));
  }
  for (int j = 0; j < static_cast<int>(idx.size()); ++j) {
    for (int i = 0; i < j; ++i) {
      int lo = idx[i], hi = idx[j];
      if (cache.length(lo) > cache.length(hi)) std::swap(lo, hi);
      if (cache.length(lo) == cache.length(hi)) continue;
      const Integer m = cache.mu_index(lo, hi);
      if (m != 0) {
        const bool i_is_lower = lo == idx[i];
        g.edges.push_back({i_is_lower ? i : j, i_is_lower ? j : i, m});
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end(), [](const WGraphEdge& a, const WGraphEdge& b) {
    return std::tie(a.lower, a.upper) < std::tie(b.lower, b.upper);
  });
  return g;
}

int CellModule::vertex_index(const CoxeterElement& w) const {
  auto it = std::find(vertices.begin(), vertices.end(), w);
  return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
}

CellModule cell_module(KLCache& cache, std::vector<CoxeterElement> cell) {
  sort_cell(cell);
  CellModule m{cache.system(), cell, {}};
  const int d = m.dim();
  std::map<int, int> local;  // cache index -> vertex index
  for (int i = 0; i < d; ++i) local[cache.index_of(cell[i])] = i;
  const LaurentPoly quantum_two = v_pow(1) + v_pow(-1);
  for (int s : cache.system().generators()) {
    LaurentMatrix a(d, std::vector<LaurentPoly>(d));
    for (const auto& [x, j] : local) {
      if (cache.is_descent(x, s, Side::Left)) {
        a[j][j] = quantum_two;
        continue;
      }
      // Hbar_s Hbar_x = Hbar_{sx} + sum_{z<x, sz<z} mu(z,x) Hbar_z; terms
      // outside the cell vanish in the quotient.
      if (auto it = local.find(cache.mult_gen(x, s, Side::Left)); it != local.end())
        a[it->second][j] += LaurentPoly(1);
      for (const auto& [z, h] : cache.row(x)) {
        if (z == x || !cache.is_descent(z, s, Side::Left)) continue;
        auto it = local.find(z);
        if (it == local.end()) continue;
        const Integer mu = h.coeff(1);
        if (mu != 0) a[it->second][j] += LaurentPoly(mu);
      }
    }
    m.action.emplace(s, std::move(a));
  }
  return m;
}

std::vector<int> parabolic_generators(const std::vector<int>& lambda) {
  std::vector<int> gens;
  int start = 1;
  for (int part : lambda) {
    if (part < 1) throw Error("partition parts must be positive");
    for (int i = start; i < start + part - 1; ++i) gens.push_back(i);
    start += part;
  }
  return gens;
}

CoxeterElement longest_of_partition(const std::vector<int>& lambda) {
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (n < 2) throw Error("partition must have size at least 2");
  return longest_parabolic_elt(CoxeterSystem::type_a(n), parabolic_generators(lambda));
}

std::vector<CoxeterElement> cell_of_partition(KLCache& cache, const std::vector<int>& lambda) {
  if (cache.system().family != Family::A) throw Error("cell_of_partition needs type A");
  const int n = std::accumulate(lambda.begin(), lambda.end(), 0);
  if (n != cache.system().degree())
    throw Error("partition " + partition_to_string(lambda) + " is not a partition of " +
                std::to_string(cache.system().degree()));
  if (!std::is_sorted(lambda.rbegin(), lambda.rend())) throw Error("parts must be non-increasing");
  const CoxeterElement w = longest_of_partition(lambda);
  CellStructure cs(cache);
  const int id = cs.cell_id(cache.index_of(w), CellKind::Left);
  std::vector<CoxeterElement> cell;
  for (int i = 0; i < cache.size(); ++i)
    if (cs.cell_id(i, CellKind::Left) == id) cell.push_back(cache.element(i));
  sort_cell(cell);
  return cell;
}

std::vector<int> partition_label(const CoxeterElement& x) {
  return transpose_partition(rsk(x).P.shape());
}

std::vector<int> parse_partition(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error("bad partition part '" + tok + "'");
    }
  }
  if (out.empty()) throw Error("empty partition");
  return out;
}

std::string partition_to_string(const std::vector<int>& lambda) {
  std::string out = "(";
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(lambda[i]);
  }
  return out + ")";
}

}  // namespace cellgeom
