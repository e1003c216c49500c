#pragma once

// Slow independent reference implementations used only by the tests.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "cellgeom/coxeter.hpp"
#include "cellgeom/laurent.hpp"
#include "cellgeom/linalg.hpp"

namespace oracle {

using namespace cellgeom;
using Vec = std::map<CoxeterElement, LaurentPoly>;

inline void add_to(Vec& v, const CoxeterElement& w, const LaurentPoly& p) {
  auto& slot = v[w];
  slot += p;
  if (slot.is_zero()) v.erase(w);
}

// h * H_s from the quadratic relation alone.
inline Vec times_gen(const Vec& h, int s) {
  Vec out;
  for (const auto& [w, p] : h) {
    const auto ws = mult_gen(w, s, Side::Right);
    if (length(ws) > length(w)) {
      add_to(out, ws, p);
    } else {
      add_to(out, ws, p);
      add_to(out, w, p * (v_pow(-1) - v_pow(1)));
    }
  }
  return out;
}

// bar(H_w) as the product of H_s^-1 = H_s + (v - v^-1) along a word found by
// peeling right descents.
inline Vec bar_standard(const CoxeterElement& w) {
  std::vector<int> word;
  CoxeterElement cur = w;
  while (!cur.is_identity()) {
    for (int s : cur.system().generators())
      if (length(mult_gen(cur, s, Side::Right)) < length(cur)) {
        word.push_back(s);
        cur = mult_gen(cur, s, Side::Right);
        break;
      }
  }
  Vec t{{CoxeterElement::identity(w.system()), LaurentPoly(1)}};
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    Vec next = times_gen(t, *it);
    for (const auto& [x, p] : t) add_to(next, x, p * (v_pow(1) - v_pow(-1)));
    t = std::move(next);
  }
  return t;
}

// h_{x,w} for all x from bar invariance: h_y - bar(h_y) = sum_{x>y} bar(h_x) r_{y,x},
// solved downwards in length.
inline std::map<CoxeterElement, LaurentPoly> kl_row(const CoxeterElement& w) {
  std::vector<CoxeterElement> all = enumerate_group(w.system());
  std::map<CoxeterElement, Vec> bars;
  std::map<CoxeterElement, LaurentPoly> h;
  h[w] = LaurentPoly(1);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return length(a) > length(b); });
  // r_{y,x}: coefficient of H_y in bar(H_x).
  for (const auto& x : all)
    if (length(x) <= length(w)) bars[x] = bar_standard(x);
  for (const auto& y : all) {
    if (length(y) >= length(w)) continue;
    LaurentPoly q;
    for (const auto& [x, hx] : h) {
      auto it = bars[x].find(y);
      if (it != bars[x].end()) q += bar(hx) * it->second;
    }
    std::vector<LaurentPoly::Term> pos;
    for (const auto& [e, c] : q.terms())
      if (e > 0) pos.emplace_back(e, c);
    auto hy = LaurentPoly::from_terms(pos);
    if (!hy.is_zero()) h[y] = hy;
  }
  return h;
}

// Bruhat order through the subword property: the lower interval of y is the
// set of products of subwords of one reduced word.
inline std::set<CoxeterElement> lower_interval(const CoxeterElement& y) {
  std::vector<int> word;
  CoxeterElement cur = y;
  while (!cur.is_identity()) {
    for (int s : cur.system().generators())
      if (length(mult_gen(cur, s, Side::Right)) < length(cur)) {
        word.insert(word.begin(), s);
        cur = mult_gen(cur, s, Side::Right);
        break;
      }
  }
  std::set<CoxeterElement> reach{CoxeterElement::identity(y.system())};
  for (int s : word) {
    std::set<CoxeterElement> next = reach;
    for (const auto& z : reach) next.insert(mult_gen(z, s, Side::Right));
    reach = std::move(next);
  }
  return reach;
}

// Word length by breadth-first search in the Cayley graph.
inline std::map<CoxeterElement, int> bfs_lengths(const CoxeterSystem& sys) {
  std::map<CoxeterElement, int> dist;
  std::queue<CoxeterElement> q;
  const auto e = CoxeterElement::identity(sys);
  dist[e] = 0;
  q.push(e);
  while (!q.empty()) {
    const auto w = q.front();
    q.pop();
    for (int s : sys.generators()) {
      const auto ws = mult_gen(w, s, Side::Right);
      if (!dist.count(ws)) {
        dist[ws] = dist[w] + 1;
        q.push(ws);
      }
    }
  }
  return dist;
}

// Polynomial with rational coefficients in numbered variables; the gradient
// oracle expands minors by permutations and differentiates term by term.
using Mono = std::vector<int>;
using Poly = std::map<Mono, Rational>;

inline Poly minor_poly(const Grid& g, const std::vector<int>& rows, const std::vector<int>& cols) {
  const int k = static_cast<int>(rows.size());
  std::vector<int> p(k);
  for (int i = 0; i < k; ++i) p[i] = i;
  Poly out;
  do {
    int sign = 1;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (p[i] > p[j]) sign = -sign;
    Rational c = sign;
    Mono m;
    for (int i = 0; i < k; ++i) {
      const auto& e = g[rows[i]][cols[p[i]]];
      if (e.is_var())
        m.push_back(e.var);
      else
        c *= e.value;
    }
    if (c == 0) continue;
    std::sort(m.begin(), m.end());
    out[m] += c;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Rational eval_derivative(const Poly& f, int var, const std::vector<Rational>& point) {
  Rational total = 0;
  for (const auto& [m, c] : f) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != var) continue;
      Rational t = c;
      for (std::size_t j = 0; j < m.size(); ++j)
        if (j != i) t *= point[m[j]];
      total += t;
    }
  }
  return total;
}

inline bool next_comb(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

inline std::vector<std::vector<Rational>> minor_gradients(const Grid& g, const std::vector<Rational>& point, int k) {
  const int r = static_cast<int>(g.size()), c = static_cast<int>(g[0].size());
  std::vector<std::vector<Rational>> out;
  std::vector<int> rows(k);
  for (int i = 0; i < k; ++i) rows[i] = i;
  do {
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    do {
      const Poly f = minor_poly(g, rows, cols);
      std::vector<Rational> grad(point.size());
      for (std::size_t v = 0; v < point.size(); ++v) grad[v] = eval_derivative(f, static_cast<int>(v), point);
      out.push_back(std::move(grad));
    } while (next_comb(cols, c));
  } while (next_comb(rows, r));
  return out;
}

}  // namespace oracle
