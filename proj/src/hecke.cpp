#include "cellgeom/hecke.hpp"

#include <algorithm>
#include <sstream>

#include "cellgeom/parallel.hpp"

namespace cellgeom {

namespace {

const LaurentPoly& v_inv_minus_v() {
  static const LaurentPoly p = v_pow(-1) - v_pow(1);
  return p;
}

}  // namespace

HeckeElt HeckeElt::standard(const CoxeterElement& w) {
  HeckeElt h(w.system());
  h.add(w, 1);
  return h;
}

HeckeElt HeckeElt::kl_generator(const CoxeterSystem& sys, int s) {
  HeckeElt h(sys);
  h.add(CoxeterElement::generator(sys, s), 1);
  h.add(CoxeterElement::identity(sys), v_pow(1));
  return h;
}

LaurentPoly HeckeElt::coeff(const CoxeterElement& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElt::add(const CoxeterElement& w, const LaurentPoly& p) {
  if (w.system() != sys_) throw Error("Hecke element and group element from different systems");
  if (p.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, p);
  if (!inserted) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElt& HeckeElt::operator+=(const HeckeElt& o) {
  for (const auto& [w, p] : o.terms_) add(w, p);
  return *this;
}

HeckeElt& HeckeElt::operator-=(const HeckeElt& o) {
  for (const auto& [w, p] : o.terms_) add(w, -p);
  return *this;
}

HeckeElt& HeckeElt::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, p] : terms_) p *= c;
  return *this;
}

std::string HeckeElt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")H_" << cellgeom::to_string(it->first);
  }
  return os.str();
}

HeckeElt mult_by_gen(const HeckeElt& h, int s, Side side) {
  HeckeElt out(h.system());
  for (const auto& [w, p] : h.terms()) {
    CoxeterElement sw = mult_gen(w, s, side);
    if (length(sw) > length(w)) {
      out.add(sw, p);
    } else {
      out.add(w, p * v_inv_minus_v());
      out.add(sw, p);
    }
  }
  return out;
}

HeckeElt operator*(const HeckeElt& a, const HeckeElt& b) {
  if (a.system() != b.system()) throw Error("Hecke elements from different systems");
  HeckeElt out(a.system());
  for (const auto& [w, p] : b.terms()) {
    HeckeElt t = a;
    for (int s : reduced_word(w)) t = mult_by_gen(t, s, Side::Right);
    out += t * p;
  }
  return out;
}

HeckeElt bar_involution(const HeckeElt& h) {
  // bar(H_s) = H_s^-1 = H_s + (v - v^-1), extended multiplicatively along
  // reduced words.
  const LaurentPoly v_minus_v_inv = v_pow(1) - v_pow(-1);
  HeckeElt out(h.system());
  for (const auto& [w, p] : h.terms()) {
    HeckeElt t = HeckeElt::standard(CoxeterElement::identity(h.system()));
    for (int s : reduced_word(w)) t = mult_by_gen(t, s, Side::Right) + t * v_minus_v_inv;
    out += t * bar(p);
  }
  return out;
}

KLCache::KLCache(CoxeterSystem sys, KLOptions opts)
    : sys_(sys), opts_(opts), elements_(enumerate_group(sys)) {
  const int n = size();
  index_.reserve(n);
  for (int i = 0; i < n; ++i) index_.emplace(elements_[i], i);
  const int gens = sys_.family == Family::A ? sys_.rank + 1 : sys_.rank;
  left_.assign(gens, std::vector<int>(n, -1));
  right_.assign(gens, std::vector<int>(n, -1));
  length_.resize(n);
  left_desc_.assign(n, 0);
  right_desc_.assign(n, 0);
  inverse_.resize(n);
  for (int i = 0; i < n; ++i) {
    const auto& w = elements_[i];
    length_[i] = cellgeom::length(w);
    inverse_[i] = index_.at(cellgeom::inverse(w));
    for (int s : sys_.generators()) {
      left_[s][i] = index_.at(cellgeom::mult_gen(w, s, Side::Left));
      right_[s][i] = index_.at(cellgeom::mult_gen(w, s, Side::Right));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int s : sys_.generators()) {
      if (length_[left_[s][i]] < length_[i]) left_desc_[i] |= std::uint64_t{1} << s;
      if (length_[right_[s][i]] < length_[i]) right_desc_[i] |= std::uint64_t{1} << s;
    }
  }
  rows_.resize(n);
  built_.assign(n, 0);
}

int KLCache::index_of(const CoxeterElement& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) throw Error("element " + to_string(w) + " not in " + sys_.name());
  return it->second;
}

int KLCache::chosen_descent(int w) const {
  const auto gens = sys_.generators();
  if (opts_.descent == DescentChoice::Lowest) {
    for (int s : gens)
      if (is_descent(w, s, Side::Left)) return s;
  } else {
    for (auto it = gens.rbegin(); it != gens.rend(); ++it)
      if (is_descent(w, *it, Side::Left)) return *it;
  }
  return -1;
}

void KLCache::accumulate(Scratch& sc, int x, const LaurentPoly& p, const Integer& c, int shift) {
  if (!sc.mark[x]) {
    sc.mark[x] = 1;
    sc.touched.push_back(x);
  }
  sc.acc[x].add_scaled(p, c, shift);
}

void KLCache::compute_row(int w, Scratch& sc) {
  if (sc.acc.size() != elements_.size()) {
    sc.acc.assign(elements_.size(), LaurentPoly{});
    sc.mark.assign(elements_.size(), 0);
  }
  const int s = chosen_descent(w);
  Row row;
  if (s < 0) {
    row.push_back({w, LaurentPoly(1)});
  } else {
    const int sw = left_[s][w];
    const Row& prev = rows_[sw];
    for (const auto& [x, p] : prev) {
      const int sx = left_[s][x];
      if (length_[sx] > length_[x]) {
        accumulate(sc, sx, p, 1, 0);
        accumulate(sc, x, p, 1, 1);
      } else {
        accumulate(sc, x, p, 1, -1);
        accumulate(sc, sx, p, 1, 0);
      }
    }
    for (const auto& [z, h] : prev) {
      if (z == sw || !is_descent(z, s, Side::Left)) continue;
      const Integer m = h.coeff(1);
      if (m == 0) continue;
      for (const auto& [x, q] : rows_[z]) accumulate(sc, x, q, -m, 0);
    }
    std::sort(sc.touched.begin(), sc.touched.end());
    for (int x : sc.touched) {
      LaurentPoly& p = sc.acc[x];
      if (!p.is_zero()) {
        if (x == w ? p != LaurentPoly(1) : (!is_nonneg(p) || p.min_degree() < 1))
          throw Error("Kazhdan-Lusztig table invariant violated at (" + to_string(elements_[x]) +
                      ", " + to_string(elements_[w]) + "): " + p.to_string());
        row.push_back({x, std::move(p)});
      }
      p = LaurentPoly{};
      sc.mark[x] = 0;
    }
    sc.touched.clear();
  }
  rows_[w] = std::move(row);
  built_[w] = 1;
}

void KLCache::ensure_row(int w) {
  if (built_[w]) return;
  const int s = chosen_descent(w);
  if (s >= 0) {
    const int sw = left_[s][w];
    ensure_row(sw);
    for (const auto& [z, h] : rows_[sw]) {
      if (z != sw && is_descent(z, s, Side::Left) && h.coeff(1) != 0) ensure_row(z);
    }
  }
  if (!lazy_scratch_) lazy_scratch_ = std::make_unique<Scratch>();
  compute_row(w, *lazy_scratch_);
}

void KLCache::build_all() {
  const int n = size();
  std::vector<std::vector<int>> strata;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(strata.size()) <= length_[i]) strata.resize(length_[i] + 1);
    strata[length_[i]].push_back(i);
  }
  const int threads = resolve_threads(opts_.threads);
  std::vector<Scratch> scratch(threads);
  for (const auto& stratum : strata) {
    parallel_for(stratum.size(), threads, [&](std::size_t k, int worker) {
      const int w = stratum[k];
      if (!built_[w]) compute_row(w, scratch[worker]);
    });
  }
}

const KLCache::Row& KLCache::row(int w) {
  ensure_row(w);
  return rows_[w];
}

LaurentPoly KLCache::kl_poly(int x, int w) {
  const Row& r = row(w);
  auto it = std::lower_bound(r.begin(), r.end(), x,
                             [](const Entry& e, int key) { return e.x < key; });
  if (it != r.end() && it->x == x) return it->h;
  return {};
}

LaurentPoly KLCache::kl_poly(const CoxeterElement& x, const CoxeterElement& w) {
  return kl_poly(index_of(x), index_of(w));
}

Integer KLCache::mu_index(int x, int w) {
  if (x == w) return 0;
  return kl_poly(x, w).coeff(1);
}

Integer KLCache::mu(const CoxeterElement& x, const CoxeterElement& w) {
  if (x == w || !bruhat_leq(x, w))
    throw Error("mu(x, w) requires x < w; got x = " + to_string(x) + ", w = " + to_string(w));
  return mu_index(index_of(x), index_of(w));
}

HeckeElt KLCache::kl_basis_elt(const CoxeterElement& w) {
  HeckeElt h(sys_);
  for (const auto& [x, p] : row(index_of(w))) h.add(elements_[x], p);
  return h;
}

std::map<CoxeterElement, LaurentPoly> KLCache::kl_coordinates(const HeckeElt& h) {
  std::map<int, LaurentPoly> rest;
  for (const auto& [w, p] : h.terms()) rest[index_of(w)] += p;
  std::erase_if(rest, [](const auto& kv) { return kv.second.is_zero(); });
  std::map<CoxeterElement, LaurentPoly> out;
  while (!rest.empty()) {
    auto top = std::prev(rest.end());
    const int x = top->first;
    const LaurentPoly c = top->second;
    out[elements_[x]] = c;
    for (const auto& [y, p] : row(x)) {
      auto& slot = rest[y];
      slot -= c * p;
      if (slot.is_zero()) rest.erase(y);
    }
  }
  return out;
}

}  // namespace cellgeom
