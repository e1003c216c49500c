#include "cellgeom/laurent.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace cellgeom {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) terms_.emplace_back(0, Integer(c));
}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& c) {
  LaurentPoly p;
  if (c != 0) p.terms_.emplace_back(exponent, c);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.second == 0; });
  terms_ = std::move(out);
}

Integer LaurentPoly::coeff(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exponent) return it->second;
  return 0;
}

int LaurentPoly::max_degree() const {
  if (terms_.empty()) throw Error("degree of zero polynomial");
  return terms_.back().first;
}

int LaurentPoly::min_degree() const {
  if (terms_.empty()) throw Error("degree of zero polynomial");
  return terms_.front().first;
}

void LaurentPoly::add_scaled(const LaurentPoly& o, const Integer& c, int shift) {
  if (c == 0 || o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first + shift)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first + shift < a->first) {
      out.emplace_back(b->first + shift, b->second * c);
      ++b;
    } else {
      Integer sum = a->second + b->second * c;
      if (sum != 0) out.emplace_back(a->first, std::move(sum));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  add_scaled(o, 1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  add_scaled(o, -1);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::map<int, Integer> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  LaurentPoly out;
  for (auto& [e, c] : acc)
    if (c != 0) out.terms_.emplace_back(e, std::move(c));
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.first += k;
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  return std::lexicographical_compare(
      a.terms_.begin(), a.terms_.end(), b.terms_.begin(), b.terms_.end(),
      [](const LaurentPoly::Term& x, const LaurentPoly::Term& y) {
        if (x.first != y.first) return x.first < y.first;
        return x.second < y.second;
      });
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

LaurentPoly bar(const LaurentPoly& p) {
  std::vector<LaurentPoly::Term> t;
  t.reserve(p.terms().size());
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    t.emplace_back(-it->first, it->second);
  return LaurentPoly::from_terms(std::move(t));
}

bool is_selfdual(const LaurentPoly& p) { return bar(p) == p; }

bool is_nonneg(const LaurentPoly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const LaurentPoly::Term& t) { return t.second > 0; });
}

bool is_selfdual_nonneg(const LaurentPoly& p) { return is_nonneg(p) && is_selfdual(p); }

}  // namespace cellgeom
