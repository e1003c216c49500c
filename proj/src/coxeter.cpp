#include "cellgeom/coxeter.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cellgeom {

namespace {

constexpr std::string_view kAlphabet = "123456789abcdefghijklmnopqrstuvwxyz";

bool is_type_a(const CoxeterElement& w) { return w.system().family == Family::A; }

void require_same_system(const CoxeterElement& a, const CoxeterElement& b) {
  if (a.system() != b.system()) throw Error("elements belong to different Coxeter systems");
}

// Type A Bruhat test by rank-matrix dominance: a <= b iff for every prefix
// of positions and every threshold, a has no more large values than b.
bool bruhat_leq_images(const std::vector<int>& a, const std::vector<int>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<int> ca(n + 2, 0), cb(n + 2, 0);
  for (int i = 0; i < n; ++i) {
    // ca[j] = #{k <= i : a(k) >= j}; update incrementally.
    for (int j = 1; j <= a[i]; ++j) ++ca[j];
    for (int j = 1; j <= b[i]; ++j) ++cb[j];
    for (int j = 1; j <= n; ++j)
      if (ca[j] > cb[j]) return false;
  }
  return true;
}

// Type B embeds in S_{2n} on letters -n..-1,1..n.
std::vector<int> signed_to_unsigned(const CoxeterElement& w) {
  const int n = w.size();
  auto pos = [n](int k) { return k < 0 ? k + n + 1 : k + n; };
  std::vector<int> out(2 * n);
  for (int k = -n; k <= n; ++k) {
    if (k == 0) continue;
    out[pos(k) - 1] = pos(w(k));
  }
  return out;
}

}  // namespace

std::vector<int> CoxeterSystem::generators() const {
  std::vector<int> g;
  if (family == Family::A) {
    for (int i = 1; i <= rank; ++i) g.push_back(i);
  } else {
    for (int i = 0; i < rank; ++i) g.push_back(i);
  }
  return g;
}

bool CoxeterSystem::has_generator(int s) const {
  return family == Family::A ? (s >= 1 && s <= rank) : (s >= 0 && s < rank);
}

std::string CoxeterSystem::name() const {
  return (family == Family::A ? "A" : "B") + std::to_string(rank);
}

CoxeterElement::CoxeterElement(CoxeterSystem sys, std::vector<int> images)
    : sys_(sys), images_(std::move(images)) {
  const int n = sys_.degree();
  if (sys_.rank < 1) throw Error("Coxeter rank must be positive");
  if (static_cast<int>(images_.size()) != n)
    throw Error("image list has length " + std::to_string(images_.size()) + ", expected " +
                std::to_string(n));
  std::vector<bool> seen(n + 1, false);
  for (int x : images_) {
    const int a = std::abs(x);
    if (a < 1 || a > n || seen[a] || (sys_.family == Family::A && x < 0))
      throw Error("not a valid permutation for " + sys_.name());
    seen[a] = true;
  }
}

CoxeterElement CoxeterElement::identity(CoxeterSystem sys) {
  std::vector<int> im(sys.degree());
  std::iota(im.begin(), im.end(), 1);
  return {sys, std::move(im)};
}

CoxeterElement CoxeterElement::generator(CoxeterSystem sys, int s) {
  return mult_gen(identity(sys), s, Side::Right);
}

int CoxeterElement::operator()(int i) const {
  if (i < 0) return -images_[-i - 1];
  return images_[i - 1];
}

bool CoxeterElement::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

char digit_char(int value) {
  if (value < 1 || value > kMaxStringDegree) throw Error("value out of string-notation range");
  return kAlphabet[value - 1];
}

int digit_value(char c) {
  if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  auto p = kAlphabet.find(c);
  return p == std::string_view::npos ? -1 : static_cast<int>(p) + 1;
}

CoxeterElement parse_perm(std::string_view s, int n) {
  if (n < 2 || n > kMaxStringDegree)
    throw Error("string notation supports 2 <= n <= 35, got n = " + std::to_string(n));
  if (static_cast<int>(s.size()) != n)
    throw Error("permutation string '" + std::string(s) + "' does not have length " +
                std::to_string(n));
  std::vector<int> im;
  for (char c : s) {
    int d = digit_value(c);
    if (d < 1 || d > n) throw Error("invalid letter '" + std::string(1, c) + "' in permutation");
    im.push_back(d);
  }
  return {CoxeterSystem::type_a(n), std::move(im)};
}

std::string to_string(const CoxeterElement& w) {
  std::string out;
  if (is_type_a(w)) {
    for (int x : w.images()) out += digit_char(x);
    return out;
  }
  out = "[";
  for (int i = 0; i < w.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.images()[i]);
  }
  return out + "]";
}

CoxeterElement parse_element(const CoxeterSystem& sys, std::string_view s) {
  if (s.starts_with("w:")) return word_to_elt(sys, parse_word(s.substr(2)));
  if (sys.family == Family::A) return parse_perm(s, sys.degree());
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw Error("type B elements are written as [i1,...,in]");
  std::vector<int> im;
  std::string body(s.substr(1, s.size() - 2));
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      im.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw Error("bad entry '" + tok + "' in signed permutation");
    }
  }
  return {sys, std::move(im)};
}

int length(const CoxeterElement& w) {
  const auto& im = w.images();
  const int n = w.size();
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (im[i] > im[j]) ++inv;
  if (is_type_a(w)) return inv;
  // Type B: inv(w) - sum of negative images.
  for (int x : im)
    if (x < 0) inv -= x;
  return inv;
}

bool is_descent(const CoxeterElement& w, int s, Side side) {
  if (!w.system().has_generator(s)) throw Error("generator index out of range");
  if (side == Side::Left) return is_descent(inverse(w), s, Side::Right);
  if (s == 0) return w(1) < 0;
  return w(s) > w(s + 1);
}

std::vector<int> descents(const CoxeterElement& w, Side side) {
  const CoxeterElement& base = w;
  CoxeterElement inv;
  const CoxeterElement* u = &base;
  if (side == Side::Left) {
    inv = inverse(w);
    u = &inv;
  }
  std::vector<int> out;
  for (int s : w.system().generators())
    if (is_descent(*u, s, Side::Right)) out.push_back(s);
  return out;
}

std::uint64_t descent_mask(const CoxeterElement& w, Side side) {
  std::uint64_t m = 0;
  for (int s : descents(w, side)) m |= std::uint64_t{1} << s;
  return m;
}

CoxeterElement mult(const CoxeterElement& a, const CoxeterElement& b) {
  require_same_system(a, b);
  std::vector<int> im(a.size());
  for (int i = 1; i <= a.size(); ++i) im[i - 1] = a(b(i));
  return {a.system(), std::move(im)};
}

CoxeterElement inverse(const CoxeterElement& w) {
  std::vector<int> im(w.size());
  for (int i = 1; i <= w.size(); ++i) {
    int x = w(i);
    if (x > 0)
      im[x - 1] = i;
    else
      im[-x - 1] = -i;
  }
  return {w.system(), std::move(im)};
}

CoxeterElement mult_gen(const CoxeterElement& w, int s, Side side) {
  if (!w.system().has_generator(s)) throw Error("generator index out of range");
  std::vector<int> im = w.images();
  if (side == Side::Right) {
    if (s == 0)
      im[0] = -im[0];
    else
      std::swap(im[s - 1], im[s]);
  } else {
    for (int& x : im) {
      const int a = std::abs(x);
      const int sign = x < 0 ? -1 : 1;
      if (s == 0) {
        if (a == 1) x = -x;
      } else if (a == s) {
        x = sign * (s + 1);
      } else if (a == s + 1) {
        x = sign * s;
      }
    }
  }
  return {w.system(), std::move(im)};
}

CoxeterElement word_to_elt(const CoxeterSystem& sys, const std::vector<int>& word) {
  CoxeterElement w = CoxeterElement::identity(sys);
  for (int s : word) {
    if (!sys.has_generator(s))
      throw Error("generator " + std::to_string(s) + " out of range for " + sys.name());
    w = mult_gen(w, s, Side::Right);
  }
  return w;
}

std::vector<int> parse_word(std::string_view s) {
  std::vector<int> word;
  if (s.find(',') != std::string_view::npos) {
    std::stringstream ss{std::string(s)};
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      try {
        word.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        throw Error("bad generator '" + tok + "' in word");
      }
    }
    return word;
  }
  for (char c : s) {
    if (c == '0') {
      word.push_back(0);
      continue;
    }
    int d = digit_value(c);
    if (d < 0) throw Error("bad generator letter '" + std::string(1, c) + "' in word");
    word.push_back(d);
  }
  return word;
}

std::string word_to_string(const std::vector<int>& word) {
  std::string out;
  for (int s : word) out += s == 0 ? '0' : digit_char(s);
  return out;
}

std::vector<int> reduced_word(const CoxeterElement& w) {
  std::vector<int> word;
  CoxeterElement u = w;
  const auto gens = w.system().generators();
  while (!u.is_identity()) {
    for (int s : gens) {
      if (is_descent(u, s, Side::Left)) {
        word.push_back(s);
        u = mult_gen(u, s, Side::Left);
        break;
      }
    }
  }
  return word;
}

bool bruhat_leq(const CoxeterElement& a, const CoxeterElement& b) {
  require_same_system(a, b);
  if (is_type_a(a)) return bruhat_leq_images(a.images(), b.images());
  return bruhat_leq_images(signed_to_unsigned(a), signed_to_unsigned(b));
}

CoxeterElement longest_element(const CoxeterSystem& sys) {
  return longest_parabolic_elt(sys, sys.generators());
}

CoxeterElement longest_parabolic_elt(const CoxeterSystem& sys, const std::vector<int>& generators) {
  for (int s : generators)
    if (!sys.has_generator(s)) throw Error("generator " + std::to_string(s) + " out of range");
  CoxeterElement w = CoxeterElement::identity(sys);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : generators) {
      if (!is_descent(w, s, Side::Right)) {
        w = mult_gen(w, s, Side::Right);
        grew = true;
      }
    }
  }
  return w;
}

std::vector<CoxeterElement> enumerate_group(const CoxeterSystem& sys) {
  std::vector<CoxeterElement> out;
  std::unordered_set<CoxeterElement> seen;
  std::deque<CoxeterElement> queue;
  auto e = CoxeterElement::identity(sys);
  seen.insert(e);
  queue.push_back(e);
  const auto gens = sys.generators();
  while (!queue.empty()) {
    auto w = std::move(queue.front());
    queue.pop_front();
    for (int s : gens) {
      auto u = mult_gen(w, s, Side::Right);
      if (seen.insert(u).second) queue.push_back(u);
    }
    out.push_back(std::move(w));
  }
  std::vector<std::pair<int, CoxeterElement>> keyed;
  keyed.reserve(out.size());
  for (auto& w : out) keyed.emplace_back(length(w), std::move(w));
  std::sort(keyed.begin(), keyed.end());
  out.clear();
  for (auto& [l, w] : keyed) out.push_back(std::move(w));
  return out;
}

}  // namespace cellgeom
