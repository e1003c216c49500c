#pragma once

// Hecke algebra of a finite Coxeter group over Z[v, v^-1] in the standard
// basis {H_w}, with
//   H_s H_w = H_{sw}                      if sw > w,
//   H_s H_w = (v^-1 - v) H_w + H_{sw}     if sw < w,
// and the Kazhdan-Lusztig basis normalized by  Hbar_s = H_s + v H_id.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "cellgeom/coxeter.hpp"
#include "cellgeom/laurent.hpp"

namespace cellgeom {

class HeckeElt {
 public:
  explicit HeckeElt(CoxeterSystem sys) : sys_(sys) {}
  /// H_w.
  static HeckeElt standard(const CoxeterElement& w);
  /// Hbar_s = H_s + v H_id.
  static HeckeElt kl_generator(const CoxeterSystem& sys, int s);

  const CoxeterSystem& system() const { return sys_; }
  const std::map<CoxeterElement, LaurentPoly>& terms() const { return terms_; }
  LaurentPoly coeff(const CoxeterElement& w) const;
  bool is_zero() const { return terms_.empty(); }

  /// Adds p * H_w.
  void add(const CoxeterElement& w, const LaurentPoly& p);
  HeckeElt& operator+=(const HeckeElt& o);
  HeckeElt& operator-=(const HeckeElt& o);
  HeckeElt& operator*=(const LaurentPoly& c);

  friend HeckeElt operator+(HeckeElt a, const HeckeElt& b) { return a += b; }
  friend HeckeElt operator-(HeckeElt a, const HeckeElt& b) { return a -= b; }
  friend HeckeElt operator*(HeckeElt a, const LaurentPoly& c) { return a *= c; }
  friend bool operator==(const HeckeElt&, const HeckeElt&) = default;

  std::string to_string() const;

 private:
  CoxeterSystem sys_;
  std::map<CoxeterElement, LaurentPoly> terms_;
};

/// H_s * h (Side::Left) or h * H_s (Side::Right).
HeckeElt mult_by_gen(const HeckeElt& h, int s, Side side);
/// Full product, expanding the right factor along reduced words.
HeckeElt operator*(const HeckeElt& a, const HeckeElt& b);
/// Ring involution with v -> v^-1 and H_w -> (H_{w^-1})^-1.
HeckeElt bar_involution(const HeckeElt& h);

enum class DescentChoice { Lowest, Highest };

struct KLOptions {
  DescentChoice descent = DescentChoice::Lowest;
  int threads = 0;  // 0: default_thread_count()
};

/// Memoized table of Kazhdan-Lusztig coefficients h_{x,w}, where
/// Hbar_w = H_w + sum_{x<w} h_{x,w} H_x. Rows are computed on demand by
///   Hbar_w = Hbar_s Hbar_{sw} - sum_{z<sw, sz<z} mu(z,sw) Hbar_z
/// for a left descent s of w. Lazy row() calls are not thread-safe; after
/// build_all() every read is.
class KLCache {
 public:
  struct Entry {
    int x;
    LaurentPoly h;
  };
  using Row = std::vector<Entry>;  // sorted by x, includes (w, 1)

  explicit KLCache(CoxeterSystem sys, KLOptions opts = {});

  const CoxeterSystem& system() const { return sys_; }
  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<CoxeterElement>& elements() const { return elements_; }
  const CoxeterElement& element(int i) const { return elements_[i]; }
  int index_of(const CoxeterElement& w) const;

  int length(int i) const { return length_[i]; }
  int mult_gen(int i, int s, Side side) const {
    return side == Side::Left ? left_[s][i] : right_[s][i];
  }
  std::uint64_t descents(int i, Side side) const {
    return side == Side::Left ? left_desc_[i] : right_desc_[i];
  }
  bool is_descent(int i, int s, Side side) const { return (descents(i, side) >> s) & 1u; }
  int inverse(int i) const { return inverse_[i]; }

  /// Fills every row, parallel within each length stratum.
  void build_all();
  const Row& row(int w);
  bool row_built(int w) const { return built_[w] != 0; }

  LaurentPoly kl_poly(int x, int w);
  LaurentPoly kl_poly(const CoxeterElement& x, const CoxeterElement& w);
  /// Coefficient of v in h_{x,w}; 0 if x is not below w. No order check.
  Integer mu_index(int x, int w);
  /// Coefficient of v in h_{x,w}; requires x < w.
  Integer mu(const CoxeterElement& x, const CoxeterElement& w);

  HeckeElt kl_basis_elt(const CoxeterElement& w);
  /// Coordinates of h in the Kazhdan-Lusztig basis.
  std::map<CoxeterElement, LaurentPoly> kl_coordinates(const HeckeElt& h);

 private:
  struct Scratch {
    std::vector<LaurentPoly> acc;
    std::vector<int> touched;
    std::vector<char> mark;
  };
  void ensure_row(int w);
  void compute_row(int w, Scratch& scratch);
  int chosen_descent(int w) const;
  void accumulate(Scratch& s, int x, const LaurentPoly& p, const Integer& c, int shift);

  CoxeterSystem sys_;
  KLOptions opts_;
  std::vector<CoxeterElement> elements_;
  std::unordered_map<CoxeterElement, int> index_;
  std::vector<int> length_;
  std::vector<std::vector<int>> left_, right_;  // indexed [s][i]
  std::vector<std::uint64_t> left_desc_, right_desc_;
  std::vector<int> inverse_;
  std::vector<Row> rows_;
  std::vector<char> built_;
  std::unique_ptr<Scratch> lazy_scratch_;
};

}  // namespace cellgeom
