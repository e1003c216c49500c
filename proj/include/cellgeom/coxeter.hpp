#pragma once

// Finite Coxeter groups of type A (symmetric groups) and type B (signed
// permutations). Elements are stored as image lists, never as words.
//
// Conventions:
//   * type A of rank n-1 acts on {1..n}; generator s_i = (i, i+1), 1 <= i < n.
//   * type B of rank n acts on {+-1..+-n}; s_0 negates 1, s_i = (i, i+1).
//   * products compose maps: (a*b)(i) = a(b(i)). Right multiplication by a
//     generator permutes positions, left multiplication permutes values.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "cellgeom/numeric.hpp"

namespace cellgeom {

enum class Family { A, B };

struct CoxeterSystem {
  Family family = Family::A;
  int rank = 1;

  static CoxeterSystem type_a(int n) { return {Family::A, n - 1}; }
  static CoxeterSystem type_b(int n) { return {Family::B, n}; }

  /// Number of letters the image list has.
  int degree() const { return family == Family::A ? rank + 1 : rank; }
  std::vector<int> generators() const;
  bool has_generator(int s) const;
  std::string name() const;

  friend bool operator==(const CoxeterSystem&, const CoxeterSystem&) = default;
  friend auto operator<=>(const CoxeterSystem&, const CoxeterSystem&) = default;
};

enum class Side { Left, Right };

class CoxeterElement {
 public:
  CoxeterElement() = default;
  /// Validates that images form a (signed) permutation for the system.
  CoxeterElement(CoxeterSystem sys, std::vector<int> images);

  static CoxeterElement identity(CoxeterSystem sys);
  /// Generator s of the system.
  static CoxeterElement generator(CoxeterSystem sys, int s);

  const CoxeterSystem& system() const { return sys_; }
  const std::vector<int>& images() const { return images_; }
  int size() const { return static_cast<int>(images_.size()); }
  /// Image of i (1-based; negative arguments allowed in type B).
  int operator()(int i) const;

  bool is_identity() const;

  friend bool operator==(const CoxeterElement&, const CoxeterElement&) = default;
  friend auto operator<=>(const CoxeterElement&, const CoxeterElement&) = default;

 private:
  CoxeterSystem sys_;
  std::vector<int> images_;
};

constexpr int kMaxStringDegree = 35;

/// String notation "438721a965cb" with digits 1-9 then a=10, b=11, ...
CoxeterElement parse_perm(std::string_view s, int n);
/// Type A: string notation (commas when n > 35 is impossible anyway).
/// Type B: "[-2,1]".
std::string to_string(const CoxeterElement& w);
/// Parses either notation above for the given system.
CoxeterElement parse_element(const CoxeterSystem& sys, std::string_view s);

char digit_char(int value);
int digit_value(char c);  // -1 on failure

int length(const CoxeterElement& w);
bool is_descent(const CoxeterElement& w, int s, Side side);
/// Sorted generator indices.
std::vector<int> descents(const CoxeterElement& w, Side side);
/// Bit s set iff s is a descent (s <= 35 always fits).
std::uint64_t descent_mask(const CoxeterElement& w, Side side);

CoxeterElement mult(const CoxeterElement& a, const CoxeterElement& b);
CoxeterElement inverse(const CoxeterElement& w);
CoxeterElement mult_gen(const CoxeterElement& w, int s, Side side);

/// s_{i1} s_{i2} ... s_{ik}, multiplied left to right.
CoxeterElement word_to_elt(const CoxeterSystem& sys, const std::vector<int>& word);
/// "b5678956787..." (one character per letter, 0 allowed in type B) or
/// "11,5,6,...".
std::vector<int> parse_word(std::string_view s);
std::string word_to_string(const std::vector<int>& word);
/// A reduced word for w, built from lowest-index left descents.
std::vector<int> reduced_word(const CoxeterElement& w);

bool bruhat_leq(const CoxeterElement& a, const CoxeterElement& b);

CoxeterElement longest_element(const CoxeterSystem& sys);
CoxeterElement longest_parabolic_elt(const CoxeterSystem& sys, const std::vector<int>& generators);

/// All group elements sorted by (length, images).
std::vector<CoxeterElement> enumerate_group(const CoxeterSystem& sys);

}  // namespace cellgeom

template <>
struct std::hash<cellgeom::CoxeterElement> {
  std::size_t operator()(const cellgeom::CoxeterElement& w) const noexcept {
    std::size_t h = static_cast<std::size_t>(w.system().family) * 131 + w.system().rank;
    for (int x : w.images()) h = h * 1000003u + static_cast<std::size_t>(x + 64);
    return h;
  }
};
