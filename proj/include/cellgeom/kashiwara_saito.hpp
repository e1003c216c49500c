#pragma once

// The Kashiwara-Saito variety S = { (M_1..M_4) in M_2^4 : det M_i = 0,
// M_i M_{i+1} = 0 (indices mod 4) } and its realizations as slices of
// Schubert varieties in GL_8 and GL_12.

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cellgeom/linalg.hpp"
#include "cellgeom/schubert.hpp"

namespace cellgeom {

const QMatrix& mat_J();  // [[0,1],[1,0]]
const QMatrix& mat_K();  // [[0,-1],[1,0]]

struct KSPoint {
  std::array<QMatrix, 4> M;

  static KSPoint zero();
  /// Some M_i vanishes.
  bool is_degenerate() const;
  std::vector<Rational> coords() const;  // M_1 row-major, then M_2, ...
  friend bool operator==(const KSPoint&, const KSPoint&) = default;
};

bool ks_member(const KSPoint& p);

/// M_i = t_i u_i (K u_{i+1})^T.
struct KSParams {
  std::array<std::array<Rational, 2>, 4> u;
  std::array<Rational, 4> t;
};

KSPoint ks_from_params(const KSParams& q);
/// Integer u entries in [-bound, bound], t = a/b with 0 < |a|, b <= bound.
/// Draws with some M_i = 0 are rejected; throws after many failures.
KSParams ks_draw_params(Rng& rng, int entry_bound = 10);
KSPoint ks_sample(std::uint64_t seed, int entry_bound = 10);
/// 16 x 12 Jacobian of (u_1..u_4, t_1..t_4) -> (M_1..M_4).
QMatrix ks_param_jacobian(const KSParams& q);
/// 20 x 16 Jacobian of the four determinants and sixteen product entries.
QMatrix ks_jacobian(const KSPoint& p);
/// 16 - rank of ks_jacobian. Throws for points off the variety.
int ks_tangent_dim(const KSPoint& p);

enum class Target { GL8, GL12 };
std::string target_name(Target t);
Target parse_target(const std::string& s);

struct Realization {
  Target target;
  CoxeterElement x, y;
  SliceChart chart;
  std::vector<RankCondition> conditions;  // essential set of y
  std::vector<std::vector<std::string>> layout;
  std::array<std::pair<int, int>, 4> a_blocks;        // block coordinates of A_1..A_4
  std::vector<std::pair<int, int>> other_var_blocks;  // A_0, B_i: zero on the image
};

/// Built from the published permutations; checks the chart's block pattern
/// against the published block layout and throws on mismatch.
const Realization& realization(Target t);

/// Blocks A_1..A_4 with A_1 = (M_4 J)^T, A_2 = -M_3 K, A_3 = M_2 J,
/// A_4 = (-M_1 K)^T. This inverts A_1' = A_1^T J, A_2' = A_2 K, A_3' = A_3 J,
/// A_4' = A_4^T K under M_i = A'_{5-i}, which turns the slice relations
/// A_2'A_1' = A_3'A_2' = A_4'A_3' = A_1'A_4' = 0 into M_i M_{i+1} = 0.
std::array<QMatrix, 4> ks_to_blocks(const KSPoint& p);
KSPoint blocks_to_ks(const std::array<QMatrix, 4>& a);
std::vector<Rational> ks_to_slice(const KSPoint& p, const Realization& r);
std::array<QMatrix, 4> slice_blocks(const std::vector<Rational>& point, const Realization& r);

/// Adds 1 to an entry of M_i with nonzero cofactor, so det M_i != 0.
KSPoint perturb_determinant(const KSPoint& p, int i);

struct VerificationReport {
  Target target = Target::GL8;
  int samples = 0;
  std::uint64_t seed = 0;
  int inclusion_pass = 0;
  int rejection_pass = 0;
  int roundtrip_pass = 0;
  std::map<int, int> slice_tangent_dims;  // dimension -> count
  std::map<int, int> ks_tangent_dims;
  int origin_ks_tangent_dim = -1;
  bool origin_inclusion = false;
  int param_jacobian_rank = -1;  // at the first sample
  int expected_dim = 8;
  TangentMethod method = TangentMethod::Minors;
  std::vector<std::string> failures;

  bool all_pass() const;
};

/// Per sample: inclusion of the mapped point, rejection of a perturbed point
/// with det M_i != 0, tangent dimension of the slice (from the pruned rank
/// conditions) and of S. Failures are recorded, not thrown.
VerificationReport verify_embedding(Target target, int n_samples, std::uint64_t seed, int threads = 0,
                                    TangentMethod method = TangentMethod::Minors);

enum class ReductionKind { Rank23, Rank12, Rank34, Rank1234 };
std::string reduction_name(ReductionKind k);
ReductionKind parse_reduction(const std::string& s);
const std::vector<ReductionKind>& all_reductions();

/// Block rank condition of the slice, on A_1..A_4.
bool block_condition(ReductionKind k, const std::array<QMatrix, 4>& a);
/// Reduced equations: rank23: A_3JA_2 = 0. rank12: A_2KA_1^T = 0 and
/// det A_1 = det A_2 = 0. rank34: A_4^TKA_3 = 0 and det A_3 = det A_4 = 0.
/// rank1234 (together with rank23): A_3JA_2 = 0 and A_4JA_1 = 0.
bool reduced_condition(ReductionKind k, const std::array<QMatrix, 4>& a);

struct ReductionResult {
  ReductionKind kind;
  int forward = 0;   // block-condition points tested against the reduction
  int backward = 0;  // reduced-solution points tested against the block rank
  int mixed = 0;     // small random points, both predicates compared
  int mixed_positive = 0;
  int counterexamples = 0;
  bool pass() const { return counterexamples == 0 && forward > 0 && backward > 0; }
};

ReductionResult reduce_check(ReductionKind kind, std::uint64_t seed, int samples = 1000);

}  // namespace cellgeom
