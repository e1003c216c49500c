#include <doctest.h>

#include "cellgeom/kashiwara_saito.hpp"

using namespace cellgeom;

namespace {

KSPoint diag_point() {
  KSPoint p = KSPoint::zero();
  p.M[0] = QMatrix::from_ints({{1, 0}, {0, 0}});
  p.M[1] = QMatrix::from_ints({{0, 0}, {0, 1}});
  p.M[2] = QMatrix::from_ints({{1, 0}, {0, 0}});
  p.M[3] = QMatrix::from_ints({{0, 0}, {0, 1}});
  return p;
}

bool in_slice(const std::vector<Rational>& point, const Realization& r) {
  return in_slice_schubert(r.chart, r.conditions, point);
}

}  // namespace

TEST_CASE("membership") {
  CHECK(ks_member(KSPoint::zero()));
  CHECK(ks_member(diag_point()));
  auto p = diag_point();
  p.M[0] = QMatrix::identity(2);
  CHECK_FALSE(ks_member(p));
  p = diag_point();
  p.M[1] = QMatrix::from_ints({{0, 0}, {1, 0}});
  CHECK_FALSE(ks_member(p));
  CHECK(KSPoint::zero().is_degenerate());
  CHECK_FALSE(diag_point().is_degenerate());
}

TEST_CASE("samples lie on the variety and are generic") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto p = ks_sample(seed);
    CHECK(ks_member(p));
    CHECK_FALSE(p.is_degenerate());
    CHECK(ks_tangent_dim(p) == 8);
  }
  CHECK(ks_sample(5) == ks_sample(5));
  Rng rng(1);
  const auto q = ks_draw_params(rng);
  CHECK(rank(ks_param_jacobian(q)) == 8);
  CHECK(ks_tangent_dim(KSPoint::zero()) == 16);
  CHECK(ks_tangent_dim(diag_point()) == 8);
}

TEST_CASE("perturbation leaves the variety") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto p = ks_sample(seed);
    for (int i = 0; i < 4; ++i) {
      const auto q = perturb_determinant(p, i);
      CHECK(determinant(q.M[i]) != 0);
      CHECK_FALSE(ks_member(q));
    }
  }
}

TEST_CASE("block substitution inverts") {
  const auto p = ks_sample(77);
  const auto a = ks_to_blocks(p);
  CHECK(a[0] == (p.M[3] * mat_J()).transpose());
  CHECK(a[1] == QMatrix(2, 2) - p.M[2] * mat_K());
  CHECK(a[2] == p.M[1] * mat_J());
  // Forward substitution A' then M_i = A'_{5-i}.
  CHECK(a[3].transpose() * mat_K() == p.M[0]);
  CHECK(a[2] * mat_J() == p.M[1]);
  CHECK(a[1] * mat_K() == p.M[2]);
  CHECK(a[0].transpose() * mat_J() == p.M[3]);
  CHECK(blocks_to_ks(a) == p);
}

TEST_CASE("realizations") {
  for (auto t : {Target::GL8, Target::GL12}) {
    const auto& r = realization(t);
    CHECK(parse_target(target_name(t)) == t);
    CHECK(bruhat_leq(r.x, r.y));
    CHECK(in_slice(ks_to_slice(KSPoint::zero(), r), r));
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto p = ks_sample(seed);
      const auto pt = ks_to_slice(p, r);
      CHECK(in_slice(pt, r));
      CHECK(blocks_to_ks(slice_blocks(pt, r)) == p);
      CHECK_FALSE(in_slice(ks_to_slice(perturb_determinant(p, static_cast<int>(seed % 4)), r), r));
    }
  }
  CHECK_THROWS_AS(parse_target("gl9"), Error);
}

TEST_CASE("the unreversed substitution does not land in the slice") {
  // Reading M_i = A'_i instead of A'_{5-i} reverses the products.
  const auto& r = realization(Target::GL8);
  int outside = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto p = ks_sample(seed);
    KSPoint rev = p;
    for (int i = 0; i < 4; ++i) rev.M[i] = p.M[3 - i];
    if (!in_slice(ks_to_slice(rev, r), r)) ++outside;
  }
  CHECK(outside == 10);
}

TEST_CASE("verification report") {
  const auto empty = verify_embedding(Target::GL8, 0, 1);
  CHECK(empty.samples == 0);
  const auto rep = verify_embedding(Target::GL8, 5, 42, 1);
  CHECK(rep.all_pass());
  CHECK(rep.inclusion_pass == 5);
  CHECK(rep.rejection_pass == 5);
  CHECK(rep.slice_tangent_dims == std::map<int, int>{{8, 5}});
  CHECK(rep.origin_ks_tangent_dim == 16);
  CHECK(rep.param_jacobian_rank == 8);
  const auto kernel = verify_embedding(Target::GL12, 3, 42, 1, TangentMethod::Kernel);
  CHECK(kernel.all_pass());
  CHECK(kernel.slice_tangent_dims == std::map<int, int>{{8, 3}});
}

TEST_CASE("reductions") {
  for (auto k : all_reductions()) {
    CHECK(parse_reduction(reduction_name(k)) == k);
    const auto res = reduce_check(k, 3, 60);
    CHECK(res.pass());
    CHECK(res.counterexamples == 0);
    CHECK(res.forward == 60);
  }
  std::array<QMatrix, 4> a{QMatrix::identity(2), QMatrix::identity(2), QMatrix(2, 2), QMatrix(2, 2)};
  CHECK_FALSE(reduced_condition(ReductionKind::Rank12, a));
  CHECK(reduced_condition(ReductionKind::Rank34, a));
}
