#include "cellgeom/kashiwara_saito.hpp"

#include <algorithm>

#include "cellgeom/parallel.hpp"
#include "cellgeom/reference_data.hpp"

namespace cellgeom {

namespace {

constexpr int kMaxRedraws = 1000;

QMatrix mat2(long a, long b, long c, long d) { return QMatrix::from_ints({{a, b}, {c, d}}); }

Rng stream(std::uint64_t seed, std::uint64_t index, std::uint64_t tag) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                    static_cast<std::uint32_t>(tag)};
  return Rng(seq);
}

Rational det2(const QMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

std::pair<int, int> block_of(const std::vector<std::vector<std::string>>& layout, const std::string& label) {
  for (std::size_t i = 0; i < layout.size(); ++i)
    for (std::size_t j = 0; j < layout[i].size(); ++j)
      if (layout[i][j] == label) return {static_cast<int>(i), static_cast<int>(j)};
  throw Error("block " + label + " missing from layout");
}

Realization build_realization(Target t) {
  const std::string prefix = t == Target::GL8 ? "gl8." : "gl12.";
  const std::string xs = reference_value(prefix + (t == Target::GL8 ? "u" : "x"));
  const std::string ys = reference_value(prefix + (t == Target::GL8 ? "v" : "y"));
  const int n = static_cast<int>(xs.size());
  Realization r{t, parse_perm(xs, n), parse_perm(ys, n), {}, {}, {}, {}, {}};
  r.chart = slice_chart(r.x);
  r.conditions = rank_conditions(r.x, r.y, true);
  r.layout = parse_block_layout(reference_value(prefix + "layout"));
  const auto pattern = block_pattern(r.chart, 2);
  if (pattern.size() != r.layout.size()) throw Error("layout size mismatch for " + target_name(t));
  for (std::size_t i = 0; i < pattern.size(); ++i)
    for (std::size_t j = 0; j < pattern[i].size(); ++j) {
      const std::string& label = r.layout[i][j];
      const char want = (label[0] == 'A' || label[0] == 'B') ? 'V' : label[0];
      if (pattern[i][j] != want)
        throw Error("chart block (" + std::to_string(i) + "," + std::to_string(j) + ") of " + target_name(t) +
                    " is '" + pattern[i][j] + "', layout says " + label);
      if (want == 'V' && !(label.size() == 2 && label[0] == 'A' && label[1] >= '1' && label[1] <= '4'))
        r.other_var_blocks.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  for (int k = 0; k < 4; ++k) r.a_blocks[k] = block_of(r.layout, "A" + std::to_string(k + 1));
  return r;
}

QMatrix random_matrix(Rng& rng, int rows, int cols, int bound) {
  QMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = uniform_int(rng, -bound, bound);
  return m;
}

// A 2x2 matrix of rank 0, 1 or 2 with roughly equal odds.
QMatrix random_mixed_rank(Rng& rng, int bound) {
  switch (uniform_int(rng, 0, 5)) {
    case 0:
      return QMatrix(2, 2);
    case 1:
    case 2:
      return random_matrix(rng, 2, 1, bound) * random_matrix(rng, 1, 2, bound);
    default:
      return random_matrix(rng, 2, 2, bound);
  }
}

QMatrix random_singular(Rng& rng, int bound) {
  return uniform_int(rng, 0, 7) == 0 ? QMatrix(2, 2)
                                     : random_matrix(rng, 2, 1, bound) * random_matrix(rng, 1, 2, bound);
}

// Random combination of a kernel basis, as a matrix whose columns are the
// combined vectors (ncols of them).
QMatrix kernel_combination(Rng& rng, const std::vector<std::vector<Rational>>& basis, int dim, int ncols,
                           int bound) {
  QMatrix out(dim, ncols);
  for (int c = 0; c < ncols; ++c)
    for (const auto& v : basis) {
      const Rational f = uniform_int(rng, -bound, bound);
      for (int i = 0; i < dim; ++i) out(i, c) += f * v[i];
    }
  return out;
}

// Kernel of a linear map on 2x2 matrices, as flattened row-major vectors.
template <class F>
std::vector<std::vector<Rational>> linear_kernel(F f) {
  std::vector<std::vector<Rational>> cols;
  for (int k = 0; k < 4; ++k) {
    QMatrix e(2, 2);
    e(k / 2, k % 2) = 1;
    const QMatrix img = f(e);
    std::vector<Rational> col;
    for (int i = 0; i < img.rows(); ++i)
      for (int j = 0; j < img.cols(); ++j) col.push_back(img(i, j));
    cols.push_back(std::move(col));
  }
  std::vector<std::vector<Rational>> rows(cols[0].size(), std::vector<Rational>(4));
  for (int k = 0; k < 4; ++k)
    for (std::size_t i = 0; i < cols[k].size(); ++i) rows[i][k] = cols[k][i];
  return kernel_basis(QMatrix::from_rows(rows));
}

QMatrix unflatten(const QMatrix& v) {
  QMatrix m(2, 2);
  for (int k = 0; k < 4; ++k) m(k / 2, k % 2) = v(k, 0);
  return m;
}

QMatrix stack(const std::vector<std::vector<const QMatrix*>>& blocks) {
  const int br = static_cast<int>(blocks.size()), bc = static_cast<int>(blocks[0].size());
  QMatrix m(2 * br, 2 * bc);
  for (int i = 0; i < br; ++i)
    for (int j = 0; j < bc; ++j) {
      if (!blocks[i][j]) continue;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) m(2 * i + r, 2 * j + c) = (*blocks[i][j])(r, c);
    }
  return m;
}

using Blocks = std::array<QMatrix, 4>;

// Points satisfying the block rank condition, built from factorizations of
// the block matrix rather than from the reduced equations.
Blocks forward_sample(ReductionKind kind, Rng& rng) {
  constexpr int B = 5;
  Blocks a;
  for (auto& m : a) m = random_matrix(rng, 2, 2, B);
  switch (kind) {
    case ReductionKind::Rank12: {
      // [A1; A2] = c r^T.
      const QMatrix c = random_matrix(rng, 4, 1, B), r = random_matrix(rng, 1, 2, B);
      const QMatrix m = c * r;
      a[0] = m.block(0, 0, 2, 2);
      a[1] = m.block(2, 0, 2, 2);
      break;
    }
    case ReductionKind::Rank34: {
      const QMatrix c = random_matrix(rng, 2, 1, B), r = random_matrix(rng, 1, 4, B);
      const QMatrix m = c * r;
      a[2] = m.block(0, 0, 2, 2);
      a[3] = m.block(0, 2, 2, 2);
      break;
    }
    case ReductionKind::Rank23: {
      // [[A2, J], [0, A3]] = [U1; U2] [V1^T V2^T] with U1 V2^T = J, U2 V1^T = 0.
      QMatrix u1;
      do u1 = random_matrix(rng, 2, 2, B);
      while (det2(u1) == 0);
      const QMatrix v2t = adjugate(u1) * mat_J();  // scaled inverse times J
      const Rational d = det2(u1);
      QMatrix v2t_scaled = v2t;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) v2t_scaled(i, j) /= d;
      const QMatrix u2 = random_mixed_rank(rng, B);
      const auto ker = kernel_basis(u2);
      const QMatrix v1t = ker.empty() ? QMatrix(2, 2) : kernel_combination(rng, ker, 2, 2, B);
      a[1] = u1 * v1t;
      a[2] = u2 * v2t_scaled;
      break;
    }
    case ReductionKind::Rank1234: {
      // Top four rows of the 6x6 block matrix have rank 4, so the bottom two
      // rows are X times them: A4 = X1 J, A3 = X2 J with X1 A1 + X2 A2 = 0.
      // The rank23 part additionally needs X2 A2 = 0.
      a[0] = random_mixed_rank(rng, B);
      a[1] = random_mixed_rank(rng, B);
      const auto k1 = kernel_basis(a[0].transpose());
      const auto k2 = kernel_basis(a[1].transpose());
      const QMatrix x1 = k1.empty() ? QMatrix(2, 2) : kernel_combination(rng, k1, 2, 2, B).transpose();
      const QMatrix x2 = k2.empty() ? QMatrix(2, 2) : kernel_combination(rng, k2, 2, 2, B).transpose();
      a[3] = x1 * mat_J();
      a[2] = x2 * mat_J();
      break;
    }
  }
  return a;
}

// Solutions of the reduced equations: fix some blocks, solve the linear
// equations for the rest, filter the determinant conditions.
Blocks backward_sample(ReductionKind kind, Rng& rng) {
  constexpr int B = 5;
  const QMatrix& J = mat_J();
  const QMatrix& K = mat_K();
  Blocks a;
  for (auto& m : a) m = random_matrix(rng, 2, 2, B);
  auto solve = [&](auto f) {
    const auto ker = linear_kernel(f);
    return ker.empty() ? QMatrix(2, 2) : unflatten(kernel_combination(rng, ker, 4, 1, B));
  };
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    switch (kind) {
      case ReductionKind::Rank23:
        a[2] = random_mixed_rank(rng, B);
        a[1] = solve([&](const QMatrix& e) { return a[2] * J * e; });
        return a;
      case ReductionKind::Rank12:
        a[0] = random_singular(rng, B);
        a[1] = solve([&](const QMatrix& e) { return e * K * a[0].transpose(); });
        if (det2(a[1]) == 0) return a;
        break;
      case ReductionKind::Rank34:
        a[2] = random_singular(rng, B);
        a[3] = solve([&](const QMatrix& e) { return e.transpose() * K * a[2]; });
        if (det2(a[3]) == 0) return a;
        break;
      case ReductionKind::Rank1234:
        a[2] = random_mixed_rank(rng, B);
        a[1] = solve([&](const QMatrix& e) { return a[2] * J * e; });
        a[0] = random_mixed_rank(rng, B);
        a[3] = solve([&](const QMatrix& e) { return e * J * a[0]; });
        return a;
    }
  }
  throw Error("could not draw a reduced solution");
}

Blocks mixed_sample(Rng& rng) {
  Blocks a;
  for (auto& m : a) {
    switch (uniform_int(rng, 0, 2)) {
      case 0:
        m = QMatrix(2, 2);
        break;
      case 1:
        m = random_matrix(rng, 2, 1, 1) * random_matrix(rng, 1, 2, 1);
        break;
      default:
        m = random_matrix(rng, 2, 2, 1);
    }
  }
  return a;
}

}  // namespace

const QMatrix& mat_J() {
  static const QMatrix j = mat2(0, 1, 1, 0);
  return j;
}

const QMatrix& mat_K() {
  static const QMatrix k = mat2(0, -1, 1, 0);
  return k;
}

KSPoint KSPoint::zero() { return {{QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2), QMatrix(2, 2)}}; }

bool KSPoint::is_degenerate() const {
  return std::any_of(M.begin(), M.end(), [](const QMatrix& m) { return m.is_zero(); });
}

std::vector<Rational> KSPoint::coords() const {
  std::vector<Rational> out;
  for (const auto& m : M)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) out.push_back(m(i, j));
  return out;
}

bool ks_member(const KSPoint& p) {
  for (int i = 0; i < 4; ++i) {
    if (det2(p.M[i]) != 0) return false;
    if (!(p.M[i] * p.M[(i + 1) % 4]).is_zero()) return false;
  }
  return true;
}

KSPoint ks_from_params(const KSParams& q) {
  KSPoint p;
  for (int i = 0; i < 4; ++i) {
    const auto& u = q.u[i];
    const auto& w = q.u[(i + 1) % 4];
    // K w = (-w2, w1).
    const Rational kw[2] = {-w[1], w[0]};
    p.M[i] = QMatrix(2, 2);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) p.M[i](r, c) = q.t[i] * u[r] * kw[c];
  }
  return p;
}

KSParams ks_draw_params(Rng& rng, int entry_bound) {
  if (entry_bound < 1) throw Error("entry bound must be positive");
  for (int attempt = 0; attempt < kMaxRedraws; ++attempt) {
    KSParams q;
    for (auto& u : q.u)
      for (auto& e : u) e = uniform_int(rng, -entry_bound, entry_bound);
    for (auto& t : q.t) {
      std::int64_t num = 0;
      while (num == 0) num = uniform_int(rng, -entry_bound, entry_bound);
      t = Rational(num, uniform_int(rng, 1, entry_bound));
      t.canonicalize();
    }
    if (!ks_from_params(q).is_degenerate()) return q;
  }
  throw Error("no nondegenerate Kashiwara-Saito sample after many draws");
}

KSPoint ks_sample(std::uint64_t seed, int entry_bound) {
  Rng rng(seed);
  return ks_from_params(ks_draw_params(rng, entry_bound));
}

QMatrix ks_param_jacobian(const KSParams& q) {
  QMatrix jac(16, 12);
  const auto& K = mat_K();
  for (int i = 0; i < 4; ++i) {
    const int nxt = (i + 1) % 4;
    const auto& u = q.u[i];
    const auto& w = q.u[nxt];
    const Rational kw[2] = {-w[1], w[0]};
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        const int row = 4 * i + 2 * r + c;
        jac(row, 8 + i) += u[r] * kw[c];
        jac(row, 2 * i + r) += q.t[i] * kw[c];
        for (int k = 0; k < 2; ++k) jac(row, 2 * nxt + k) += q.t[i] * u[r] * K(c, k);
      }
  }
  return jac;
}

QMatrix ks_jacobian(const KSPoint& p) {
  QMatrix jac(20, 16);
  for (int i = 0; i < 4; ++i) {
    const auto& m = p.M[i];
    // det = m00 m11 - m01 m10.
    jac(i, 4 * i + 0) = m(1, 1);
    jac(i, 4 * i + 1) = -m(1, 0);
    jac(i, 4 * i + 2) = -m(0, 1);
    jac(i, 4 * i + 3) = m(0, 0);
    const int nxt = (i + 1) % 4;
    const auto& n = p.M[nxt];
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        const int row = 4 + 4 * i + 2 * r + c;
        for (int k = 0; k < 2; ++k) {
          jac(row, 4 * i + 2 * r + k) += n(k, c);
          jac(row, 4 * nxt + 2 * k + c) += m(r, k);
        }
      }
  }
  return jac;
}

int ks_tangent_dim(const KSPoint& p) {
  if (!ks_member(p)) throw Error("point is not on the Kashiwara-Saito variety");
  return 16 - rank(ks_jacobian(p));
}

std::string target_name(Target t) { return t == Target::GL8 ? "gl8" : "gl12"; }

Target parse_target(const std::string& s) {
  if (s == "gl8") return Target::GL8;
  if (s == "gl12") return Target::GL12;
  throw Error("unknown target '" + s + "' (expected gl8 or gl12)");
}

const Realization& realization(Target t) {
  static const Realization gl8 = build_realization(Target::GL8);
  static const Realization gl12 = build_realization(Target::GL12);
  return t == Target::GL8 ? gl8 : gl12;
}

std::array<QMatrix, 4> ks_to_blocks(const KSPoint& p) {
  const auto& J = mat_J();
  const auto& K = mat_K();
  const QMatrix zero(2, 2);
  return {(p.M[3] * J).transpose(), zero - p.M[2] * K, p.M[1] * J, (zero - p.M[0] * K).transpose()};
}

KSPoint blocks_to_ks(const std::array<QMatrix, 4>& a) {
  const auto& J = mat_J();
  const auto& K = mat_K();
  // M_i = A'_{5-i}.
  return {{a[3].transpose() * K, a[2] * J, a[1] * K, a[0].transpose() * J}};
}

std::vector<Rational> ks_to_slice(const KSPoint& p, const Realization& r) {
  std::vector<Rational> point(r.chart.var_count);
  const auto a = ks_to_blocks(p);
  for (int k = 0; k < 4; ++k) {
    const auto [bi, bj] = r.a_blocks[k];
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) point.at(r.chart.var_at(2 * bi + i + 1, 2 * bj + j + 1)) = a[k](i, j);
  }
  return point;
}

std::array<QMatrix, 4> slice_blocks(const std::vector<Rational>& point, const Realization& r) {
  std::array<QMatrix, 4> a;
  for (int k = 0; k < 4; ++k) {
    const auto [bi, bj] = r.a_blocks[k];
    a[k] = QMatrix(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) a[k](i, j) = point.at(r.chart.var_at(2 * bi + i + 1, 2 * bj + j + 1));
  }
  return a;
}

KSPoint perturb_determinant(const KSPoint& p, int i) {
  KSPoint q = p;
  auto& m = q.M[i % 4];
  // det(m + E_rc) = det m + cofactor(r, c).
  const Rational cof[2][2] = {{m(1, 1), -m(1, 0)}, {-m(0, 1), m(0, 0)}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (det2(m) + cof[r][c] != 0) {
        m(r, c) += 1;
        return q;
      }
  // m = 0: any single entry leaves det 0, so use the diagonal.
  m(0, 0) += 1;
  m(1, 1) += 1;
  return q;
}

bool VerificationReport::all_pass() const {
  auto only = [&](const std::map<int, int>& h) { return h.size() == 1 && h.begin()->first == expected_dim; };
  return failures.empty() && inclusion_pass == samples && rejection_pass == samples && roundtrip_pass == samples &&
         (samples == 0 || (only(slice_tangent_dims) && only(ks_tangent_dims) && param_jacobian_rank == expected_dim)) &&
         origin_ks_tangent_dim == 16 && origin_inclusion;
}

VerificationReport verify_embedding(Target target, int n_samples, std::uint64_t seed, int threads,
                                    TangentMethod method) {
  if (n_samples < 0) throw Error("sample count must be nonnegative");
  const Realization& r = realization(target);
  VerificationReport rep;
  rep.target = target;
  rep.samples = n_samples;
  rep.seed = seed;
  rep.method = method;
  rep.expected_dim = std::stoi(reference_value("ks.dim"));
  rep.origin_ks_tangent_dim = ks_tangent_dim(KSPoint::zero());
  rep.origin_inclusion = in_slice_schubert(r.chart, r.conditions, ks_to_slice(KSPoint::zero(), r));

  struct Outcome {
    bool inclusion = false, rejection = false, roundtrip = false;
    int slice_dim = -1, ks_dim = -1, param_rank = -1;
    std::string failure;
  };
  std::vector<Outcome> outcomes(n_samples);
  parallel_for(n_samples, threads, [&](std::size_t k, int) {
    Outcome& o = outcomes[k];
    Rng rng = stream(seed, k, static_cast<std::uint64_t>(target));
    const KSParams q = ks_draw_params(rng);
    const KSPoint p = ks_from_params(q);
    if (!ks_member(p)) {
      o.failure = "sample " + std::to_string(k) + " is not on the variety";
      return;
    }
    const auto point = ks_to_slice(p, r);
    o.roundtrip = blocks_to_ks(slice_blocks(point, r)) == p;
    o.inclusion = in_slice_schubert(r.chart, r.conditions, point);
    const KSPoint bad = perturb_determinant(p, static_cast<int>(k % 4));
    o.rejection = !ks_member(bad) && !in_slice_schubert(r.chart, r.conditions, ks_to_slice(bad, r));
    if (o.inclusion) o.slice_dim = slice_tangent_dim(r.chart, r.conditions, point, method);
    o.ks_dim = ks_tangent_dim(p);
    if (k == 0) o.param_rank = rank(ks_param_jacobian(q));
  });
  for (int k = 0; k < n_samples; ++k) {
    const Outcome& o = outcomes[k];
    if (!o.failure.empty()) rep.failures.push_back(o.failure);
    rep.inclusion_pass += o.inclusion;
    rep.rejection_pass += o.rejection;
    rep.roundtrip_pass += o.roundtrip;
    if (o.slice_dim >= 0) ++rep.slice_tangent_dims[o.slice_dim];
    if (o.ks_dim >= 0) ++rep.ks_tangent_dims[o.ks_dim];
    if (k == 0) rep.param_jacobian_rank = o.param_rank;
    if (!o.inclusion && rep.failures.size() < 10) rep.failures.push_back("sample " + std::to_string(k) + " not in Z_y");
  }
  return rep;
}

std::string reduction_name(ReductionKind k) {
  switch (k) {
    case ReductionKind::Rank23:
      return "rank23";
    case ReductionKind::Rank12:
      return "rank12";
    case ReductionKind::Rank34:
      return "rank34";
    case ReductionKind::Rank1234:
      return "rank1234";
  }
  return "?";
}

ReductionKind parse_reduction(const std::string& s) {
  for (auto k : all_reductions())
    if (reduction_name(k) == s) return k;
  throw Error("unknown reduction '" + s + "'");
}

const std::vector<ReductionKind>& all_reductions() {
  static const std::vector<ReductionKind> all = {ReductionKind::Rank23, ReductionKind::Rank12, ReductionKind::Rank34,
                                                 ReductionKind::Rank1234};
  return all;
}

bool block_condition(ReductionKind k, const std::array<QMatrix, 4>& a) {
  const QMatrix& J = mat_J();
  switch (k) {
    case ReductionKind::Rank23:
      return rank(stack({{&a[1], &J}, {nullptr, &a[2]}})) <= 2;
    case ReductionKind::Rank12:
      return rank(stack({{&a[0]}, {&a[1]}})) <= 1;
    case ReductionKind::Rank34:
      return rank(stack({{&a[2], &a[3]}})) <= 1;
    case ReductionKind::Rank1234:
      return block_condition(ReductionKind::Rank23, a) &&
             rank(stack({{&a[0], nullptr, &J}, {&a[1], &J, nullptr}, {nullptr, &a[2], &a[3]}})) <= 4;
  }
  return false;
}

bool reduced_condition(ReductionKind k, const std::array<QMatrix, 4>& a) {
  const QMatrix& J = mat_J();
  const QMatrix& K = mat_K();
  switch (k) {
    case ReductionKind::Rank23:
      return (a[2] * J * a[1]).is_zero();
    case ReductionKind::Rank12:
      return (a[1] * K * a[0].transpose()).is_zero() && det2(a[0]) == 0 && det2(a[1]) == 0;
    case ReductionKind::Rank34:
      return (a[3].transpose() * K * a[2]).is_zero() && det2(a[2]) == 0 && det2(a[3]) == 0;
    case ReductionKind::Rank1234:
      return (a[2] * J * a[1]).is_zero() && (a[3] * J * a[0]).is_zero();
  }
  return false;
}

ReductionResult reduce_check(ReductionKind kind, std::uint64_t seed, int samples) {
  ReductionResult res{kind};
  const auto tag = static_cast<std::uint64_t>(kind) + 100;
  Rng fwd = stream(seed, 1, tag), bwd = stream(seed, 2, tag), mix = stream(seed, 3, tag);
  for (int i = 0; i < samples; ++i) {
    const auto a = forward_sample(kind, fwd);
    if (!block_condition(kind, a)) throw Error("forward sampler left the block variety for " + reduction_name(kind));
    ++res.forward;
    if (!reduced_condition(kind, a)) ++res.counterexamples;
  }
  for (int i = 0; i < samples; ++i) {
    const auto a = backward_sample(kind, bwd);
    if (!reduced_condition(kind, a)) throw Error("backward sampler missed the reduced equations for " + reduction_name(kind));
    ++res.backward;
    if (!block_condition(kind, a)) ++res.counterexamples;
  }
  for (int i = 0; i < samples; ++i) {
    const auto a = mixed_sample(mix);
    const bool b = block_condition(kind, a);
    ++res.mixed;
    res.mixed_positive += b;
    if (b != reduced_condition(kind, a)) ++res.counterexamples;
  }
  return res;
}

}  // namespace cellgeom
