#ifndef LEDC_CONSTRUCT_HPP
#define LEDC_CONSTRUCT_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ledc/code.hpp"
#include "ledc/error.hpp"
#include "ledc/field.hpp"
#include "ledc/locality.hpp"
#include "ledc/matrix.hpp"
#include "ledc/poly.hpp"

namespace ledc {

namespace detail {

/// Scatters a canonical-layout generator (rows: private1, shared, private2;
/// columns: N1 then N2) into the structure's actual data indices and positions.
inline MatrixGF scatter_two_group(const MatrixGF& canonical, const TwoGroupLayout& L) {
  std::vector<int> row_target;
  row_target.insert(row_target.end(), L.private1.begin(), L.private1.end());
  row_target.insert(row_target.end(), L.shared.begin(), L.shared.end());
  row_target.insert(row_target.end(), L.private2.begin(), L.private2.end());
  std::vector<int> col_target = L.N1;
  col_target.insert(col_target.end(), L.N2.begin(), L.N2.end());
  MatrixGF g(canonical.field(), canonical.rows(), canonical.cols());
  for (std::size_t r = 0; r < canonical.rows(); ++r)
    for (std::size_t c = 0; c < canonical.cols(); ++c)
      g(static_cast<std::size_t>(row_target[r] - 1), static_cast<std::size_t>(col_target[c] - 1)) = canonical(r, c);
  return g;
}

inline MatrixGF row_slice(const MatrixGF& m, std::size_t begin, std::size_t end) {
  std::vector<std::size_t> rows, cols(m.cols());
  for (std::size_t r = begin; r < end; ++r) rows.push_back(r);
  for (std::size_t c = 0; c < m.cols(); ++c) cols[c] = c;
  return submatrix(m, rows, cols);
}

inline std::vector<Felt> points_one_to(const PrimeField& f, int count) {
  std::vector<Felt> pts;
  for (int j = 1; j <= count; ++j) pts.push_back(f.elem(j));
  return pts;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Nested Vandermonde construction

struct NestedResult {
  LedcCode code;
  TwoGroupBlocks blocks;  // canonical layout, before scattering
  bool swapped = false;   // groups were exchanged so that n1-k1 <= n2-k2
};

/// Two-group code from prefix-nested Vandermonde pairs on points 1..n_i.
///
/// [U; A] is the k1-row Vandermonde of group 1 with U its first k1-t rows; [B; V]
/// comes from the k2-row Vandermonde of group 2 with V its first k2-t rows and B
/// the remaining t. Optimal (distance n1-k1+t+1) whenever n2-k2+1 >= t after
/// ordering the groups by redundancy.
inline NestedResult construct_nested(const LocalityStructure& s, const PrimeField& f) {
  const TwoGroupLayout L = two_group_layout(s);
  if (L.t >= L.k()) throw Error(ErrorKind::PreconditionViolated, "nested construction requires t < k");
  const bool swapped = L.r1() > L.r2();
  const int large_r = std::max(L.r1(), L.r2());
  if (large_r + 1 < L.t)
    throw Error(ErrorKind::PreconditionViolated,
                "nested construction requires n2-k2+1 >= t with groups ordered so n1-k1 <= n2-k2 (t=" +
                    std::to_string(L.t) + ", n2-k2+1=" + std::to_string(large_r + 1) + ")");
  if (f.order() < static_cast<std::uint32_t>(std::max(L.n1, L.n2)))
    throw Error(ErrorKind::FieldTooSmall, "nested construction requires q >= max(n1, n2) = " +
                                              std::to_string(std::max(L.n1, L.n2)));

  const auto p1 = detail::points_one_to(f, L.n1);
  const auto p2 = detail::points_one_to(f, L.n2);
  const MatrixGF van1 = vandermonde(f, p1, static_cast<std::size_t>(L.k1));
  const MatrixGF van2 = vandermonde(f, p2, static_cast<std::size_t>(L.k2));
  const auto u_rows = static_cast<std::size_t>(L.k1 - L.t);
  const auto v_rows = static_cast<std::size_t>(L.k2 - L.t);
  TwoGroupBlocks blocks{detail::row_slice(van1, 0, u_rows), detail::row_slice(van1, u_rows, van1.rows()),
                        detail::row_slice(van2, v_rows, van2.rows()), detail::row_slice(van2, 0, v_rows)};
  MatrixGF canonical = block_assemble(blocks);
  return NestedResult{LedcCode(s, detail::scatter_two_group(canonical, L)), std::move(blocks), swapped};
}

// ---------------------------------------------------------------------------
// Cyclic (polynomial) construction

struct Lemma3Solution {
  PolyGF a_star;
  PolyGF b_star;
};

/// Finds a(x) of degree <= t-ell and b(x) of degree <= ell-1 with
///   a(w^j) + (w^j)^T b(w^j) = 0  for r <= j <= r+t-1.
/// The t x (t+1) system has a one-dimensional kernel whose vectors have no zero
/// entries; the returned solution is scaled so that a(0) = 1.
inline Lemma3Solution lemma3_solve(const PrimeField& f, Felt omega, int ell, int t, int r, long long T) {
  const long long q = f.order();
  if (ell < 1 || ell > t) throw Error(ErrorKind::PreconditionViolated, "need 1 <= ell <= t");
  if (r < 0) throw Error(ErrorKind::PreconditionViolated, "need r >= 0");
  if (!(t - ell < T && T < q - ell))
    throw Error(ErrorKind::PreconditionViolated, "need t-ell < T < q-ell (T=" + std::to_string(T) + ")");
  if (!f.is_primitive(omega))
    throw Error(ErrorKind::NotPrimitive, std::to_string(omega.value) + " is not primitive in GF(" + std::to_string(q) + ")");

  const int a_len = t - ell + 1;
  MatrixGF M(f, static_cast<std::size_t>(t), static_cast<std::size_t>(t + 1));
  for (int i = 0; i < t; ++i) {
    const Felt z = f.pow(omega, static_cast<std::uint64_t>(r + i));
    for (int e = 0; e < a_len; ++e) M(static_cast<std::size_t>(i), static_cast<std::size_t>(e)) = f.pow(z, static_cast<std::uint64_t>(e));
    for (int e = 0; e < ell; ++e)
      M(static_cast<std::size_t>(i), static_cast<std::size_t>(a_len + e)) = f.pow(z, static_cast<std::uint64_t>(T + e));
  }
  const auto kernel = nullspace(M);
  if (kernel.size() != 1)
    throw Error(ErrorKind::DegenerateSystem, "kernel dimension " + std::to_string(kernel.size()) + " != 1");
  std::vector<Felt> v = kernel.front();
  if (std::any_of(v.begin(), v.end(), [](Felt c) { return c.is_zero(); }))
    throw Error(ErrorKind::DegenerateSystem, "kernel vector has a zero coefficient");
  const Felt scale = f.inv(v[0]);
  for (Felt& c : v) c = f.mul(c, scale);
  return Lemma3Solution{PolyGF(f, std::vector<Felt>(v.begin(), v.begin() + a_len)),
                        PolyGF(f, std::vector<Felt>(v.begin() + a_len, v.end()))};
}

/// Per shared row ell: the shift T, the kernel pair, and the final row polynomials.
struct CyclicTerm {
  long long T = 0;
  PolyGF a_star, b_star;
  PolyGF a, b, c;  // a = g2 a_star, b = g2 b_star, c = x^{k1-t+ell-1} a + x^{n1+k2-ell} b
};

struct CyclicIngredients {
  Felt omega;
  int r = 0;
  int t = 0;
  PolyGF u, v;
  std::vector<CyclicTerm> terms;  // terms[ell-1]
};

struct CyclicResult {
  LedcCode code;
  CyclicIngredients ingredients;
};

namespace detail {

inline PolyGF consecutive_root_product(const PrimeField& f, Felt omega, int count) {
  std::vector<Felt> roots;
  for (int j = 0; j < count; ++j) roots.push_back(f.pow(omega, static_cast<std::uint64_t>(j)));
  return linear_factor_product(f, roots);
}

inline std::size_t u_shift_end(const TwoGroupLayout& L) { return static_cast<std::size_t>(L.k1 - L.t); }
inline std::size_t a_shift(const TwoGroupLayout& L, int ell) { return static_cast<std::size_t>(L.k1 - L.t + ell - 1); }
inline std::size_t b_shift(const TwoGroupLayout& L, int ell) { return static_cast<std::size_t>(L.n1 + L.k2 - ell); }

/// Row polynomials of the global code in canonical row order.
inline std::vector<PolyGF> global_row_polys(const CyclicIngredients& ing, const TwoGroupLayout& L) {
  std::vector<PolyGF> rows;
  for (std::size_t i = 0; i < u_shift_end(L); ++i) rows.push_back(poly_shift(ing.u, i));
  for (const auto& term : ing.terms) rows.push_back(term.c);
  for (int j = 0; j < L.k2 - L.t; ++j) rows.push_back(poly_shift(ing.v, static_cast<std::size_t>(L.n1 + j)));
  return rows;
}

}  // namespace detail

/// Two-group code with equal redundancy r as a punctured subcode of a cyclic code of
/// length q-1. Global rows are x^i u(x), c^(ell)(x), and x^(n1+j) v(x), with
/// u = v = prod_{j<r+t}(x - w^j).
inline CyclicResult construct_cyclic(const LocalityStructure& s, const PrimeField& f,
                                     std::optional<Felt> omega_opt = std::nullopt) {
  const TwoGroupLayout L = two_group_layout(s);
  if (L.r1() != L.r2())
    throw Error(ErrorKind::PreconditionViolated, "cyclic construction requires n1-k1 = n2-k2 (got " +
                                                     std::to_string(L.r1()) + " and " + std::to_string(L.r2()) + ")");
  if (L.t < 1) throw Error(ErrorKind::PreconditionViolated, "cyclic construction requires t >= 1; use the nested construction for t = 0");
  if (L.t >= L.k()) throw Error(ErrorKind::PreconditionViolated, "cyclic construction requires t < k");
  if (static_cast<long long>(L.n()) > static_cast<long long>(f.order()) - 1)
    throw Error(ErrorKind::PreconditionViolated,
                "cyclic construction requires n1+n2 <= q-1 (n=" + std::to_string(L.n()) + ", q=" + std::to_string(f.order()) + ")");
  const Felt omega = omega_opt.value_or(f.primitive());
  if (!f.is_primitive(omega))
    throw Error(ErrorKind::NotPrimitive, std::to_string(omega.value) + " is not primitive in GF(" + std::to_string(f.order()) + ")");

  const int r = L.r1(), t = L.t;
  CyclicIngredients ing{omega, r, t, detail::consecutive_root_product(f, omega, r + t), PolyGF(f), {}};
  ing.v = ing.u;
  const PolyGF g2 = detail::consecutive_root_product(f, omega, r);
  for (int ell = 1; ell <= t; ++ell) {
    const long long T = static_cast<long long>(detail::b_shift(L, ell)) - static_cast<long long>(detail::a_shift(L, ell));
    Lemma3Solution sol = lemma3_solve(f, omega, ell, t, r, T);
    CyclicTerm term{T, sol.a_star, sol.b_star, poly_mul(g2, sol.a_star), poly_mul(g2, sol.b_star), PolyGF(f)};
    term.c = poly_add(poly_shift(term.a, detail::a_shift(L, ell)), poly_shift(term.b, detail::b_shift(L, ell)));
    ing.terms.push_back(std::move(term));
  }

  const auto width = static_cast<std::size_t>(L.n());
  const auto polys = detail::global_row_polys(ing, L);
  MatrixGF canonical(f, polys.size(), width);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    const auto row = coeffs_to_row(polys[i], 0, width);
    std::copy(row.begin(), row.end(), canonical.row(i).begin());
  }
  return CyclicResult{LedcCode(s, detail::scatter_two_group(canonical, L)), std::move(ing)};
}

struct CyclicReport {
  bool degrees_ok = false;         // deg u = deg v = r+t, deg a <= r+t-ell, deg b <= r+ell-1
  bool c_consistent = false;       // stored c equals x^{..} a + x^{..} b
  bool d1_nonzero_constants = false;
  bool d2_uv_roots = false;
  bool d3_ab_roots = false;
  bool d4_c_roots = false;
  bool g1_divides_global = false;  // every global row polynomial
  bool g2_divides_local = false;   // every row polynomial of both local codes

  bool ok() const {
    return degrees_ok && c_consistent && d1_nonzero_constants && d2_uv_roots && d3_ab_roots && d4_c_roots &&
           g1_divides_global && g2_divides_local;
  }
};

inline CyclicReport verify_cyclic_conditions(const CyclicIngredients& ing, const LocalityStructure& s,
                                             const PrimeField& f) {
  const TwoGroupLayout L = two_group_layout(s);
  const int r = ing.r, t = ing.t;
  CyclicReport rep;
  auto powers_are_roots = [&](const PolyGF& p, int count) {
    for (int j = 0; j < count; ++j)
      if (!poly_eval(p, f.pow(ing.omega, static_cast<std::uint64_t>(j))).is_zero()) return false;
    return true;
  };
  const bool shape_ok = static_cast<int>(ing.terms.size()) == t && t == L.t && r == L.r1() && r == L.r2();

  rep.degrees_ok = shape_ok && ing.u.degree() == r + t && ing.v.degree() == r + t;
  rep.c_consistent = shape_ok;
  rep.d1_nonzero_constants = !ing.u[0].is_zero() && !ing.v[0].is_zero();
  rep.d2_uv_roots = powers_are_roots(ing.u, r + t) && powers_are_roots(ing.v, r + t);
  rep.d3_ab_roots = true;
  rep.d4_c_roots = true;
  for (std::size_t idx = 0; idx < ing.terms.size(); ++idx) {
    const int ell = static_cast<int>(idx) + 1;
    const auto& term = ing.terms[idx];
    rep.degrees_ok = rep.degrees_ok && term.a.degree() <= r + t - ell && term.b.degree() <= r + ell - 1;
    if (shape_ok) {
      const PolyGF c = poly_add(poly_shift(term.a, detail::a_shift(L, ell)), poly_shift(term.b, detail::b_shift(L, ell)));
      rep.c_consistent = rep.c_consistent && c == term.c;
    }
    rep.d1_nonzero_constants = rep.d1_nonzero_constants && !term.a[0].is_zero() && !term.b[0].is_zero();
    rep.d3_ab_roots = rep.d3_ab_roots && powers_are_roots(term.a, r) && powers_are_roots(term.b, r);
    rep.d4_c_roots = rep.d4_c_roots && powers_are_roots(term.c, r + t);
  }

  const PolyGF g1 = detail::consecutive_root_product(f, ing.omega, r + t);
  const PolyGF g2 = detail::consecutive_root_product(f, ing.omega, r);
  rep.g1_divides_global = shape_ok;
  rep.g2_divides_local = shape_ok;
  if (shape_ok) {
    for (const auto& p : detail::global_row_polys(ing, L)) rep.g1_divides_global = rep.g1_divides_global && poly_divides(g1, p);
    for (std::size_t i = 0; i < detail::u_shift_end(L); ++i)
      rep.g2_divides_local = rep.g2_divides_local && poly_divides(g2, poly_shift(ing.u, i));
    for (int j = 0; j < L.k2 - L.t; ++j)
      rep.g2_divides_local = rep.g2_divides_local && poly_divides(g2, poly_shift(ing.v, static_cast<std::size_t>(L.n1 + j)));
    for (std::size_t idx = 0; idx < ing.terms.size(); ++idx) {
      const int ell = static_cast<int>(idx) + 1;
      rep.g2_divides_local = rep.g2_divides_local &&
                             poly_divides(g2, poly_shift(ing.terms[idx].a, detail::a_shift(L, ell))) &&
                             poly_divides(g2, poly_shift(ing.terms[idx].b, detail::b_shift(L, ell)));
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Randomized construction

/// Counter-based keyed stream. Attempt a of seed s draws words
///   key  = mix64(s + (a+1) * gamma)
///   w_c  = mix64(key + (c+1) * gamma),  c = 0, 1, 2, ...
/// with mix64 the splitmix64 finalizer and gamma = 0x9E3779B97F4A7C15.
class KeyedStream {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

  static constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  KeyedStream(std::uint64_t seed, std::uint64_t attempt) noexcept : key_(mix64(seed + (attempt + 1) * kGamma)) {}

  std::uint64_t next_word() noexcept { return mix64(key_ + (++counter_) * kGamma); }

  /// Uniform integer in [0, bound): words >= bound * floor((2^64-1) / bound) are rejected.
  std::uint64_t uniform(std::uint64_t bound) noexcept {
    const std::uint64_t reject_from = bound * (UINT64_MAX / bound);
    while (true) {
      const std::uint64_t w = next_word();
      if (w < reject_from) return w % bound;
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Samples g_{i,j} uniformly for j in R_i (row-major, increasing j), zero elsewhere.
inline MatrixGF sample_constrained_generator(const LocalityStructure& s, const PrimeField& f, std::uint64_t seed,
                                             std::uint64_t attempt) {
  KeyedStream stream(seed, attempt);
  const ConstraintView view = constraints(s);
  MatrixGF g(f, static_cast<std::size_t>(s.k()), static_cast<std::size_t>(s.n()));
  for (std::size_t i = 0; i < view.R.size(); ++i)
    for (int j : view.R[i]) g(i, static_cast<std::size_t>(j - 1)) = Felt{static_cast<std::uint32_t>(stream.uniform(f.order()))};
  return g;
}

struct RandomResult {
  LedcCode code;
  std::uint64_t attempt = 0;  // 0-based index of the accepted sample
  int distance = 0;
};

class ExhaustedAttemptsError : public Error {
 public:
  ExhaustedAttemptsError(int best_distance, int target, std::uint64_t attempts)
      : Error(ErrorKind::ExhaustedAttempts, "no optimal sample in " + std::to_string(attempts) +
                                                " attempts; best distance " + std::to_string(best_distance) +
                                                " < dmax " + std::to_string(target)),
        best_distance_(best_distance) {}

  int best_distance() const noexcept { return best_distance_; }

 private:
  int best_distance_;
};

/// Returns the lowest-indexed sample that is locally MDS and reaches dmax.
inline RandomResult construct_random(const LocalityStructure& s, const PrimeField& f, std::uint64_t seed,
                                     std::uint64_t max_attempts) {
  if (max_attempts < 1) throw Error(ErrorKind::InvalidArgument, "max_attempts must be >= 1");
  const int target = dmax(s).value;
  int best = -1;
  for (std::uint64_t a = 0; a < max_attempts; ++a) {
    LedcCode code(s, sample_constrained_generator(s, f, seed, a));
    if (!verify_local_mds(code).all_ok()) continue;
    const int d = min_distance_rank(code);
    best = std::max(best, d);
    if (d >= target) return RandomResult{std::move(code), a, d};
  }
  throw ExhaustedAttemptsError(best, target, max_attempts);
}

}  // namespace ledc

#endif  // LEDC_CONSTRUCT_HPP
