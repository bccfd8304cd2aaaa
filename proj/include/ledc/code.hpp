#ifndef LEDC_CODE_HPP
#define LEDC_CODE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "ledc/error.hpp"
#include "ledc/field.hpp"
#include "ledc/locality.hpp"
#include "ledc/matrix.hpp"

namespace ledc {

/// A locality structure together with a k x n generator matrix. The structural
/// properties (support pattern, local MDS, rank) are checked by verify_ledc rather
/// than enforced here, so that defective matrices can still be loaded and diagnosed.
class LedcCode {
 public:
  LedcCode(LocalityStructure structure, MatrixGF generator)
      : structure_(std::move(structure)), generator_(std::move(generator)) {
    if (generator_.rows() != static_cast<std::size_t>(structure_.k()) ||
        generator_.cols() != static_cast<std::size_t>(structure_.n()))
      throw Error(ErrorKind::DimensionMismatch, "generator is " + std::to_string(generator_.rows()) + "x" +
                                                     std::to_string(generator_.cols()) + ", structure needs " +
                                                     std::to_string(structure_.k()) + "x" +
                                                     std::to_string(structure_.n()));
  }

  const LocalityStructure& structure() const noexcept { return structure_; }
  const MatrixGF& generator() const noexcept { return generator_; }
  const PrimeField& field() const noexcept { return generator_.field(); }
  std::size_t k() const noexcept { return generator_.rows(); }
  std::size_t n() const noexcept { return generator_.cols(); }

 private:
  LocalityStructure structure_;
  MatrixGF generator_;
};

/// Length-n word; std::nullopt marks an erased position.
using ReceivedWord = std::vector<std::optional<Felt>>;

/// A coded symbol seen by a local decoder (1-based position).
struct Observation {
  int position = 0;
  Felt value;
};

namespace detail {

inline std::vector<std::size_t> zero_based(const std::vector<int>& one_based) {
  std::vector<std::size_t> out;
  out.reserve(one_based.size());
  for (int v : one_based) out.push_back(static_cast<std::size_t>(v - 1));
  return out;
}

/// Calls visit(indices) for every size-s subset of {0..n-1} in lexicographic order;
/// stops early when visit returns false. Returns false iff stopped early.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t s, Visit&& visit) {
  if (s > n) return true;
  std::vector<std::size_t> idx(s);
  for (std::size_t i = 0; i < s; ++i) idx[i] = i;
  while (true) {
    if (!visit(std::span<const std::size_t>(idx))) return false;
    std::size_t i = s;
    while (i > 0 && idx[i - 1] == n - s + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < s; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline double binomial(std::size_t n, std::size_t r) {
  double acc = 1;
  for (std::size_t i = 1; i <= r; ++i) acc = acc * static_cast<double>(n - r + i) / static_cast<double>(i);
  return acc;
}

}  // namespace detail

inline std::vector<Felt> encode(const LedcCode& code, std::span<const Felt> data) {
  if (data.size() != code.k())
    throw Error(ErrorKind::DimensionMismatch,
                "data length " + std::to_string(data.size()) + " != k = " + std::to_string(code.k()));
  return vec_mul(data, code.generator());
}

/// Recovers the data symbols K_i (in increasing index order) from coded symbols of N_i alone.
inline std::vector<Felt> local_decode(const LedcCode& code, std::size_t group, std::span<const Observation> observed) {
  const auto& s = code.structure();
  const auto& K = s.K(group);
  const auto& N = s.N(group);
  if (observed.size() < K.size())
    throw Error(ErrorKind::NotEnoughSymbols, "group " + std::to_string(group) + " needs " + std::to_string(K.size()) +
                                                 " symbols, got " + std::to_string(observed.size()));
  std::vector<std::size_t> cols;
  std::vector<Felt> values;
  for (const auto& obs : observed) {
    if (!std::binary_search(N.begin(), N.end(), obs.position))
      throw Error(ErrorKind::PositionsOutsideGroup,
                  "position " + std::to_string(obs.position) + " not in group " + std::to_string(group));
    std::size_t c = static_cast<std::size_t>(obs.position - 1);
    if (std::find(cols.begin(), cols.end(), c) != cols.end())
      throw Error(ErrorKind::InvalidArgument, "position " + std::to_string(obs.position) + " observed twice");
    cols.push_back(c);
    values.push_back(obs.value);
  }
  const MatrixGF sub = submatrix(code.generator(), detail::zero_based(K), cols);
  try {
    return solve(sub, values);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Underdetermined)
      throw Error(ErrorKind::SingularSubmatrix,
                  "local generator of group " + std::to_string(group) + " is not MDS on the observed positions");
    throw;
  }
}

/// Recovers the full data vector from the surviving coordinates.
inline std::vector<Felt> erasure_decode(const LedcCode& code, const ReceivedWord& word) {
  if (word.size() != code.n())
    throw Error(ErrorKind::DimensionMismatch, "received length " + std::to_string(word.size()) + " != n");
  std::vector<std::size_t> cols;
  std::vector<Felt> values;
  for (std::size_t j = 0; j < word.size(); ++j)
    if (word[j]) {
      cols.push_back(j);
      values.push_back(*word[j]);
    }
  std::vector<std::size_t> rows(code.k());
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = i;
  try {
    return solve(submatrix(code.generator(), rows, cols), values);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Underdetermined)
      throw Error(ErrorKind::UnrecoverableErasurePattern,
                  "surviving columns have rank < k (" + std::to_string(cols.size()) + " survivors)");
    throw;
  }
}

inline constexpr double kExhaustiveBudget = 1e9;

/// q^k, or +inf if it overflows a double's exact range meaningfully.
inline double message_count(const LedcCode& code) {
  double total = 1;
  for (std::size_t i = 0; i < code.k(); ++i) total *= code.field().order();
  return total;
}

/// Minimum weight of x G over message indices [lo, hi) of the odometer order, where
/// index sum_i x_i q^i encodes x and index 0 (the zero message) is skipped.
/// Returns n + 1 when the range holds no nonzero message.
inline int min_weight_in_range(const LedcCode& code, std::uint64_t lo, std::uint64_t hi) {
  const std::uint32_t q = code.field().order();
  const std::size_t k = code.k(), n = code.n();
  const MatrixGF& G = code.generator();
  std::vector<std::uint32_t> rows(k * n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) rows[i * n + j] = G(i, j).value;

  std::vector<std::uint32_t> digit(k, 0);
  std::uint64_t rest = lo;
  for (std::size_t i = 0; i < k; ++i) {
    digit[i] = static_cast<std::uint32_t>(rest % q);
    rest /= q;
  }
  std::vector<std::uint32_t> word(n, 0);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      word[j] = static_cast<std::uint32_t>((word[j] + std::uint64_t{digit[i]} * rows[i * n + j]) % q);

  int best = static_cast<int>(n) + 1;
  for (std::uint64_t index = lo; index < hi; ++index) {
    if (index != 0) {
      int w = 0;
      for (std::size_t j = 0; j < n; ++j) w += word[j] != 0;
      best = std::min(best, w);
    }
    // Advancing digit i by one (including the wrap q-1 -> 0) adds row i to the word.
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint32_t* r = rows.data() + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint32_t v = word[j] + r[j];
        word[j] = v >= q ? v - q : v;
      }
      if (++digit[i] < q) break;
      digit[i] = 0;
    }
  }
  return best;
}

/// Minimum distance by enumerating all q^k messages. The message space is split
/// into contiguous ranges across `threads` workers; the result does not depend on
/// the split.
inline int min_distance_exhaustive(const LedcCode& code, unsigned threads = 0) {
  const double total_d = message_count(code);
  if (total_d > kExhaustiveBudget)
    throw Error(ErrorKind::TooLarge, "q^k = " + std::to_string(total_d) + " exceeds enumeration budget");
  const auto total = static_cast<std::uint64_t>(total_d);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 4096)));
  if (threads <= 1) return min_weight_in_range(code, 0, total);

  std::vector<int> partial(threads);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    std::uint64_t lo = total * w / threads, hi = total * (w + 1) / threads;
    pool.emplace_back([&, w, lo, hi] { partial[w] = min_weight_in_range(code, lo, hi); });
  }
  for (auto& th : pool) th.join();
  return *std::min_element(partial.begin(), partial.end());
}

inline constexpr double kRankBudget = 5e7;

/// Minimum distance by column-rank certification: d is the largest value such that
/// every (n-d+1)-column submatrix has rank k. Returns 0 when G itself is rank deficient.
inline int min_distance_rank(const LedcCode& code) {
  const std::size_t k = code.k(), n = code.n();
  const MatrixGF& G = code.generator();
  std::vector<std::size_t> all_rows(k);
  for (std::size_t i = 0; i < k; ++i) all_rows[i] = i;
  for (std::size_t s = k; s <= n; ++s) {
    if (detail::binomial(n, s) > kRankBudget)
      throw Error(ErrorKind::TooLarge, "C(" + std::to_string(n) + "," + std::to_string(s) + ") exceeds rank budget");
    bool all_full = detail::for_each_subset(
        n, s, [&](std::span<const std::size_t> cols) { return rank(submatrix(G, all_rows, cols)) == k; });
    if (all_full) return static_cast<int>(n - s + 1);
  }
  return 0;
}

/// Whether every row's support lies in R_i (equivalently every column's in C_j).
inline bool support_ok(const LedcCode& code) {
  const ConstraintView view = constraints(code.structure());
  const MatrixGF& G = code.generator();
  for (std::size_t i = 0; i < code.k(); ++i) {
    const auto& R = view.R[i];
    for (std::size_t j = 0; j < code.n(); ++j)
      if (!G(i, j).is_zero() && !std::binary_search(R.begin(), R.end(), static_cast<int>(j + 1))) return false;
  }
  return true;
}

struct LocalMdsReport {
  std::vector<bool> group_ok;  // group_ok[i-1] for group i

  bool all_ok() const { return std::all_of(group_ok.begin(), group_ok.end(), [](bool b) { return b; }); }
};

/// Group i passes iff every k_i x k_i minor of G[K_i, N_i] is nonzero.
inline LocalMdsReport verify_local_mds(const LedcCode& code) {
  LocalMdsReport report;
  const auto& s = code.structure();
  for (std::size_t g = 1; g <= s.m(); ++g) {
    const MatrixGF local = submatrix(code.generator(), detail::zero_based(s.K(g)), detail::zero_based(s.N(g)));
    const std::size_t ki = local.rows();
    std::vector<std::size_t> rows(ki);
    for (std::size_t i = 0; i < ki; ++i) rows[i] = i;
    bool ok = detail::for_each_subset(local.cols(), ki, [&](std::span<const std::size_t> cols) {
      return !det(submatrix(local, rows, cols)).is_zero();
    });
    report.group_ok.push_back(ok);
  }
  return report;
}

enum class DistanceMethod { Auto, Exhaustive, Rank, Both };

inline constexpr double kAutoExhaustiveLimit = 1e7;

struct LedcReport {
  bool support_ok = false;
  LocalMdsReport local_mds;
  bool full_rank = false;
  std::optional<int> distance_exhaustive;
  std::optional<int> distance_rank;
  int distance = 0;
  int dmax = 0;
  bool optimal = false;

  bool methods_agree() const {
    return !distance_exhaustive || !distance_rank || *distance_exhaustive == *distance_rank;
  }
  bool ok() const { return support_ok && local_mds.all_ok() && full_rank && methods_agree() && optimal; }
};

/// Auto selects both methods when q^k <= 10^7 and the rank method alone otherwise.
inline LedcReport verify_ledc(const LedcCode& code, DistanceMethod method = DistanceMethod::Auto) {
  if (method == DistanceMethod::Auto)
    method = message_count(code) <= kAutoExhaustiveLimit ? DistanceMethod::Both : DistanceMethod::Rank;
  LedcReport rep;
  rep.support_ok = support_ok(code);
  rep.local_mds = verify_local_mds(code);
  rep.full_rank = rank(code.generator()) == code.k();
  if (method == DistanceMethod::Exhaustive || method == DistanceMethod::Both)
    rep.distance_exhaustive = min_distance_exhaustive(code);
  if (method == DistanceMethod::Rank || method == DistanceMethod::Both) rep.distance_rank = min_distance_rank(code);
  rep.distance = rep.distance_rank ? *rep.distance_rank : *rep.distance_exhaustive;
  rep.dmax = dmax(code.structure()).value;
  rep.optimal = rep.distance == rep.dmax;
  return rep;
}

}  // namespace ledc

#endif  // LEDC_CODE_HPP
