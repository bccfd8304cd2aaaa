#ifndef LEDC_LOCALITY_HPP
#define LEDC_LOCALITY_HPP

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "ledc/error.hpp"

namespace ledc {

/// One local group: data indices K and coded positions N, both 1-based and sorted.
struct LocalGroup {
  std::vector<int> K;
  std::vector<int> N;

  friend bool operator==(const LocalGroup&, const LocalGroup&) = default;
};

/// The system {N_i, K_i}, i = 1..m. K_i may overlap and must cover 1..k; the N_i
/// partition 1..n; |N_i| >= |K_i|. Only obtainable through validate().
class LocalityStructure {
 public:
  std::size_t m() const noexcept { return groups_.size(); }
  int k() const noexcept { return k_; }
  int n() const noexcept { return n_; }

  const std::vector<LocalGroup>& groups() const noexcept { return groups_; }

  /// Group accessors take the 1-based group number.
  const std::vector<int>& K(std::size_t i) const { return at(i).K; }
  const std::vector<int>& N(std::size_t i) const { return at(i).N; }
  int k_of(std::size_t i) const { return static_cast<int>(at(i).K.size()); }
  int n_of(std::size_t i) const { return static_cast<int>(at(i).N.size()); }

  friend bool operator==(const LocalityStructure&, const LocalityStructure&) = default;

 private:
  friend LocalityStructure validate(int k, std::vector<LocalGroup> groups);

  LocalityStructure(int k, int n, std::vector<LocalGroup> groups) : k_(k), n_(n), groups_(std::move(groups)) {}

  const LocalGroup& at(std::size_t i) const {
    if (i < 1 || i > groups_.size()) throw Error(ErrorKind::IndexOutOfRange, "group " + std::to_string(i));
    return groups_[i - 1];
  }

  int k_ = 0;
  int n_ = 0;
  std::vector<LocalGroup> groups_;
};

/// Checks every structural invariant and returns the normalized (sorted) structure.
inline LocalityStructure validate(int k, std::vector<LocalGroup> groups) {
  if (groups.empty()) throw Error(ErrorKind::EmptyGroup, "at least one group required");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");

  std::vector<bool> covered(static_cast<std::size_t>(k) + 1, false);
  int n = 0;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto& grp = groups[g];
    const std::string name = "group " + std::to_string(g + 1);
    if (grp.K.empty()) throw Error(ErrorKind::EmptyGroup, name + " has empty K");
    if (grp.N.empty()) throw Error(ErrorKind::EmptyGroup, name + " has empty N");
    std::sort(grp.K.begin(), grp.K.end());
    std::sort(grp.N.begin(), grp.N.end());
    if (std::adjacent_find(grp.K.begin(), grp.K.end()) != grp.K.end())
      throw Error(ErrorKind::InvalidArgument, name + " lists a data index twice");
    if (std::adjacent_find(grp.N.begin(), grp.N.end()) != grp.N.end())
      throw Error(ErrorKind::OverlapN, name + " lists a coded position twice");
    for (int i : grp.K) {
      if (i < 1 || i > k)
        throw Error(ErrorKind::IndexOutOfRange, name + ": data index " + std::to_string(i) + " outside 1.." + std::to_string(k));
      covered[static_cast<std::size_t>(i)] = true;
    }
    if (grp.N.front() < 1) throw Error(ErrorKind::IndexOutOfRange, name + ": coded positions are 1-based");
    if (grp.N.size() < grp.K.size())
      throw Error(ErrorKind::GroupTooSmall, name + ": n_i = " + std::to_string(grp.N.size()) +
                                                " < k_i = " + std::to_string(grp.K.size()));
    n += static_cast<int>(grp.N.size());
  }
  for (int i = 1; i <= k; ++i)
    if (!covered[static_cast<std::size_t>(i)])
      throw Error(ErrorKind::CoverageGap, "data index " + std::to_string(i) + " belongs to no group");

  std::vector<int> owner(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (int j : groups[g].N) {
      if (j > n)
        throw Error(ErrorKind::CoverageGap, "coded positions must be exactly 1.." + std::to_string(n) + "; found " +
                                                std::to_string(j));
      if (owner[static_cast<std::size_t>(j)] != 0)
        throw Error(ErrorKind::OverlapN, "coded position " + std::to_string(j) + " in groups " +
                                             std::to_string(owner[static_cast<std::size_t>(j)]) + " and " +
                                             std::to_string(g + 1));
      owner[static_cast<std::size_t>(j)] = static_cast<int>(g + 1);
    }
  }
  return LocalityStructure(k, n, std::move(groups));
}

/// Builds a structure whose coded positions are consecutive blocks in group order.
inline LocalityStructure with_consecutive_positions(int k, const std::vector<std::pair<std::vector<int>, int>>& groups) {
  std::vector<LocalGroup> out;
  int next = 1;
  for (const auto& [K, n_i] : groups) {
    LocalGroup g{K, {}};
    for (int j = 0; j < n_i; ++j) g.N.push_back(next++);
    out.push_back(std::move(g));
  }
  return validate(k, std::move(out));
}

/// Canonical two-group layout: K1 = {1..k1}, K2 = {k1-t+1..k}, N1 = {1..n1}, N2 = {n1+1..n}.
inline LocalityStructure two_group_structure(int n1, int k1, int n2, int k2, int t) {
  if (t < 0 || t > k1 || t > k2) throw Error(ErrorKind::InvalidArgument, "need 0 <= t <= min(k1, k2)");
  std::vector<int> K1, K2;
  for (int i = 1; i <= k1; ++i) K1.push_back(i);
  for (int i = k1 - t + 1; i <= k1 + k2 - t; ++i) K2.push_back(i);
  return with_consecutive_positions(k1 + k2 - t, {{K1, n1}, {K2, n2}});
}

/// C_j (for each coded position j) and R_i (for each data index i), all 1-based.
struct ConstraintView {
  std::vector<std::vector<int>> C;  // C[j-1]
  std::vector<std::vector<int>> R;  // R[i-1]
};

inline ConstraintView constraints(const LocalityStructure& s) {
  ConstraintView view;
  view.C.assign(static_cast<std::size_t>(s.n()), {});
  view.R.assign(static_cast<std::size_t>(s.k()), {});
  for (const auto& g : s.groups()) {
    for (int j : g.N) view.C[static_cast<std::size_t>(j - 1)] = g.K;
    for (int i : g.K) {
      auto& r = view.R[static_cast<std::size_t>(i - 1)];
      r.insert(r.end(), g.N.begin(), g.N.end());
    }
  }
  for (auto& r : view.R) std::sort(r.begin(), r.end());
  return view;
}

struct DmaxResult {
  int value = 0;
  std::vector<int> blocks;  // minimizing block subset T, 1-based group numbers
  std::vector<int> data;    // I_T = {i : every group containing i lies in T}
};

inline constexpr std::size_t kMaxGroupsForBound = 20;

/// Largest achievable global distance: 1 + min over nonempty I of |U_{i in I} R_i| - |I|.
///
/// R_i depends only on the signature S_i = {groups containing i}, so for a block
/// subset T the best I with union inside T is I_T = {i : S_i within T}. Minimizing
/// over the 2^m block subsets is exact.
inline DmaxResult dmax(const LocalityStructure& s) {
  const std::size_t m = s.m();
  if (m > kMaxGroupsForBound)
    throw Error(ErrorKind::TooManyGroups, "m = " + std::to_string(m) + " exceeds " + std::to_string(kMaxGroupsForBound));
  std::vector<std::uint32_t> signature(static_cast<std::size_t>(s.k()), 0);
  for (std::size_t g = 0; g < m; ++g)
    for (int i : s.groups()[g].K) signature[static_cast<std::size_t>(i - 1)] |= std::uint32_t{1} << g;

  int best = std::numeric_limits<int>::max();
  std::uint32_t best_mask = 0;
  for (std::uint32_t T = 1; T < (std::uint32_t{1} << m); ++T) {
    int count = 0;
    for (std::uint32_t sig : signature)
      if ((sig & ~T) == 0) ++count;
    if (count == 0) continue;
    int width = 0;
    for (std::size_t g = 0; g < m; ++g)
      if (T >> g & 1) width += static_cast<int>(s.groups()[g].N.size());
    if (width - count < best) {
      best = width - count;
      best_mask = T;
    }
  }
  DmaxResult out;
  out.value = 1 + best;
  for (std::size_t g = 0; g < m; ++g)
    if (best_mask >> g & 1) out.blocks.push_back(static_cast<int>(g + 1));
  for (std::size_t i = 0; i < signature.size(); ++i)
    if ((signature[i] & ~best_mask) == 0) out.data.push_back(static_cast<int>(i + 1));
  return out;
}

/// Parameters of an m = 2 structure, with the data indices split by membership.
struct TwoGroupLayout {
  int n1 = 0, k1 = 0, n2 = 0, k2 = 0, t = 0;
  std::vector<int> private1, shared, private2;  // K1\K2, K1&K2, K2\K1
  std::vector<int> N1, N2;

  int r1() const noexcept { return n1 - k1; }
  int r2() const noexcept { return n2 - k2; }
  int k() const noexcept { return k1 + k2 - t; }
  int n() const noexcept { return n1 + n2; }
};

inline TwoGroupLayout two_group_layout(const LocalityStructure& s) {
  if (s.m() != 2) throw Error(ErrorKind::PreconditionViolated, "two-group operation needs m = 2, got " + std::to_string(s.m()));
  TwoGroupLayout L;
  const auto& K1 = s.K(1);
  const auto& K2 = s.K(2);
  std::set_difference(K1.begin(), K1.end(), K2.begin(), K2.end(), std::back_inserter(L.private1));
  std::set_intersection(K1.begin(), K1.end(), K2.begin(), K2.end(), std::back_inserter(L.shared));
  std::set_difference(K2.begin(), K2.end(), K1.begin(), K1.end(), std::back_inserter(L.private2));
  L.N1 = s.N(1);
  L.N2 = s.N(2);
  L.n1 = s.n_of(1);
  L.k1 = s.k_of(1);
  L.n2 = s.n_of(2);
  L.k2 = s.k_of(2);
  L.t = static_cast<int>(L.shared.size());
  return L;
}

/// Closed-form bound 1 + t + min(n1-k1, n2-k2) for two groups. Only accepted where it
/// is known to coincide with dmax: t < k and (t < min(k1, k2) or n1-k1 = n2-k2).
inline int dmax_two_subcodes(const LocalityStructure& s) {
  const TwoGroupLayout L = two_group_layout(s);
  if (L.t >= s.k()) throw Error(ErrorKind::PreconditionViolated, "requires t < k");
  if (!(L.t < std::min(L.k1, L.k2) || L.r1() == L.r2()))
    throw Error(ErrorKind::PreconditionViolated, "requires t < min(k1, k2) or n1-k1 = n2-k2");
  return 1 + L.t + std::min(L.r1(), L.r2());
}

}  // namespace ledc

#endif  // LEDC_LOCALITY_HPP
