#ifndef LEDC_TESTS_FIXTURES_HPP
#define LEDC_TESTS_FIXTURES_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ledc/ledc.hpp"

namespace fixture {

using Rows = std::vector<std::vector<long long>>;

inline ledc::LocalityStructure fig1_structure() { return ledc::two_group_structure(4, 3, 6, 4, 2); }
inline ledc::LocalityStructure example1_structure() { return ledc::two_group_structure(5, 4, 7, 6, 3); }
inline ledc::LocalityStructure example2_structure() { return ledc::two_group_structure(5, 4, 5, 4, 3); }

// Reference non-optimal matrix over F7: distance 4 while dmax is 5.
inline const Rows example2_rows = {
    {1, 1, 1, 1, 1, 0, 0, 0, 0, 0},
    {1, 2, 3, 4, 5, 1, 1, 1, 1, 1},
    {1, 4, 2, 2, 3, 1, 2, 3, 4, 5},
    {1, 1, 6, 1, 6, 1, 4, 2, 2, 3},
    {0, 0, 0, 0, 0, 1, 1, 6, 1, 6},
};

// Reference optimal [5,4;7,6;3] matrix over F13 with w = 2, rows in reference order.
inline const Rows example3_reference_rows = {
    {12, 10, 5, 11, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 12, 2, 5, 7, 0, 0, 0, 0, 0, 8, 5},
    {0, 0, 12, 7, 7, 0, 0, 0, 0, 7, 2, 4},
    {0, 0, 0, 12, 1, 0, 0, 0, 10, 12, 3, 1},
    {0, 0, 0, 0, 0, 0, 0, 12, 10, 5, 11, 1},
    {0, 0, 0, 0, 0, 0, 12, 10, 5, 11, 1, 0},
    {0, 0, 0, 0, 0, 12, 10, 5, 11, 1, 0, 0},
};

// Same code with the last block in ascending shift order.
inline const Rows example3_canonical_rows = {
    {12, 10, 5, 11, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 12, 2, 5, 7, 0, 0, 0, 0, 0, 8, 5},
    {0, 0, 12, 7, 7, 0, 0, 0, 0, 7, 2, 4},
    {0, 0, 0, 12, 1, 0, 0, 0, 10, 12, 3, 1},
    {0, 0, 0, 0, 0, 12, 10, 5, 11, 1, 0, 0},
    {0, 0, 0, 0, 0, 0, 12, 10, 5, 11, 1, 0},
    {0, 0, 0, 0, 0, 0, 0, 12, 10, 5, 11, 1},
};

// a^(l), b^(l) for l = 1, 2, 3 for the same code.
inline const Rows example3_a = {{12, 2, 5, 7}, {12, 7, 7}, {12, 1}};
inline const Rows example3_b = {{8, 5}, {7, 2, 4}, {10, 12, 3, 1}};

inline ledc::LedcCode fig1_code() { return ledc::construct_nested(fig1_structure(), ledc::make_field(7)).code; }

inline ledc::LedcCode example2_code() {
  return ledc::LedcCode(example2_structure(), ledc::MatrixGF::from_rows(ledc::make_field(7), example2_rows));
}

inline ledc::LedcCode example3_code() {
  return ledc::LedcCode(example1_structure(), ledc::MatrixGF::from_rows(ledc::make_field(13), example3_reference_rows));
}

// Random structure with k <= 12, m <= 4. Positions are shuffled across groups.
inline ledc::LocalityStructure random_structure(std::mt19937& rng) {
  const int k = 1 + static_cast<int>(rng() % 12);
  const int m = 1 + static_cast<int>(rng() % 4);
  std::vector<std::vector<int>> K(static_cast<std::size_t>(m));
  for (int i = 1; i <= k; ++i) {
    K[rng() % static_cast<unsigned>(m)].push_back(i);  // guarantees coverage
    for (auto& grp : K)
      if (rng() % 4 == 0 && (grp.empty() || grp.back() != i)) grp.push_back(i);
  }
  for (auto& grp : K)
    if (grp.empty()) grp.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(k)));
  std::vector<int> sizes;
  int n = 0;
  for (auto& grp : K) {
    std::sort(grp.begin(), grp.end());
    grp.erase(std::unique(grp.begin(), grp.end()), grp.end());
    sizes.push_back(static_cast<int>(grp.size()) + static_cast<int>(rng() % 4));
    n += sizes.back();
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<ledc::LocalGroup> groups;
  std::size_t next = 0;
  for (std::size_t g = 0; g < K.size(); ++g) {
    ledc::LocalGroup lg{K[g], {}};
    for (int c = 0; c < sizes[g]; ++c) lg.N.push_back(perm[next++]);
    groups.push_back(lg);
  }
  return ledc::validate(k, groups);
}

}  // namespace fixture

#endif  // LEDC_TESTS_FIXTURES_HPP
