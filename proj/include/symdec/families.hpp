// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Eulerian-type polynomial families and brute-force enumeration oracles.
//
// Permutations are one-line words over 1..n.

#ifndef SYMDEC_FAMILIES_HPP_
#define SYMDEC_FAMILIES_HPP_

#include <vector>

#include "symdec/polynomial.hpp"

namespace symdec {

struct ColoredPermutation {
  std::vector<int> perm;
  std::vector<int> colors;  // in 0..r-1
};

struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> signs;  // +1 or -1
};

// k with perm_k > k, or perm_k = k and colors_k > 0.
int excedance_count(const ColoredPermutation& cp);
// i in 0..d-1 with e_i p_i > e_{i+1} p_{i+1}, where p_0 = 0, e_0 = 1.
int descent_count(const SignedPermutation& sp);
// No fixed point of color 0.
bool is_colored_derangement(const ColoredPermutation& cp);

Polynomial eulerian(int n);
Polynomial colored_eulerian(int n, int r);
// sum_m (rm)^k (rm+1)^{n-k} x^m = A / (1-x)^{n+1}.
Polynomial partial_colored_eulerian(int n, int r, int k);
Polynomial derangement(int n);
Polynomial colored_derangement(int n, int r);
// B_0^d for k = 0; otherwise signed permutations with e_d = 1 and
// p_d = d+1-k. Enumerates for d <= kTypeBEnumerationCap.
Polynomial typeB(int k, int d);

inline constexpr int kTypeBEnumerationCap = 7;
inline constexpr long long kColoredEnumerationCap = 20'000'000;

// Oracles by exhaustive enumeration. SizeCap beyond the caps above.
Polynomial colored_eulerian_bruteforce(int n, int r);
Polynomial colored_derangement_bruteforce(int n, int r);
Polynomial typeB_bruteforce(int k, int d);

}  // namespace symdec

#endif  // SYMDEC_FAMILIES_HPP_
