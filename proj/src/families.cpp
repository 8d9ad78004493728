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

#include "symdec/families.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "symdec/operators.hpp"

namespace symdec {

int excedance_count(const ColoredPermutation& cp) {
  int count = 0;
  for (std::size_t k = 0; k < cp.perm.size(); ++k) {
    const int pos = static_cast<int>(k) + 1;
    if (cp.perm[k] > pos || (cp.perm[k] == pos && cp.colors[k] > 0)) ++count;
  }
  return count;
}

int descent_count(const SignedPermutation& sp) {
  int count = 0;
  int prev = 0;
  for (std::size_t i = 0; i < sp.perm.size(); ++i) {
    const int cur = sp.signs[i] * sp.perm[i];
    if (prev > cur) ++count;
    prev = cur;
  }
  return count;
}

bool is_colored_derangement(const ColoredPermutation& cp) {
  for (std::size_t k = 0; k < cp.perm.size(); ++k) {
    if (cp.perm[k] == static_cast<int>(k) + 1 && cp.colors[k] == 0) return false;
  }
  return true;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kOutOfRange, what);
}

std::vector<Polynomial> derangements_upto(int n) {
  std::vector<Polynomial> eul, der;
  for (int k = 0; k <= n; ++k) eul.push_back(eulerian(k));
  for (int m = 0; m <= n; ++m) {
    Polynomial dm;
    for (int k = 0; k <= m; ++k) {
      Rational c(binomial(m, k));
      if ((m - k) % 2 == 1) c = -c;
      dm += eul[k] * c;
    }
    der.push_back(std::move(dm));
  }
  return der;
}

long long colored_group_size(int n, int r) {
  long long size = 1;
  for (int k = 1; k <= n; ++k) {
    size *= static_cast<long long>(k) * r;
    if (size > kColoredEnumerationCap) return size;
  }
  return size;
}

// Calls f on every element of Z_r wr S_n.
template <typename F>
void for_each_colored(int n, int r, F&& f) {
  if (colored_group_size(n, r) > kColoredEnumerationCap) {
    throw Error(ErrorCode::kSizeCap, "colored enumeration for n=" + std::to_string(n) +
                                         ", r=" + std::to_string(r) + " exceeds cap");
  }
  ColoredPermutation cp;
  cp.perm.resize(n);
  std::iota(cp.perm.begin(), cp.perm.end(), 1);
  do {
    cp.colors.assign(n, 0);
    while (true) {
      f(cp);
      int pos = 0;
      while (pos < n && ++cp.colors[pos] == r) cp.colors[pos++] = 0;
      if (pos == n) break;
    }
  } while (std::next_permutation(cp.perm.begin(), cp.perm.end()));
}

Polynomial from_counts(const std::vector<long long>& counts) {
  std::vector<Rational> c;
  for (long long v : counts) c.emplace_back(static_cast<long>(v));
  return Polynomial(std::move(c));
}

}  // namespace

Polynomial eulerian(int n) {
  require(n >= 0, "eulerian: n must be nonnegative");
  return h_from_i(Polynomial::linear_power(1, 1, n), FormalDegree(n));
}

Polynomial colored_eulerian(int n, int r) {
  require(n >= 0 && r >= 1, "colored_eulerian: need n >= 0, r >= 1");
  return h_from_i(Polynomial::linear_power(1, r, n), FormalDegree(n));
}

Polynomial partial_colored_eulerian(int n, int r, int k) {
  require(n >= 0 && r >= 1 && k >= 0 && k <= n,
          "partial_colored_eulerian: need 0 <= k <= n, r >= 1");
  const Polynomial i = Polynomial::linear_power(0, r, k) * Polynomial::linear_power(1, r, n - k);
  return h_from_i(i, FormalDegree(n));
}

Polynomial derangement(int n) {
  require(n >= 0, "derangement: n must be nonnegative");
  return derangements_upto(n).back();
}

Polynomial colored_derangement(int n, int r) {
  require(n >= 0 && r >= 1, "colored_derangement: need n >= 0, r >= 1");
  const auto der = derangements_upto(n);
  Polynomial out;
  for (int k = 0; k <= n; ++k) {
    Integer rm1_pow, r_pow;
    mpz_ui_pow_ui(rm1_pow.get_mpz_t(), r - 1, n - k);
    mpz_ui_pow_ui(r_pow.get_mpz_t(), r, k);
    const Rational c(binomial(n, n - k) * rm1_pow * r_pow);
    if (c != 0) out += der[k].shift(n - k) * c;
  }
  return out;
}

Polynomial typeB(int k, int d) {
  require(d >= 0 && k >= 0 && k <= d, "typeB: need 0 <= k <= d");
  if (d <= kTypeBEnumerationCap) return typeB_bruteforce(k, d);
  if (k == 0) return partial_colored_eulerian(d, 2, 0);
  return partial_colored_eulerian(d - 1, 2, k - 1);
}

Polynomial colored_eulerian_bruteforce(int n, int r) {
  require(n >= 0 && r >= 1, "colored_eulerian_bruteforce: need n >= 0, r >= 1");
  std::vector<long long> counts(n + 1, 0);
  for_each_colored(n, r, [&](const ColoredPermutation& cp) { ++counts[excedance_count(cp)]; });
  return from_counts(counts);
}

Polynomial colored_derangement_bruteforce(int n, int r) {
  require(n >= 0 && r >= 1, "colored_derangement_bruteforce: need n >= 0, r >= 1");
  std::vector<long long> counts(n + 1, 0);
  for_each_colored(n, r, [&](const ColoredPermutation& cp) {
    if (is_colored_derangement(cp)) ++counts[excedance_count(cp)];
  });
  return from_counts(counts);
}

Polynomial typeB_bruteforce(int k, int d) {
  require(d >= 0 && k >= 0 && k <= d, "typeB_bruteforce: need 0 <= k <= d");
  if (d > kTypeBEnumerationCap) {
    throw Error(ErrorCode::kSizeCap, "signed permutation enumeration beyond d=" +
                                         std::to_string(kTypeBEnumerationCap));
  }
  std::vector<long long> counts(d + 1, 0);
  SignedPermutation sp;
  sp.perm.resize(d);
  std::iota(sp.perm.begin(), sp.perm.end(), 1);
  do {
    if (k >= 1 && sp.perm[d - 1] != d + 1 - k) continue;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
      sp.signs.resize(d);
      for (int i = 0; i < d; ++i) sp.signs[i] = (mask >> i) & 1u ? -1 : 1;
      if (k >= 1 && sp.signs[d - 1] != 1) continue;
      ++counts[descent_count(sp)];
    }
  } while (std::next_permutation(sp.perm.begin(), sp.perm.end()));
  return from_counts(counts);
}

}  // namespace symdec
