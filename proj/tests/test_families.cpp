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

#include <algorithm>
#include <numeric>

#include "symdec/families.hpp"
#include "symdec/zonotopes.hpp"
#include "test_util.hpp"

using namespace symdec;
using symdec::testing::P;
using symdec::testing::code_of;

namespace {

// Descents of ordinary permutations, counted independently of the library.
Polynomial eulerian_by_descents(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Rational> counts(std::max(n, 1), 0);
  do {
    int des = 0;
    for (int i = 0; i + 1 < n; ++i) des += perm[i] > perm[i + 1];
    counts[des] += 1;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Polynomial(counts);
}

}  // namespace

TEST_SUITE("families") {
  TEST_CASE("statistics") {
    CHECK(excedance_count({{1}, {0}}) == 0);
    CHECK(excedance_count({{1}, {1}}) == 1);
    CHECK(excedance_count({{2, 1}, {0, 0}}) == 1);
    CHECK(is_colored_derangement({{1}, {1}}));
    CHECK_FALSE(is_colored_derangement({{1, 2}, {1, 0}}));
    CHECK(descent_count({{1, 2}, {1, 1}}) == 0);
    CHECK(descent_count({{1, 2}, {-1, 1}}) == 1);  // 0 > -1 at the front
    CHECK(descent_count({{2, 1}, {1, 1}}) == 1);
  }

  TEST_CASE("Eulerian table") {
    const char* rows[] = {"1", "1,1", "1,4,1", "1,11,11,1", "1,26,66,26,1", "1,57,302,302,57,1"};
    for (int n = 1; n <= 6; ++n) CHECK(format_coefficients(eulerian(n)) == rows[n - 1]);
    CHECK(eulerian(0) == P("1"));
    for (int n = 1; n <= 8; ++n) CHECK(eulerian(n) == eulerian_by_descents(n));
  }

  TEST_CASE("derangement table") {
    const char* rows[] = {"0", "0,1", "0,1,1", "0,1,7,1", "0,1,21,21,1", "0,1,51,161,51,1"};
    for (int n = 1; n <= 6; ++n) CHECK(format_coefficients(derangement(n)) == rows[n - 1]);
    CHECK(derangement(0) == P("1"));
    // d_n(1) counts derangements: 1, 0, 1, 2, 9, 44, 265, 1854.
    const long counts[] = {1, 0, 1, 2, 9, 44, 265, 1854};
    for (int n = 0; n <= 7; ++n) CHECK(derangement(n).evaluate(1) == counts[n]);
  }

  TEST_CASE("colored families") {
    CHECK(colored_eulerian(1, 2) == P("1,1"));
    CHECK(colored_derangement(1, 2) == P("0,1"));
    for (int n = 0; n <= 7; ++n) {
      CHECK(colored_eulerian(n, 1) == eulerian(n));
      CHECK(colored_derangement(n, 1) == derangement(n));
    }
    for (int r = 1; r <= 3; ++r)
      for (int n = 0; n <= 5; ++n) {
        CHECK(colored_eulerian(n, r) == colored_eulerian_bruteforce(n, r));
        CHECK(colored_derangement(n, r) == colored_derangement_bruteforce(n, r));
        // Total count r^n n!.
        Integer size = factorial(n);
        for (int k = 0; k < n; ++k) size *= r;
        CHECK(colored_eulerian(n, r).evaluate(1) == Rational(size));
      }
    CHECK(code_of([] { colored_eulerian_bruteforce(9, 4); }) == ErrorCode::kSizeCap);
    CHECK(code_of([] { colored_eulerian(2, 0); }) == ErrorCode::kOutOfRange);
  }

  TEST_CASE("partial colored Eulerian") {
    for (int r = 1; r <= 3; ++r)
      for (int n = 0; n <= 6; ++n) CHECK(partial_colored_eulerian(n, r, 0) == colored_eulerian(n, r));
    CHECK(partial_colored_eulerian(1, 2, 1) == P("0,2"));
    for (int d = 0; d <= 5; ++d)
      for (int k = 0; k <= d; ++k)
        CHECK(partial_colored_eulerian(d, 2, k) == typeB_bruteforce(k + 1, d + 1));
    CHECK(code_of([] { partial_colored_eulerian(2, 2, 3); }) == ErrorCode::kOutOfRange);
  }

  TEST_CASE("type B") {
    CHECK(typeB(0, 2) == P("1,6,1"));
    for (int d = 0; d <= 6; ++d) CHECK(typeB(1, d + 1) == typeB(0, d));
    for (int d = 0; d <= 5; ++d) CHECK(typeB(0, d) == halfopen_cube_hstar(0, d));
    // Past the enumeration cap the closed form takes over.
    CHECK(typeB(3, 9) == partial_colored_eulerian(8, 2, 2));
    CHECK(typeB(0, 8) == partial_colored_eulerian(8, 2, 0));
    CHECK(code_of([] { typeB_bruteforce(0, 8); }) == ErrorCode::kSizeCap);
    // 2^d d! signed permutations.
    for (int d = 0; d <= 6; ++d) {
      Integer size = factorial(d);
      for (int k = 0; k < d; ++k) size *= 2;
      CHECK(typeB(0, d).evaluate(1) == Rational(size));
    }
  }
}
