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
#include <random>

#include "symdec/decompose.hpp"
#include "symdec/families.hpp"
#include "test_util.hpp"

using namespace symdec;
using symdec::testing::P;
using symdec::testing::code_of;

namespace {

const char* kExampleH = "1,1018,10678,14498,2933,32";
const char* kExampleF = "1,1023,14760,52650,68040,29160";
const char* kExampleAt = "1,992,12690,40860,48600,19440";
const char* kExampleBt = "31,2070,11790,19440,9720";

// Independent I_d-decomposition: unknowns a_0..a_{d/2} and b_0..b_{(d-1)/2}
// with the mirrored entries tied, solved from h_k = a_k + b_{k-1} by
// Gaussian elimination.
std::pair<Polynomial, Polynomial> symmetric_solve(const Polynomial& h, int d) {
  const int na = d / 2 + 1, nb = (d + 1) / 2, n = na + nb;
  auto a_var = [&](int k) { return std::min(k, d - k); };
  auto b_var = [&](int k) { return na + std::min(k, d - 1 - k); };
  std::vector<std::vector<Rational>> m(d + 1, std::vector<Rational>(n + 1, 0));
  for (int k = 0; k <= d; ++k) {
    m[k][a_var(k)] += 1;
    if (k >= 1) m[k][b_var(k - 1)] += 1;
    m[k][n] = h.coeff(k);
  }
  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && row <= d; ++col) {
    int piv = row;
    while (piv <= d && m[piv][col] == 0) ++piv;
    if (piv > d) continue;
    std::swap(m[piv], m[row]);
    for (int r = 0; r <= d; ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[row][col];
      for (int c = 0; c <= n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<Rational> x(n, 0);
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = m[r][n] / m[r][pivot_col[r]];
  std::vector<Rational> a(d + 1), b(std::max(d, 0));
  for (int k = 0; k <= d; ++k) a[k] = x[a_var(k)];
  for (int k = 0; k < d; ++k) b[k] = x[b_var(k)];
  return {Polynomial(a), Polynomial(b)};
}

}  // namespace

TEST_SUITE("decompose") {
  TEST_CASE("f-transform of the worked example") {
    const Polynomial h = P(kExampleH);
    CHECK(format_coefficients(f_transform(h, FormalDegree(5))) == kExampleF);
    CHECK(f_inverse(P(kExampleF), FormalDegree(5)) == h);
    CHECK(f_transform(P("1"), FormalDegree(0)) == P("1"));
    CHECK(f_transform(P("0,1"), FormalDegree(1)) == P("0,1"));
    CHECK(f_inverse(P("1,2,1"), FormalDegree(2)) == P("1"));
    CHECK(f_inverse(P("1,4,4"), FormalDegree(2)) == P("1,2,1"));
  }

  TEST_CASE("R-decomposition of the worked example") {
    const auto dec = decompose_R(P(kExampleF), FormalDegree(5));
    CHECK(format_coefficients(dec.a) == kExampleAt);
    CHECK(format_coefficients(dec.b) == kExampleBt);
    const Polynomial f = P(kExampleF);
    CHECK(P("1,1") * f - P("0,1") * reflect_R(f, FormalDegree(5)) == P(kExampleAt));
  }

  TEST_CASE("I-decomposition of the worked example") {
    // The unique symmetric pair summing to h. The printed middle coefficients
    // of a and b do not sum to h; these values do, and map onto the printed
    // R-parts under the f-transform.
    const Polynomial h = P(kExampleH);
    const auto dec = decompose_I(h, FormalDegree(5));
    CHECK(format_coefficients(dec.a) == "1,987,8732,8732,987,1");
    CHECK(format_coefficients(dec.b) == "31,1946,5766,1946,31");
    CHECK(dec.a + P("0,1") * dec.b == h);
    CHECK(is_symmetric(dec.a, FormalDegree(5)));
    CHECK(is_symmetric(dec.b, FormalDegree(4)));
    CHECK(format_coefficients(f_transform(dec.a, FormalDegree(5))) == kExampleAt);
    CHECK(format_coefficients(f_transform(dec.b, FormalDegree(4))) == kExampleBt);
    const auto [a2, b2] = symmetric_solve(h, 5);
    CHECK(a2 == dec.a);
    CHECK(b2 == dec.b);
    // The printed pair fails a + x b = h.
    const Polynomial printed = P("1,987,12814,12814,987,1") + P("0,31,1946,39836,1946,31");
    CHECK_FALSE(printed == h);
  }

  TEST_CASE("I-decomposition small cases") {
    const auto sym = decompose_I(P("1,4,1"), FormalDegree(2));
    CHECK(sym.a == P("1,4,1"));
    CHECK(sym.b.is_zero());
    const auto xd = decompose_I(P("0,1"), FormalDegree(1));
    CHECK(xd.a.is_zero());
    CHECK(xd.b == P("1"));
    const auto zero = decompose_I(Polynomial(), FormalDegree(3));
    CHECK(zero.a.is_zero());
    CHECK(zero.b.is_zero());
    CHECK(code_of([] { decompose_I(P("1,1,1"), FormalDegree(1)); }) == ErrorCode::kDegreeTooSmall);
  }

  TEST_CASE("R-decomposition small cases") {
    const auto one = decompose_R(P("1"), FormalDegree(1));
    CHECK(one.a == P("1,2"));
    CHECK(one.b == P("-2"));
    const auto lin = decompose_R(P("1,1"), FormalDegree(1));
    CHECK(lin.a == P("1,2"));
    CHECK(lin.b == P("-1"));
    // R_2(x^2+x) = x^2+x, so the b-part vanishes.
    const auto fixed = decompose_R(P("0,1,1"), FormalDegree(2));
    CHECK(fixed.a == P("0,1,1"));
    CHECK(fixed.b.is_zero());
  }

  TEST_CASE("decomposition properties on random inputs") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
      const int d = static_cast<int>(rng() % 8);
      std::vector<Rational> c;
      for (int k = 0; k <= d; ++k) c.emplace_back(static_cast<long>(rng() % 21) - 10);
      const Polynomial h(c);
      const FormalDegree fd(d);
      const auto id = decompose_I(h, fd);
      CHECK(id.a + P("0,1") * id.b == h);
      const auto [oa, ob] = symmetric_solve(h, d);
      CHECK(oa == id.a);
      CHECK(ob == id.b);
      CHECK(is_symmetric(id.a, fd));
      if (d >= 1) CHECK(is_symmetric(id.b, FormalDegree(d - 1)));
      if (d == 0) CHECK(id.b.is_zero());
      const Polynomial f = f_transform(h, fd);
      const auto rd = decompose_R(f, fd);
      CHECK(rd.a + P("0,1") * rd.b == f);
      CHECK(reflect_R(rd.a, fd) == rd.a);
      if (d >= 1) {
        CHECK(reflect_R(rd.b, FormalDegree(d - 1)) == rd.b);
        CHECK(rd.b == f_transform(id.b, FormalDegree(d - 1)));
      }
      CHECK(rd.a == f_transform(id.a, fd));
      CHECK(f_inverse(f, fd) == h);
    }
  }

  TEST_CASE("coefficient predicates") {
    CHECK(is_symmetric(P("1,11,11,1"), FormalDegree(3)));
    CHECK_FALSE(is_symmetric(P(kExampleH), FormalDegree(5)));
    CHECK(is_symmetric(Polynomial(), FormalDegree(4)));
    CHECK(is_alternatingly_increasing(P(kExampleH), FormalDegree(5)));
    CHECK(is_alternatingly_increasing(P("1,2,1"), FormalDegree(2)));
    CHECK_FALSE(is_alternatingly_increasing(P("1,0,2"), FormalDegree(2)));
    CHECK(is_unimodal(P("1,4,1")));
    CHECK_FALSE(is_unimodal(P("2,1,2")));
    CHECK(is_unimodal(Polynomial()));
    // Alternatingly increasing implies unimodal.
    for (int n = 1; n <= 8; ++n) CHECK(is_unimodal(derangement(n)));
  }

  TEST_CASE("division by 1-x") {
    CHECK(divide_by_one_minus_x(P("1,-1")) == P("1"));
    CHECK(divide_by_one_minus_x(P("1,0,-1")) == P("1,1"));
    CHECK(code_of([] { divide_by_one_minus_x(P("1,1")); }) == ErrorCode::kInternalError);
  }
}
