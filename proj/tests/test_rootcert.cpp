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

#include "symdec/families.hpp"
#include "symdec/rootcert.hpp"
#include "test_util.hpp"

using namespace symdec;
using symdec::testing::P;
using symdec::testing::code_of;

namespace {

Polynomial from_roots(const std::vector<Rational>& roots, const Rational& lead = 1) {
  Polynomial p = Polynomial::constant(lead);
  for (const auto& r : roots) p *= Polynomial{-r, 1};
  return p;
}

// g >= 0 on the real line: every real root of odd multiplicity is absent and
// g is positive somewhere off its roots.
bool nonnegative_on_line(const Polynomial& g) {
  if (g.is_zero()) return true;
  const auto parts = squarefree_decomposition(g);
  for (std::size_t k = 0; k < parts.size(); k += 2) {
    if (parts[k].degree() >= 1 && real_root_count(parts[k]) > 0) return false;
  }
  for (int x = 0;; ++x) {
    const int s = g.sign_at(Rational(x) + Rational(1, 7));
    if (s != 0) return s > 0;
  }
}

// p < q for positive leading coefficients: p'q - pq' <= 0 everywhere.
bool wronskian_oracle(const Polynomial& p, const Polynomial& q) {
  const Polynomial w = p.derivative() * q - p * q.derivative();
  return nonnegative_on_line(-w);
}

}  // namespace

TEST_SUITE("rootcert") {
  TEST_CASE("Sturm counts") {
    CHECK(sturm_count(P("-2,0,1"), 0, 2) == 1);
    CHECK(sturm_count(P("1,0,1"), -10, 10) == 0);
    const Polynomial d6 = derangement(6);
    CHECK(code_of([&] { sturm_count(d6, -1000000, 0); }) == ErrorCode::kEndpointIsRoot);
    const Polynomial d6_over_x = exact_divide(d6, P("0,1"));
    CHECK(sturm_count(d6_over_x, -1000000, 0) == 4);
    CHECK(real_root_count(P("0,0,1")) == 1);
    CHECK(code_of([] { real_root_count(Polynomial()); }) == ErrorCode::kZeroPolynomial);
  }

  TEST_CASE("real-rootedness") {
    CHECK(is_real_rooted(P("1,11,11,1")));
    CHECK_FALSE(is_real_rooted(P("1,0,1")));
    CHECK(is_real_rooted(Polynomial()));
    CHECK(is_real_rooted(P("5")));
    CHECK(is_real_rooted(P("0,0,1") * P("1,1")));
    for (int n = 1; n <= 9; ++n) CHECK(is_real_rooted(eulerian(n)));
  }

  TEST_CASE("root isolation") {
    const auto iso = isolate_roots(P("0,0,1,1"));  // x^2 (x+1)
    REQUIRE(iso.intervals.size() == 2);
    CHECK(iso.intervals[0].lo <= -1);
    CHECK(iso.intervals[0].hi >= -1);
    CHECK(iso.intervals[0].multiplicity == 1);
    CHECK(iso.intervals[1].lo <= 0);
    CHECK(iso.intervals[1].hi >= 0);
    CHECK(iso.intervals[1].multiplicity == 2);
    CHECK(iso.total_multiplicity() == 3);

    const auto d3 = isolate_roots(P("0,1,1"));
    REQUIRE(d3.intervals.size() == 2);
    CHECK(d3.intervals[0].multiplicity == 1);

    // Roots of 1+4x+x^2 are -2 -+ sqrt 3: -3.732 and -0.268.
    const auto a3 = isolate_roots(P("1,4,1"));
    REQUIRE(a3.intervals.size() == 2);
    CHECK(a3.intervals[0].lo <= Rational(-3733, 1000));
    CHECK(a3.intervals[0].hi >= Rational(-3732, 1000));
    CHECK(a3.intervals[1].lo <= Rational(-268, 1000));
    CHECK(a3.intervals[1].hi >= Rational(-267, 1000));
    CHECK(code_of([] { isolate_roots(P("1,0,1")); }) == ErrorCode::kNotRealRooted);
  }

  TEST_CASE("isolating intervals are disjoint and certified") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
      std::vector<Rational> roots;
      const int n = static_cast<int>(rng() % 7) + 1;
      for (int i = 0; i < n; ++i) roots.emplace_back(static_cast<long>(rng() % 9) - 6, static_cast<unsigned long>(rng() % 3 + 1));
      for (auto& r : roots) r.canonicalize();
      const Polynomial p = from_roots(roots);
      const auto iso = isolate_roots(p);
      CHECK(iso.total_multiplicity() == n);
      std::sort(roots.begin(), roots.end());
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      REQUIRE(iso.intervals.size() == roots.size());
      for (std::size_t i = 0; i < roots.size(); ++i) {
        CHECK(iso.intervals[i].lo <= roots[i]);
        CHECK(roots[i] <= iso.intervals[i].hi);
        if (i + 1 < roots.size()) {
          const auto& u = iso.intervals[i];
          const auto& v = iso.intervals[i + 1];
          // open intervals may share an endpoint, exact roots may not
          if (u.lo == u.hi || v.lo == v.hi) CHECK(u.hi < v.lo);
          else CHECK(u.hi <= v.lo);
        }
      }
    }
  }

  TEST_CASE("interlacing examples") {
    CHECK(interlaces(P("1,4,1"), P("0,1,1")).holds);
    const auto zero = interlaces(Polynomial(), P("1,1"));
    CHECK(zero.holds);
    CHECK(zero.reason == InterlaceReason::kZeroConvention);
    CHECK(interlaces(P("1,1"), Polynomial()).holds);
    CHECK(interlaces(P("1,1"), P("1,2,1")).holds);
    const auto nrr = interlaces(P("1,0,1"), P("1,1"));
    CHECK_FALSE(nrr.holds);
    CHECK(nrr.reason == InterlaceReason::kNotRealRooted);
    CHECK(code_of([] { interlaces(P("-1,1"), P("1,1")); }) == ErrorCode::kUnsupportedSignPattern);
    // Degree gap of two cannot interlace.
    CHECK_FALSE(interlaces(P("1"), P("0,0,1")).holds);
  }

  TEST_CASE("signed interlacing") {
    // p < q  iff  -q < p  iff  q < -p  iff  -p < -q.
    const Polynomial p = P("1,4,1"), q = P("0,1,1");
    CHECK(interlaces_signed(p, q).holds);
    CHECK(interlaces_signed(-p, -q).holds);
    CHECK(interlaces_signed(-q, p).holds);
    CHECK(interlaces_signed(q, -p).holds);
    CHECK_FALSE(interlaces_signed(q, p).holds);
    CHECK(interlaces_signed(q, p).reason == InterlaceReason::kSignMismatch);
  }

  TEST_CASE("interlacing agrees with the Wronskian criterion") {
    std::mt19937_64 rng(17);
    int holds = 0;
    for (int t = 0; t < 400; ++t) {
      auto draw = [&](int n) {
        std::vector<Rational> r;
        for (int i = 0; i < n; ++i) {
          Rational v(-static_cast<long>(rng() % 13), static_cast<unsigned long>(rng() % 3 + 1));
          v.canonicalize();
          r.push_back(v);
        }
        return r;
      };
      const int n = static_cast<int>(rng() % 5);
      const int m = n + static_cast<int>(rng() % 3) - (n > 0 ? 1 : 0);
      const Polynomial p = from_roots(draw(n), static_cast<long>(rng() % 3 + 1));
      const Polynomial q = from_roots(draw(m), static_cast<long>(rng() % 3 + 1));
      const bool cert = interlaces(p, q).holds;
      CHECK(cert == wronskian_oracle(p, q));
      holds += cert;
    }
    CHECK(holds > 20);  // both outcomes exercised
    CHECK(holds < 380);
  }

  TEST_CASE("hand-built interleavings") {
    // beta <= alpha pattern for equal and one-more degrees.
    const Polynomial p = from_roots({-4, -2}), q = from_roots({-3, -1});
    CHECK(interlaces(p, q).holds);
    CHECK_FALSE(interlaces(q, p).holds);
    CHECK(interlaces(from_roots({-2}), from_roots({-3, -1})).holds);
    CHECK_FALSE(interlaces(from_roots({-3, -1}), from_roots({-2})).holds);
    CHECK(interlaces(from_roots({-2, -2}), from_roots({-2, -1})).holds);
    CHECK_FALSE(interlaces(from_roots({-5, -4}), from_roots({-3, -1})).holds);
  }

  TEST_CASE("chains") {
    CHECK(certify_chain({eulerian(1), eulerian(2), eulerian(3)}));
    CHECK_FALSE(certify_chain({P("1,0,1"), P("1,1")}));
    CHECK(certify_chain({P("1,1")}));
    CHECK(certify_chain({}));
  }
}
