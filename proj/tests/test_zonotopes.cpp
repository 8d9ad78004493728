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

#include <cmath>

#include "symdec/decompose.hpp"
#include "symdec/families.hpp"
#include "symdec/operators.hpp"
#include "symdec/verify.hpp"
#include "symdec/zonotopes.hpp"
#include "test_util.hpp"

using namespace symdec;
using symdec::testing::P;
using symdec::testing::code_of;

namespace {

// Lattice points of the box [0, a1 m] x ... by a product formula.
long long box_count(const std::vector<long long>& sides, int m) {
  long long n = 1;
  for (long long s : sides) n *= s * m + 1;
  return n;
}

}  // namespace

TEST_SUITE("zonotopes") {
  TEST_CASE("parsing and shape") {
    const auto z = ZonotopeSpec::parse("1,0,1;0,1,1");
    CHECK(z.ambient() == 2);
    CHECK(z.generators() == 3);
    CHECK(z.dim() == 2);
    CHECK(ZonotopeSpec::parse(z.to_string()).rows() == z.rows());
    CHECK(code_of([] { ZonotopeSpec::parse("1,0;1"); }) == ErrorCode::kLengthMismatch);
    CHECK(code_of([] { ZonotopeSpec::parse("1,a"); }) == ErrorCode::kParseError);
    CHECK(integer_rank({{1, 2}, {2, 4}}) == 1);
  }

  TEST_CASE("Ehrhart polynomials") {
    CHECK(ehrhart(ZonotopeSpec::parse("1,0;0,1")) == P("1,2,1"));
    CHECK(ehrhart(ZonotopeSpec::parse("2")) == P("1,2"));
    CHECK(ehrhart(ZonotopeSpec::parse("2,0;0,2")) == P("1,4,4"));
    CHECK(ehrhart_bruteforce(ZonotopeSpec::parse("1,0;0,1"), 2) == P("1,2,1"));
    CHECK(ehrhart_bruteforce(ZonotopeSpec::parse("2"), 1) == P("1,2"));
    CHECK(ehrhart_bruteforce(ZonotopeSpec(std::vector<std::vector<std::int64_t>>{}), 0) == P("1"));
    CHECK(code_of([] { ehrhart_bruteforce(ZonotopeSpec::parse("1,0;0,1"), 1); }) == ErrorCode::kOutOfRange);
    // Hexagon: area 3, boundary 6.
    CHECK(ehrhart(ZonotopeSpec::parse("1,0,1;0,1,1")) == P("1,3,3"));
    for (int m = 0; m <= 4; ++m) {
      CHECK(lattice_point_count(ZonotopeSpec::parse("2,0,0;0,1,0;0,0,3"), m) == box_count({2, 1, 3}, m));
    }
  }

  TEST_CASE("Ehrhart formula matches enumeration on the corpus") {
    for (const auto& z : zonotope_corpus(kDefaultSeed)) {
      CHECK(ehrhart(z) == ehrhart_bruteforce(z, z.dim() + 2));
    }
  }

  TEST_CASE("Lawrence h* and interior points") {
    CHECK(format_rational_list(lawrence_hstar(ZonotopeSpec::parse("1,0;0,1"))) == "1,0,0");
    CHECK(format_rational_list(lawrence_hstar(ZonotopeSpec::parse("2,0;0,2"))) == "1,2,1");
    CHECK(format_rational_list(lawrence_hstar(ZonotopeSpec::parse("1"))) == "1,0");
    CHECK(interior_point_count(ZonotopeSpec::parse("1,0;0,1")) == 0);
    CHECK(interior_point_count(ZonotopeSpec::parse("2,0;0,2")) == 1);
    CHECK(interior_point_count(ZonotopeSpec::parse("2")) == 1);
    // Interior count by enumeration: points of 3Z minus boundary.
    const auto hex = ZonotopeSpec::parse("1,0,1;0,1,1");
    CHECK(interior_point_count(hex) == 1);
  }

  TEST_CASE("h* and valuations") {
    const auto sq = ZonotopeSpec::parse("2,0;0,2");
    CHECK(hstar(sq) == P("1,6,1"));
    CHECK(hstar(ZonotopeSpec::parse("1,0;0,1")) == P("1,1"));
    CHECK(hstar(sq, ValuationSpec{{1, 0, 0}}) == hstar(sq));
    // alpha = e_k gives h_from_i(T_k(i)).
    const Polynomial i = ehrhart(sq);
    for (int k = 0; k <= 2; ++k) {
      std::vector<Rational> a(3, 0);
      a[k] = 1;
      CHECK(hstar(sq, ValuationSpec{a}) == h_from_i(T_k(i, k), FormalDegree(2)));
    }
    CHECK(code_of([&] { hstar(sq, ValuationSpec{{1, 0}}); }) == ErrorCode::kLengthMismatch);
    CHECK(code_of([&] { hstar(sq, ValuationSpec{{1, -1, 0}}); }) == ErrorCode::kNegativeCoefficient);
  }

  TEST_CASE("centrally symmetric coordinates") {
    CHECK(format_rational_list(decompose_cs(ZonotopeSpec::parse("2,0;0,2"))) == "1,0,0");
    CHECK(format_rational_list(decompose_cs(ZonotopeSpec::parse("2"))) == "1,0");
    CHECK(code_of([] { decompose_cs(ZonotopeSpec::parse("1,0;0,1")); }) == ErrorCode::kNotCentrallySymmetricForm);
    CHECK(has_doubled_generators(ZonotopeSpec::parse("2,0;0,-2")));
    CHECK_FALSE(has_doubled_generators(ZonotopeSpec::parse("2,1;0,2")));
    for (const auto& z : cs_zonotope_corpus(kDefaultSeed)) {
      const auto c = decompose_cs(z);
      CHECK(from_cone_coordinates({c, FormalDegree(z.dim()), ConeBasis::kB2}) == ehrhart(z));
    }
  }

  TEST_CASE("half-open cubes") {
    CHECK(halfopen_cube_hstar(0, 2) == P("1,6,1"));
    for (int d = 0; d <= 5; ++d) {
      CHECK(halfopen_cube_hstar(d, d) == h_from_i(Polynomial::monomial(Rational(1) * (1 << d), d), FormalDegree(d)));
      for (int k = 0; k <= d; ++k) CHECK(halfopen_cube_hstar(k, d) == typeB_bruteforce(k + 1, d + 1));
    }
    for (int d = 1; d <= 3; ++d) {
      std::vector<std::vector<std::int64_t>> rows(d, std::vector<std::int64_t>(d, 0));
      for (int i = 0; i < d; ++i) rows[i][i] = 2;
      const ZonotopeSpec cube(rows);
      for (int m = 0; m <= 3; ++m) {
        CHECK(lattice_point_count(cube, m) == static_cast<long long>(std::pow(2 * m + 1, d)));
      }
      CHECK(hstar(cube) == halfopen_cube_hstar(0, d));
    }
    CHECK(code_of([] { halfopen_cube_hstar(3, 2); }) == ErrorCode::kOutOfRange);
  }

  TEST_CASE("generator sign flips are lattice translations") {
    for (const auto& z : zonotope_corpus(kDefaultSeed)) {
      auto rows = z.rows();
      for (auto& row : rows)
        for (auto& v : row) v = -v;
      const ZonotopeSpec neg(rows);
      CHECK(ehrhart(neg) == ehrhart(z));
      CHECK(lattice_point_count(neg, 2) == lattice_point_count(z, 2));
    }
  }
}
