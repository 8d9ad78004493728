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

// Ehrhart data of lattice zonotopes Z(u_1, ..., u_m) = sum of segments
// [0, u_i], with u_i the columns of an integer matrix.

#ifndef SYMDEC_ZONOTOPES_HPP_
#define SYMDEC_ZONOTOPES_HPP_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "symdec/polynomial.hpp"

namespace symdec {

class ZonotopeSpec {
 public:
  // rows[r][c] is coordinate r of generator c. All rows must have the same
  // length. An empty matrix or zero columns give the single point.
  explicit ZonotopeSpec(std::vector<std::vector<std::int64_t>> rows);
  // Rows separated by ';', entries by ','. "1,0;0,1" is the unit square.
  static ZonotopeSpec parse(std::string_view text);
  // Generators given as columns.
  static ZonotopeSpec from_generators(const std::vector<std::vector<std::int64_t>>& gens,
                                      int ambient);

  int ambient() const noexcept { return static_cast<int>(rows_.size()); }
  int generators() const noexcept { return cols_; }
  int dim() const noexcept { return dim_; }
  std::int64_t entry(int r, int c) const { return rows_[r][c]; }
  const std::vector<std::vector<std::int64_t>>& rows() const noexcept { return rows_; }
  std::vector<std::int64_t> generator(int c) const;
  std::string to_string() const;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
  int cols_ = 0;
  int dim_ = 0;
};

// Nonnegative weights alpha_0..alpha_d of f*_0..f*_d. alpha = (1, 0, ..., 0)
// is the lattice-point count.
struct ValuationSpec {
  std::vector<Rational> alpha;
};

// Exact rank of an integer matrix.
int integer_rank(const std::vector<std::vector<std::int64_t>>& rows);

// Sum over linearly independent generator subsets S of g(S) x^{|S|}, g the
// gcd of the maximal minors.
Polynomial ehrhart(const ZonotopeSpec& z);

inline constexpr long long kBruteforceBoxCap = 2'000'000;
// Lattice-point counts of m Z for m = 0..maxdilate, interpolated in degree
// dim. OutOfRange if maxdilate < dim; TooLarge past the box cap.
Polynomial ehrhart_bruteforce(const ZonotopeSpec& z, int maxdilate);
// |m Z cap Z^n| by enumeration.
long long lattice_point_count(const ZonotopeSpec& z, int m);

// Coordinates of the Ehrhart polynomial in x^i (x+1)^{d-i}; these are the
// h*-coefficients of the Lawrence polytope. Throws NegativeCoefficient if an
// entry is negative or not integral.
std::vector<Rational> lawrence_hstar(const ZonotopeSpec& z);
// (-1)^d i(Z; -1): lattice points in the relative interior.
Integer interior_point_count(const ZonotopeSpec& z);

// i^phi = sum alpha_k T_k(i).
Polynomial valuation_ehrhart(const ZonotopeSpec& z, const ValuationSpec& v);
// h_from_i(i^phi, d); the plain h* when v is absent.
Polynomial hstar(const ZonotopeSpec& z, const std::optional<ValuationSpec>& v = std::nullopt);

// For a centrally symmetric zonotope given with doubled generators 2u_i:
// the c_k with i(Z) = sum c_k (2x)^k (2x+1)^{d-k}. Throws
// NotCentrallySymmetricForm if some c_k is negative.
std::vector<Rational> decompose_cs(const ZonotopeSpec& z);
// True when the matrix has only even entries (the doubled-generator form).
bool has_doubled_generators(const ZonotopeSpec& z);

// h_from_i((2x)^k (2x+1)^{d-k}, d).
Polynomial halfopen_cube_hstar(int k, int d);

}  // namespace symdec

#endif  // SYMDEC_ZONOTOPES_HPP_
