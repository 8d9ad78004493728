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

// h-vectors of simplicial complexes, barycentric subdivision, and matroid
// complexes. A complex of dimension d-1 has h-polynomial of degree <= d.

#ifndef SYMDEC_COMPLEXES_HPP_
#define SYMDEC_COMPLEXES_HPP_

#include <string_view>
#include <utility>
#include <vector>

#include "symdec/polynomial.hpp"

namespace symdec {

struct HVector {
  std::vector<Rational> h;  // h_0..h_d
  FormalDegree d;
};

// h(sd(Delta)) = h_from_i(sum h_k x^k (x+1)^{d-k}, d). LengthMismatch unless
// |h| = d+1.
Polynomial sd_h(const HVector& hv);

// h_d > 0 and h_0 + ... + h_i <= h_d + ... + h_{d-i} for 0 <= i <= d.
bool level_2cm_check(const HVector& hv);

// Vertices are 1-based. Facets need not be maximal; faces are closed under
// taking subsets.
struct SimplicialComplex {
  std::vector<std::vector<int>> facets;

  static SimplicialComplex parse(std::string_view text);  // "1,2;2,3"
  // Nonempty faces, each sorted, without duplicates.
  std::vector<std::vector<int>> faces() const;
  // Largest facet size (dimension + 1).
  int d() const;
};

inline constexpr int kSdOracleFaceCap = 64;

std::vector<long long> f_vector(const SimplicialComplex& sc);  // f_{-1}, f_0, ...
HVector complex_hvector(const SimplicialComplex& sc);
// h(sd(Delta)) from the flags of nonempty faces. TooLarge past the face cap.
Polynomial sd_oracle(const SimplicialComplex& sc);

class Matroid {
 public:
  // Ground set 1..n; bases as 1-based element lists. Throws InvalidMatroid
  // when the basis-exchange axiom fails (checked for n <= 10) or the bases
  // are empty, of unequal size, or out of range.
  Matroid(int n, std::vector<std::vector<int>> bases);
  static Matroid parse(int n, std::string_view text);  // "1,2;1,3"
  static Matroid uniform(int k, int n);
  // Cycle matroid of a graph on vertices 1..v; loops and parallel edges
  // allowed. Ground set = edge indices 1..|edges|.
  static Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges);

  int ground_size() const noexcept { return n_; }
  int rank() const noexcept { return rank_; }
  const std::vector<unsigned>& basis_masks() const noexcept { return bases_; }

 private:
  int n_;
  int rank_;
  std::vector<unsigned> bases_;
};

inline constexpr int kMatroidGroundCap = 12;

// h-vector of the independence complex. TooLarge for n > 12.
HVector matroid_hvector(const Matroid& m);
bool is_coloop_free(const Matroid& m);

}  // namespace symdec

#endif  // SYMDEC_COMPLEXES_HPP_
