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

// Linear operators on Q[x]: the subdivision operator E (binom(x,k) -> x^k),
// the diamond product, the deranged map D (x^k -> d_k), the valuation
// operators T_k and phi_k = T_k / k!, the h-from-i transform and coordinates
// in the triangular cone bases.

#ifndef SYMDEC_OPERATORS_HPP_
#define SYMDEC_OPERATORS_HPP_

#include <optional>
#include <string_view>
#include <vector>

#include "symdec/polynomial.hpp"

namespace symdec {

// sum_m i(m) x^m = h / (1-x)^{d+1}. Throws DegreeTooSmall if deg i > d.
Polynomial h_from_i(const Polynomial& i, FormalDegree d);

Polynomial subdivision_E(const Polynomial& p);
Polynomial subdivision_E_inverse(const Polynomial& q);

// sum_k p^(k)/k! q^(k)/k! x^k (x+1)^k.
Polynomial diamond(const Polynomial& p, const Polynomial& q);
// E(E^-1(p) E^-1(q)); the definition, kept as a cross-check.
Polynomial diamond_by_definition(const Polynomial& p, const Polynomial& q);

// E_k^d = E(x^k (x+1)^{d-k}). Throws OutOfRange unless 0 <= k <= d.
Polynomial E_basis(int k, FormalDegree d);

// Linear extension of x^k -> d_k.
Polynomial deranged_D(const Polynomial& p);

// sum_{i=0}^k (-1)^{k-i} C(k,i) f((i+1)x).
Polynomial T_k(const Polynomial& f, int k);
// T_k(f) / k!; zero for k < 0.
Polynomial phi_k(const Polynomial& f, int k);

// Triangular bases of polynomials of degree <= d:
//   kXX1  x^k (x+1)^{d-k}
//   kE    E_k^d
//   kB2   (2x)^k (2x+1)^{d-k}
//   kBm   x^k (m x+1)^{d-k}
enum class ConeBasis { kXX1, kE, kB2, kBm };

std::string_view cone_basis_name(ConeBasis basis);

struct ConeCoefficients {
  std::vector<Rational> c;
  FormalDegree d;
  ConeBasis basis;
  int m = 1;  // only meaningful for kBm
};

// Unique coordinates of p in the basis, negative entries allowed.
ConeCoefficients cone_coordinates(const Polynomial& p, FormalDegree d,
                                  ConeBasis basis, int m = 1);
// Coordinates if all are nonnegative, std::nullopt (not in the cone)
// otherwise.
std::optional<ConeCoefficients> cone_membership(const Polynomial& p,
                                                FormalDegree d,
                                                ConeBasis basis, int m = 1);
Polynomial from_cone_coordinates(const ConeCoefficients& coords);
Polynomial cone_basis_element(int k, FormalDegree d, ConeBasis basis,
                              int m = 1);

// The cone B_{d,gamma} is spanned by g(i,j) = x^i(x+1)^{d-i} + x^j(x+1)^{d-j}
// with i + j >= gamma. The span is redundant, so membership is witnessed by
// an explicit nonnegative combination of generators.
struct GammaConeTerm {
  Rational coef;
  int i;
  int j;
};

Polynomial gamma_cone_generator(int i, int j, FormalDegree d);
// A nonnegative combination of generators with i' + j' >= gamma equal to
// phi_k(g(i, j)). Requires i + j >= gamma and 0 <= i, j <= d.
std::vector<GammaConeTerm> phi_gamma_cone_witness(int i, int j, FormalDegree d,
                                                  int gamma, int k);
Polynomial gamma_cone_value(const std::vector<GammaConeTerm>& terms,
                            FormalDegree d);
// Every term has coef >= 0 and i + j >= gamma.
bool gamma_cone_terms_valid(const std::vector<GammaConeTerm>& terms,
                            FormalDegree d, int gamma);

}  // namespace symdec

#endif  // SYMDEC_OPERATORS_HPP_
