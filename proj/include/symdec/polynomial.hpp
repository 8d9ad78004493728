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

// Exact univariate polynomials over the rationals.
//
// Coefficients are stored lowest degree first: coeffs()[k] is the
// coefficient of x^k. The zero polynomial has an empty coefficient vector
// and degree -1. Every operation returns a normalized value (no trailing
// zeros), so structural equality is mathematical equality.

#ifndef SYMDEC_POLYNOMIAL_HPP_
#define SYMDEC_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "symdec/error.hpp"

namespace symdec {

using Integer = mpz_class;
using Rational = mpq_class;

// Explicit degree bound d used by the reversal/reflection maps and the
// f-transform. These maps depend on d, not on the actual degree, so d is
// never inferred from a coefficient vector.
class FormalDegree {
 public:
  explicit FormalDegree(int d);
  int value() const noexcept { return d_; }
  friend bool operator==(FormalDegree, FormalDegree) = default;

 private:
  int d_;
};

class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(std::initializer_list<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t k);
  // The polynomial x.
  static Polynomial x();
  // (a + b x)^n.
  static Polynomial linear_power(const Rational& a, const Rational& b,
                                 unsigned n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }
  // Coefficient of x^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;
  const Rational& leading() const;

  Rational evaluate(const Rational& x) const;
  int sign_at(const Rational& x) const;
  Polynomial derivative() const;
  // p(c x).
  Polynomial scale_argument(const Rational& c) const;
  // p(a + b x).
  Polynomial compose_affine(const Rational& a, const Rational& b) const;
  // x^k p(x).
  Polynomial shift(std::size_t k) const;
  Polynomial monic() const;
  bool has_nonnegative_coefficients() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws ZeroPolynomial when dividing by zero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                         const Polynomial& b);
// a / b with a mandatory zero remainder (InternalError otherwise).
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
// p / gcd(p, p'), made monic. Zero and constants map to themselves / 1.
Polynomial squarefree_part(const Polynomial& p);
// Yun decomposition: factors[i] is the monic squarefree product of the
// irreducible factors of multiplicity i+1. Empty for constants.
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

// x^d p(1/x): coefficient reversal inside a window of length d+1.
Polynomial reverse_I(const Polynomial& p, FormalDegree d);
// (-1)^d p(-1-x).
Polynomial reflect_R(const Polynomial& p, FormalDegree d);
// Unique c_0..c_d with p = sum c_k x^k (x+1)^{d-k}.
std::vector<Rational> to_xx1_basis(const Polynomial& p, FormalDegree d);
Polynomial from_xx1_basis(std::span<const Rational> c, FormalDegree d);

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);
// Stirling numbers of the second kind, S(0,0) = 1.
Integer stirling2(unsigned m, unsigned k);

// Text form: comma-separated rationals, lowest degree first.
Rational parse_rational(std::string_view text);
Polynomial parse_polynomial(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);
std::string format_rational_list(std::span<const Rational> values);
std::string format_coefficients(const Polynomial& p);
// Human form, e.g. "1+4x+x^2"; "0" for the zero polynomial.
std::string to_latex(const Polynomial& p);

}  // namespace symdec

#endif  // SYMDEC_POLYNOMIAL_HPP_
