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

#include "symdec/operators.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "symdec/families.hpp"

namespace symdec {

Polynomial h_from_i(const Polynomial& i, FormalDegree d) {
  const int n = d.value();
  if (i.degree() > n) {
    throw Error(ErrorCode::kDegreeTooSmall, "h_from_i: deg i exceeds d");
  }
  // Coefficients of (1-x)^{d+1} * sum_m i(m) x^m up to x^{2d}.
  std::vector<Rational> values(2 * n + 1);
  for (int m = 0; m <= 2 * n; ++m) values[m] = i.evaluate(m);
  std::vector<Rational> signed_binom(n + 2);
  for (int j = 0; j <= n + 1; ++j) {
    signed_binom[j] = Rational(binomial(n + 1, j));
    if (j % 2 == 1) signed_binom[j] = -signed_binom[j];
  }
  std::vector<Rational> h(n + 1);
  for (int k = 0; k <= 2 * n; ++k) {
    Rational acc = 0;
    for (int j = 0; j <= std::min(k, n + 1); ++j) acc += signed_binom[j] * values[k - j];
    if (k <= n) {
      h[k] = acc;
    } else if (acc != 0) {
      throw Error(ErrorCode::kNonvanishingTail,
                  "h_from_i: coefficient " + std::to_string(k) + " is " + acc.get_str());
    }
  }
  return Polynomial(std::move(h));
}

Polynomial subdivision_E(const Polynomial& p) {
  const int n = p.degree();
  std::vector<Rational> out(std::max(n + 1, 0));
  for (int m = 0; m <= n; ++m) {
    const Rational& pm = p.coeffs()[m];
    if (pm == 0) continue;
    for (int k = 0; k <= m; ++k) {
      out[k] += pm * Rational(factorial(k) * stirling2(m, k));
    }
  }
  return Polynomial(std::move(out));
}

Polynomial subdivision_E_inverse(const Polynomial& q) {
  Polynomial out;
  Polynomial binom_x_k = Polynomial::constant(1);  // binom(x, k)
  for (int k = 0; k <= q.degree(); ++k) {
    if (k > 0) binom_x_k *= Polynomial({Rational(-(k - 1), k), Rational(1, k)});
    if (q.coeffs()[k] != 0) out += binom_x_k * q.coeffs()[k];
  }
  return out;
}

Polynomial diamond(const Polynomial& p, const Polynomial& q) {
  Polynomial out;
  Polynomial dp = p, dq = q;
  const Polynomial xx1 = Polynomial({0, 1, 1});
  Polynomial xx1_pow = Polynomial::constant(1);
  Rational kfact = 1;
  for (int k = 0; !dp.is_zero() && !dq.is_zero(); ++k) {
    if (k > 0) {
      dp = dp.derivative();
      dq = dq.derivative();
      kfact *= k;
      xx1_pow *= xx1;
    }
    out += dp * dq * xx1_pow * (1 / (kfact * kfact));
  }
  return out;
}

Polynomial diamond_by_definition(const Polynomial& p, const Polynomial& q) {
  return subdivision_E(subdivision_E_inverse(p) * subdivision_E_inverse(q));
}

Polynomial E_basis(int k, FormalDegree d) {
  if (k < 0 || k > d.value()) {
    throw Error(ErrorCode::kOutOfRange, "E_basis: need 0 <= k <= d");
  }
  return subdivision_E(Polynomial::monomial(1, k) *
                       Polynomial::linear_power(1, 1, d.value() - k));
}

Polynomial deranged_D(const Polynomial& p) {
  Polynomial out;
  for (int k = 0; k <= p.degree(); ++k) {
    if (p.coeffs()[k] != 0) out += derangement(k) * p.coeffs()[k];
  }
  return out;
}

Polynomial T_k(const Polynomial& f, int k) {
  if (k < 0) throw Error(ErrorCode::kOutOfRange, "T_k: k must be nonnegative");
  Polynomial out;
  for (int i = 0; i <= k; ++i) {
    Rational c(binomial(k, i));
    if ((k - i) % 2 == 1) c = -c;
    out += f.scale_argument(i + 1) * c;
  }
  return out;
}

Polynomial phi_k(const Polynomial& f, int k) {
  if (k < 0) return {};
  return T_k(f, k) * Rational(1, factorial(k));
}

std::string_view cone_basis_name(ConeBasis basis) {
  switch (basis) {
    case ConeBasis::kXX1: return "XX1";
    case ConeBasis::kE: return "E";
    case ConeBasis::kB2: return "B2";
    case ConeBasis::kBm: return "Bm";
  }
  return "unknown";
}

namespace {

// Coordinates in the basis (s x)^k (m x + 1)^{d-k}.
std::vector<Rational> triangular_coordinates(Polynomial rest, int d, const Rational& s,
                                             const Rational& m) {
  if (rest.degree() > d) {
    throw Error(ErrorCode::kDegreeTooSmall, "cone coordinates: degree exceeds d");
  }
  std::vector<Rational> c(d + 1);
  for (int k = 0; k <= d; ++k) {
    c[k] = rest.coeff(0);
    if (c[k] != 0) rest -= Polynomial::linear_power(1, m, d - k) * c[k];
    if (rest.is_zero()) break;
    if (rest.coeff(0) != 0) {
      throw Error(ErrorCode::kInternalError, "cone coordinates: elimination failed");
    }
    std::vector<Rational> shifted(rest.coeffs().begin() + 1, rest.coeffs().end());
    rest = Polynomial(std::move(shifted)) * (1 / s);
  }
  if (!rest.is_zero()) {
    throw Error(ErrorCode::kInternalError, "cone coordinates: nonzero remainder");
  }
  return c;
}

std::pair<Rational, Rational> basis_parameters(ConeBasis basis, int m) {
  switch (basis) {
    case ConeBasis::kXX1:
    case ConeBasis::kE: return {1, 1};
    case ConeBasis::kB2: return {2, 2};
    case ConeBasis::kBm: return {1, m};
  }
  return {1, 1};
}

}  // namespace

ConeCoefficients cone_coordinates(const Polynomial& p, FormalDegree d, ConeBasis basis,
                                  int m) {
  const auto [s, mm] = basis_parameters(basis, m);
  const Polynomial target = basis == ConeBasis::kE ? subdivision_E_inverse(p) : p;
  return {triangular_coordinates(target, d.value(), s, mm), d, basis,
          basis == ConeBasis::kBm ? m : 1};
}

std::optional<ConeCoefficients> cone_membership(const Polynomial& p, FormalDegree d,
                                                ConeBasis basis, int m) {
  ConeCoefficients coords = cone_coordinates(p, d, basis, m);
  for (const auto& c : coords.c) {
    if (c < 0) return std::nullopt;
  }
  return coords;
}

Polynomial cone_basis_element(int k, FormalDegree d, ConeBasis basis, int m) {
  if (k < 0 || k > d.value()) {
    throw Error(ErrorCode::kOutOfRange, "cone basis index out of range");
  }
  if (basis == ConeBasis::kE) return E_basis(k, d);
  const auto [s, mm] = basis_parameters(basis, m);
  return Polynomial::linear_power(0, s, k) * Polynomial::linear_power(1, mm, d.value() - k);
}

Polynomial from_cone_coordinates(const ConeCoefficients& coords) {
  if (static_cast<int>(coords.c.size()) != coords.d.value() + 1) {
    throw Error(ErrorCode::kLengthMismatch, "cone coordinates must have length d+1");
  }
  Polynomial out;
  for (int k = 0; k <= coords.d.value(); ++k) {
    if (coords.c[k] != 0) {
      out += cone_basis_element(k, coords.d, coords.basis, coords.m) * coords.c[k];
    }
  }
  return out;
}

Polynomial gamma_cone_generator(int i, int j, FormalDegree d) {
  const int n = d.value();
  if (i < 0 || j < 0 || i > n || j > n) {
    throw Error(ErrorCode::kOutOfRange, "gamma cone generator index out of range");
  }
  return Polynomial::monomial(1, i) * Polynomial::linear_power(1, 1, n - i) +
         Polynomial::monomial(1, j) * Polynomial::linear_power(1, 1, n - j);
}

namespace {

std::vector<Rational> integral_xx1_coordinates(const Polynomial& p, FormalDegree d) {
  auto c = to_xx1_basis(p, d);
  for (const auto& v : c) {
    if (v < 0 || v.get_den() != 1) {
      throw Error(ErrorCode::kInternalError, "expected nonnegative integer coordinates");
    }
  }
  return c;
}

std::vector<GammaConeTerm> merge_terms(const std::vector<GammaConeTerm>& terms) {
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& t : terms) acc[{std::min(t.i, t.j), std::max(t.i, t.j)}] += t.coef;
  std::vector<GammaConeTerm> out;
  for (const auto& [key, coef] : acc) {
    if (coef != 0) out.push_back({coef, key.first, key.second});
  }
  return out;
}

}  // namespace

std::vector<GammaConeTerm> phi_gamma_cone_witness(int i, int j, FormalDegree d, int gamma,
                                                  int k) {
  const int n = d.value();
  if (i < 0 || j < 0 || i > n || j > n || i + j < gamma) {
    throw Error(ErrorCode::kPreconditionViolated,
                "generator (" + std::to_string(i) + "," + std::to_string(j) +
                    ") is not in the cone for gamma " + std::to_string(gamma));
  }
  if (i > j) std::swap(i, j);
  if (k < 0) return {};
  if (k == 0) return {{1, i, j}};
  if (i == 0) {
    // Coordinates of phi_k((x+1)^d) and phi_k(x^j (x+1)^{d-j}) have equal
    // integer totals; pairing unit masses one to one gives generators whose
    // second index is at least j >= gamma.
    const auto a = integral_xx1_coordinates(
        phi_k(Polynomial::linear_power(1, 1, n), k), d);
    const auto b = integral_xx1_coordinates(
        phi_k(Polynomial::monomial(1, j) * Polynomial::linear_power(1, 1, n - j), k), d);
    std::vector<GammaConeTerm> out;
    std::size_t ia = 0, ib = 0;
    Rational ra = a.empty() ? Rational(0) : a[0];
    Rational rb = b.empty() ? Rational(0) : b[0];
    while (true) {
      while (ia < a.size() && ra == 0) {
        if (++ia < a.size()) ra = a[ia];
      }
      while (ib < b.size() && rb == 0) {
        if (++ib < b.size()) rb = b[ib];
      }
      if (ia == a.size() || ib == b.size()) break;
      const Rational t = std::min(ra, rb);
      out.push_back({t, static_cast<int>(ia), static_cast<int>(ib)});
      ra -= t;
      rb -= t;
    }
    if (ia != a.size() || ib != b.size()) {
      throw Error(ErrorCode::kInternalError, "phi_k coordinate totals differ");
    }
    return merge_terms(out);
  }
  // g = x h with h a generator for (d-1, gamma-2); use
  // phi_k(x h) = (k+1) x phi_k(h) + x phi_{k-1}(h).
  const FormalDegree d1(n - 1);
  std::vector<GammaConeTerm> out;
  for (const auto& t : phi_gamma_cone_witness(i - 1, j - 1, d1, gamma - 2, k)) {
    out.push_back({t.coef * (k + 1), t.i + 1, t.j + 1});
  }
  for (const auto& t : phi_gamma_cone_witness(i - 1, j - 1, d1, gamma - 2, k - 1)) {
    out.push_back({t.coef, t.i + 1, t.j + 1});
  }
  return merge_terms(out);
}

Polynomial gamma_cone_value(const std::vector<GammaConeTerm>& terms, FormalDegree d) {
  Polynomial out;
  for (const auto& t : terms) out += gamma_cone_generator(t.i, t.j, d) * t.coef;
  return out;
}

bool gamma_cone_terms_valid(const std::vector<GammaConeTerm>& terms, FormalDegree d,
                            int gamma) {
  return std::all_of(terms.begin(), terms.end(), [&](const GammaConeTerm& t) {
    return t.coef >= 0 && t.i + t.j >= gamma && t.i >= 0 && t.j >= 0 &&
           t.i <= d.value() && t.j <= d.value();
  });
}

}  // namespace symdec
