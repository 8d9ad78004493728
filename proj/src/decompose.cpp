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

#include "symdec/decompose.hpp"

#include <vector>

namespace symdec {

Polynomial divide_by_one_minus_x(const Polynomial& p) {
  // p = (1 - x) q  <=>  q_k = p_0 + ... + p_k, and p(1) = 0.
  if (p.is_zero()) return {};
  std::vector<Rational> q(p.coeffs().size() - 1);
  Rational running = 0;
  for (std::size_t k = 0; k + 1 < p.coeffs().size(); ++k) {
    running += p.coeffs()[k];
    q[k] = running;
  }
  running += p.coeffs().back();
  if (running != 0) {
    throw Error(ErrorCode::kInternalError,
                "division by (1-x) left remainder " + running.get_str());
  }
  return Polynomial(std::move(q));
}

Decomposition decompose_I(const Polynomial& p, FormalDegree d) {
  const Polynomial rev = reverse_I(p, d);
  const Polynomial x = Polynomial::x();
  Polynomial a = divide_by_one_minus_x(p - x * rev);
  Polynomial b = divide_by_one_minus_x(rev - p);
  return {std::move(a), std::move(b), d, DecompositionKind::kI};
}

Decomposition decompose_R(const Polynomial& p, FormalDegree d) {
  const Polynomial refl = reflect_R(p, d);
  const Polynomial x = Polynomial::x();
  Polynomial a = Polynomial({1, 1}) * p - x * refl;
  Polynomial b = refl - p;
  return {std::move(a), std::move(b), d, DecompositionKind::kR};
}

Polynomial f_transform(const Polynomial& h, FormalDegree d) {
  if (h.degree() > d.value()) {
    throw Error(ErrorCode::kDegreeTooSmall, "f_transform: degree exceeds formal degree");
  }
  std::vector<Rational> c(d.value() + 1);
  for (int k = 0; k <= h.degree(); ++k) c[k] = h.coeffs()[k];
  return from_xx1_basis(c, d);
}

Polynomial f_inverse(const Polynomial& f, FormalDegree d) {
  return Polynomial(to_xx1_basis(f, d));
}

bool is_symmetric(const Polynomial& p, FormalDegree d) {
  return reverse_I(p, d) == p;
}

bool is_alternatingly_increasing(const Polynomial& p, FormalDegree d) {
  if (p.degree() > d.value()) {
    throw Error(ErrorCode::kDegreeTooSmall,
                "is_alternatingly_increasing: degree exceeds formal degree");
  }
  // Interleaved index order 0, d, 1, d-1, 2, ...
  const int n = d.value();
  std::vector<int> order;
  for (int lo = 0, hi = n; lo <= hi; ++lo, --hi) {
    order.push_back(lo);
    if (hi != lo) order.push_back(hi);
  }
  Rational prev = 0;
  for (int idx : order) {
    Rational c = p.coeff(idx);
    if (c < prev) return false;
    prev = c;
  }
  return true;
}

bool is_unimodal(const Polynomial& p) {
  const auto c = p.coeffs();
  std::size_t k = 0;
  while (k + 1 < c.size() && c[k] <= c[k + 1]) ++k;
  while (k + 1 < c.size() && c[k] >= c[k + 1]) ++k;
  return k + 1 >= c.size();
}

}  // namespace symdec
