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

// Symmetric decompositions p = a + x b and coefficient-level checks.

#ifndef SYMDEC_DECOMPOSE_HPP_
#define SYMDEC_DECOMPOSE_HPP_

#include "symdec/polynomial.hpp"

namespace symdec {

enum class DecompositionKind { kI, kR };

// a + x b equals the decomposed polynomial. For kind I, a is fixed by
// reverse_I(., d) and b by reverse_I(., d-1); for kind R the same holds with
// reflect_R.
struct Decomposition {
  Polynomial a;
  Polynomial b;
  FormalDegree d;
  DecompositionKind kind;
};

Decomposition decompose_I(const Polynomial& p, FormalDegree d);
Decomposition decompose_R(const Polynomial& p, FormalDegree d);

// (1+x)^d h(x/(1+x)) = sum h_k x^k (x+1)^{d-k}.
Polynomial f_transform(const Polynomial& h, FormalDegree d);
Polynomial f_inverse(const Polynomial& f, FormalDegree d);

bool is_symmetric(const Polynomial& p, FormalDegree d);
// 0 <= p_0 <= p_d <= p_1 <= p_{d-1} <= ... (weak inequalities).
bool is_alternatingly_increasing(const Polynomial& p, FormalDegree d);
bool is_unimodal(const Polynomial& p);

// Exact division by (1 - x); throws InternalError on a nonzero remainder.
Polynomial divide_by_one_minus_x(const Polynomial& p);

}  // namespace symdec

#endif  // SYMDEC_DECOMPOSE_HPP_
