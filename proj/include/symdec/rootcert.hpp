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

// Exact real-root certification: Sturm sequences, rational isolating
// intervals, and the interlacing relation p < q (written "p prec q").
//
// p prec q means both are real-rooted, their zeros interlace, and the
// Wronskian p'q - pq' is nonpositive on the real line. For positive leading
// coefficients this is the ordered pattern
//
//   ... <= beta_2 <= alpha_2 <= beta_1 <= alpha_1
//
// with beta the zeros of p and alpha the zeros of q (with multiplicity).
// The zero polynomial is real-rooted and 0 prec p, p prec 0 for every
// real-rooted p.

#ifndef SYMDEC_ROOTCERT_HPP_
#define SYMDEC_ROOTCERT_HPP_

#include <string_view>
#include <vector>

#include "symdec/polynomial.hpp"

namespace symdec {

// Open interval (lo, hi) holding exactly one distinct root. lo == hi marks a
// root known exactly. Neither endpoint of an open interval is a root.
struct RootInterval {
  Rational lo;
  Rational hi;
  int multiplicity = 1;
};

struct RootIsolation {
  std::vector<RootInterval> intervals;  // ascending, pairwise disjoint
  int total_multiplicity() const;
};

enum class InterlaceReason {
  kZeroConvention,
  kInterleaved,
  kNotRealRooted,
  kNotInterleaved,
  // The zeros alternate but in the opposite orientation (q prec p).
  kSignMismatch,
};

std::string_view interlace_reason_name(InterlaceReason r);

struct InterlacingCertificate {
  bool holds = false;
  InterlaceReason reason = InterlaceReason::kNotInterleaved;
  RootIsolation left_roots;   // roots of p
  RootIsolation right_roots;  // roots of q
};

std::vector<Polynomial> sturm_sequence(const Polynomial& p);
// Distinct real roots in (lo, hi]. Endpoints must not be roots.
int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi);
// Distinct real roots on the whole line.
int real_root_count(const Polynomial& p);

bool is_real_rooted(const Polynomial& p);

// Throws NotRealRooted if p has a nonreal zero, ZeroPolynomial for p = 0.
RootIsolation isolate_roots(const Polynomial& p);

// Contract restricted to nonnegative coefficients: throws
// UnsupportedSignPattern when either input has a negative coefficient.
InterlacingCertificate interlaces(const Polynomial& p, const Polynomial& q);
// Arbitrary real coefficients. Reduces to positive leading coefficients via
// p prec q <=> (-p) prec (-q) and p prec q <=> (-q) prec p.
InterlacingCertificate interlaces_signed(const Polynomial& p, const Polynomial& q);

// interlaces(ps[i], ps[i+1]) for every consecutive pair.
bool certify_chain(const std::vector<Polynomial>& ps);

}  // namespace symdec

#endif  // SYMDEC_ROOTCERT_HPP_
