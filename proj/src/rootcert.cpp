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

#include "symdec/rootcert.hpp"

#include <algorithm>
#include <utility>

namespace symdec {

int RootIsolation::total_multiplicity() const {
  int total = 0;
  for (const auto& iv : intervals) total += iv.multiplicity;
  return total;
}

std::string_view interlace_reason_name(InterlaceReason r) {
  switch (r) {
    case InterlaceReason::kZeroConvention: return "ZeroConvention";
    case InterlaceReason::kInterleaved: return "Interleaved";
    case InterlaceReason::kNotRealRooted: return "NotRealRooted";
    case InterlaceReason::kNotInterleaved: return "NotInterleaved";
    case InterlaceReason::kSignMismatch: return "SignMismatch";
  }
  return "Unknown";
}

std::vector<Polynomial> sturm_sequence(const Polynomial& p) {
  std::vector<Polynomial> seq;
  if (p.is_zero()) return seq;
  // Positive rescaling keeps the sign pattern and tames coefficient growth.
  auto scaled = [](const Polynomial& f) { return f * (1 / abs(f.leading())); };
  seq.push_back(scaled(p));
  Polynomial d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(scaled(d));
  while (true) {
    Polynomial r = divmod(seq[seq.size() - 2], seq.back()).second;
    if (r.is_zero()) break;
    seq.push_back(scaled(-r));
  }
  return seq;
}

namespace {

int variations(const std::vector<int>& signs) {
  int count = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int variations_at(const std::vector<Polynomial>& seq, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& f : seq) signs.push_back(f.sign_at(x));
  return variations(signs);
}

int variations_at_infinity(const std::vector<Polynomial>& seq, bool positive) {
  std::vector<int> signs;
  signs.reserve(seq.size());
  for (const auto& f : seq) {
    int s = sgn(f.leading());
    if (!positive && f.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

Rational cauchy_bound(const Polynomial& p) {
  Rational m = 0;
  const Rational& lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) {
    Rational r = abs(p.coeffs()[k] / lead);
    if (r > m) m = r;
  }
  return m + 1;
}

// Distinct roots of a squarefree polynomial, as open isolating intervals.
std::vector<std::pair<Rational, Rational>> isolate_squarefree(const Polynomial& s) {
  std::vector<std::pair<Rational, Rational>> out;
  if (s.degree() <= 0) return out;
  const auto seq = sturm_sequence(s);
  const Rational bound = cauchy_bound(s);
  struct Frame {
    Rational lo, hi;
    int vlo, vhi;
  };
  std::vector<Frame> stack;
  stack.push_back({-bound, bound, variations_at(seq, -bound), variations_at(seq, bound)});
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    const int count = f.vlo - f.vhi;
    if (count == 0) continue;
    if (count == 1) {
      out.emplace_back(f.lo, f.hi);
      continue;
    }
    // Split at the midpoint, nudged off any root of s.
    Rational mid = (f.lo + f.hi) / 2;
    Rational step = (f.hi - f.lo) / 8;
    while (s.sign_at(mid) == 0) {
      mid += step;
      step /= 2;
    }
    const int vmid = variations_at(seq, mid);
    stack.push_back({mid, f.hi, vmid, f.vhi});
    stack.push_back({f.lo, mid, f.vlo, vmid});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

bool has_root_in(const Polynomial& squarefree_factor, const Rational& lo, const Rational& hi) {
  if (lo == hi) return squarefree_factor.sign_at(lo) == 0;
  return squarefree_factor.sign_at(lo) * squarefree_factor.sign_at(hi) < 0;
}

// Multiplicity of the unique root of `intervals` inside (lo, hi) in the
// polynomial whose Yun factors are given; 0 if it is not a root.
int multiplicity_in(const std::vector<Polynomial>& yun, const Rational& lo, const Rational& hi) {
  for (std::size_t i = 0; i < yun.size(); ++i) {
    if (yun[i].degree() > 0 && has_root_in(yun[i], lo, hi)) return static_cast<int>(i) + 1;
  }
  return 0;
}

// Both p and q real-rooted with positive leading coefficients. Returns 1 if
// p prec q, -1 if the zeros alternate the other way (q prec p), 0 otherwise.
int interleave_orientation(const Polynomial& p, const Polynomial& q) {
  const Polynomial r = squarefree_part(p * q);
  const auto cells = isolate_squarefree(r);
  const auto yun_p = squarefree_decomposition(p);
  const auto yun_q = squarefree_decomposition(q);
  // Root positions in descending order, repeated by multiplicity.
  std::vector<int> beta, alpha;
  for (int j = static_cast<int>(cells.size()) - 1; j >= 0; --j) {
    const auto& [lo, hi] = cells[j];
    const int mp = multiplicity_in(yun_p, lo, hi);
    const int mq = multiplicity_in(yun_q, lo, hi);
    if (mp == 0 && mq == 0) {
      throw Error(ErrorCode::kInternalError, "isolated root belongs to neither polynomial");
    }
    beta.insert(beta.end(), mp, j);
    alpha.insert(alpha.end(), mq, j);
  }
  if (static_cast<int>(beta.size()) != p.degree() ||
      static_cast<int>(alpha.size()) != q.degree()) {
    throw Error(ErrorCode::kInternalError, "root multiplicities do not add up to the degree");
  }
  // alpha_1 >= beta_1 >= alpha_2 >= beta_2 >= ...
  auto pattern = [](const std::vector<int>& lower, const std::vector<int>& upper) {
    const auto nl = lower.size(), nu = upper.size();
    if (nu != nl && nu != nl + 1) return false;
    for (std::size_t i = 0; i < nl; ++i) {
      if (lower[i] > upper[i]) return false;
      if (i + 1 < nu && upper[i + 1] > lower[i]) return false;
    }
    return true;
  };
  if (pattern(beta, alpha)) return 1;
  if (pattern(alpha, beta)) return -1;
  return 0;
}

}  // namespace

int sturm_count(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "sturm_count of zero polynomial");
  if (p.sign_at(lo) == 0 || p.sign_at(hi) == 0) {
    throw Error(ErrorCode::kEndpointIsRoot, "interval endpoint is a root");
  }
  const auto seq = sturm_sequence(p);
  return variations_at(seq, lo) - variations_at(seq, hi);
}

int real_root_count(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "real_root_count of zero polynomial");
  const auto seq = sturm_sequence(p);
  return variations_at_infinity(seq, false) - variations_at_infinity(seq, true);
}

bool is_real_rooted(const Polynomial& p) {
  if (p.degree() <= 0) return true;
  return real_root_count(p) == squarefree_part(p).degree();
}

RootIsolation isolate_roots(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "isolate_roots of zero polynomial");
  if (!is_real_rooted(p)) throw Error(ErrorCode::kNotRealRooted, format_coefficients(p));
  RootIsolation iso;
  const auto yun = squarefree_decomposition(p);
  for (const auto& [lo, hi] : isolate_squarefree(squarefree_part(p))) {
    iso.intervals.push_back({lo, hi, multiplicity_in(yun, lo, hi)});
  }
  return iso;
}

namespace {

RootIsolation isolation_or_empty(const Polynomial& p) {
  if (p.degree() <= 0) return {};
  return isolate_roots(p);
}

}  // namespace

InterlacingCertificate interlaces_signed(const Polynomial& p, const Polynomial& q) {
  InterlacingCertificate cert;
  const bool p_rr = is_real_rooted(p);
  const bool q_rr = is_real_rooted(q);
  if (!p_rr || !q_rr) {
    cert.holds = false;
    cert.reason = InterlaceReason::kNotRealRooted;
    if (p_rr) cert.left_roots = isolation_or_empty(p);
    if (q_rr) cert.right_roots = isolation_or_empty(q);
    return cert;
  }
  cert.left_roots = isolation_or_empty(p);
  cert.right_roots = isolation_or_empty(q);
  if (p.is_zero() || q.is_zero()) {
    cert.holds = true;
    cert.reason = InterlaceReason::kZeroConvention;
    return cert;
  }
  const int sp = sgn(p.leading());
  const int sq = sgn(q.leading());
  int orientation;
  if (sp > 0 && sq > 0) orientation = interleave_orientation(p, q);
  else if (sp < 0 && sq < 0) orientation = interleave_orientation(-p, -q);
  else if (sp > 0) orientation = interleave_orientation(-q, p);
  else orientation = interleave_orientation(q, -p);
  cert.holds = orientation == 1;
  cert.reason = orientation == 1    ? InterlaceReason::kInterleaved
                : orientation == -1 ? InterlaceReason::kSignMismatch
                                    : InterlaceReason::kNotInterleaved;
  return cert;
}

InterlacingCertificate interlaces(const Polynomial& p, const Polynomial& q) {
  if (!p.has_nonnegative_coefficients() || !q.has_nonnegative_coefficients()) {
    throw Error(ErrorCode::kUnsupportedSignPattern,
                "interlaces requires nonnegative coefficients; use interlaces_signed");
  }
  return interlaces_signed(p, q);
}

bool certify_chain(const std::vector<Polynomial>& ps) {
  for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
    if (!interlaces(ps[i], ps[i + 1]).holds) return false;
  }
  return true;
}

}  // namespace symdec
