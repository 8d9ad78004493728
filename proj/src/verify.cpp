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

#include "symdec/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>

#include "symdec/complexes.hpp"
#include "symdec/decompose.hpp"
#include "symdec/families.hpp"
#include "symdec/operators.hpp"
#include "symdec/rootcert.hpp"

namespace symdec {

long long Rng::uniform(long long lo, long long hi) {
  const auto span = static_cast<unsigned long long>(hi - lo) + 1;
  return lo + static_cast<long long>(engine_() % span);
}

Rational Rng::rational(long long lo, long long hi, long long max_den) {
  const long long den = uniform(1, max_den);
  const long long num = uniform(lo * den, hi * den);
  Rational r(static_cast<long>(num), static_cast<unsigned long>(den));
  r.canonicalize();
  return r;
}

void SuiteReport::fail(std::string input, std::string property, std::string certificate) {
  ++checks_run;
  failures.push_back({std::move(input), std::move(property), std::move(certificate)});
}

void SuiteReport::expect(bool ok, const std::string& input, const std::string& property,
                         const std::string& certificate) {
  if (ok) {
    pass();
  } else {
    fail(input, property, certificate);
  }
}

void SuiteReport::absorb(const SuiteReport& other) {
  checks_run += other.checks_run;
  passed += other.passed;
  skipped += other.skipped;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

namespace {

std::string poly_str(const Polynomial& p) { return "[" + format_coefficients(p) + "]"; }

std::string roots_str(const RootIsolation& iso) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < iso.intervals.size(); ++i) {
    const auto& r = iso.intervals[i];
    if (i) out << ", ";
    out << "(" << r.lo.get_str() << "," << r.hi.get_str() << ")";
    if (r.multiplicity > 1) out << "^" << r.multiplicity;
  }
  out << "]";
  return out.str();
}

std::string cert_str(const InterlacingCertificate& c) {
  return std::string(interlace_reason_name(c.reason)) + " p_roots=" + roots_str(c.left_roots) +
         " q_roots=" + roots_str(c.right_roots);
}

// Records p < q (signed variant) with the certificate on failure.
void expect_interlace(SuiteReport& rep, const Polynomial& p, const Polynomial& q,
                      const std::string& input, const std::string& property) {
  const auto cert = interlaces_signed(p, q);
  rep.expect(cert.holds, input + " p=" + poly_str(p) + " q=" + poly_str(q), property,
             cert.holds ? "" : cert_str(cert));
}

void expect_real_rooted(SuiteReport& rep, const Polynomial& p, const std::string& input,
                        const std::string& property) {
  const bool ok = p.is_zero() || is_real_rooted(p);
  rep.expect(ok, input + " p=" + poly_str(p), property,
             ok ? "" : "distinct real roots " + std::to_string(real_root_count(p)) +
                           " of " + std::to_string(squarefree_part(p).degree()));
}

// All real roots in [lo, hi] and none elsewhere.
bool roots_within(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) return false;
  if (!is_real_rooted(p)) return false;
  Polynomial s = squarefree_part(p);
  for (const Rational& e : {lo, hi}) {
    if (s.degree() >= 1 && s.sign_at(e) == 0) s = exact_divide(s, Polynomial{-e, 1});
  }
  if (s.degree() <= 0) return true;
  return sturm_count(s, lo, hi) == real_root_count(s);
}

std::string vec_str(const std::vector<Rational>& c) { return format_rational_list(c); }

// Every c in {0..cmax}^{d+1}.
template <typename F>
void for_each_grid(int d, int cmax, F&& f) {
  std::vector<Rational> c(d + 1, 0);
  std::vector<int> digits(d + 1, 0);
  while (true) {
    for (int j = 0; j <= d; ++j) c[j] = digits[j];
    f(c);
    int pos = 0;
    while (pos <= d && ++digits[pos] > cmax) digits[pos++] = 0;
    if (pos > d) break;
  }
}

Polynomial random_poly(Rng& rng, int deg, long long lo, long long hi) {
  std::vector<Rational> c;
  for (int k = 0; k <= deg; ++k) c.emplace_back(static_cast<long>(rng.uniform(lo, hi)));
  return Polynomial(std::move(c));
}

std::vector<Rational> random_nonneg(Rng& rng, int len, long long hi) {
  std::vector<Rational> c;
  for (int k = 0; k < len; ++k) c.emplace_back(static_cast<long>(rng.uniform(0, hi)));
  return c;
}

// Random element of the E_d cone with at least one positive coordinate.
Polynomial random_E_element(Rng& rng, int d) {
  auto c = random_nonneg(rng, d + 1, 4);
  if (std::all_of(c.begin(), c.end(), [](const Rational& v) { return v == 0; })) c[0] = 1;
  return from_cone_coordinates({c, FormalDegree(d), ConeBasis::kE});
}

FormalDegree eulerian_degree(int n, int r) {
  // A_{n,1} has degree n-1 and is symmetric in that window.
  return FormalDegree(r == 1 && n >= 1 ? n - 1 : n);
}

}  // namespace

// ---- decompositions and interlacing ----

std::array<bool, 5> thm_2_7_statements(const Polynomial& p, FormalDegree d) {
  const auto dec = decompose_I(p, d);
  if (!dec.a.has_nonnegative_coefficients() || !dec.b.has_nonnegative_coefficients()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "I-decomposition has a negative coefficient: a=" + poly_str(dec.a) +
                    " b=" + poly_str(dec.b));
  }
  const Polynomial f = f_transform(p, d);
  return {interlaces_signed(dec.b, dec.a).holds, interlaces_signed(dec.a, p).holds,
          interlaces_signed(dec.b, p).holds, interlaces_signed(reverse_I(p, d), p).holds,
          interlaces_signed(reflect_R(f, d), f).holds};
}

SuiteReport verify_thm_2_7(const Polynomial& p, FormalDegree d) {
  SuiteReport rep{"five-statements", "d=" + std::to_string(d.value())};
  const auto s = thm_2_7_statements(p, d);
  const bool agree = std::all_of(s.begin(), s.end(), [&](bool v) { return v == s[0]; });
  std::string cert = "statements=";
  for (bool v : s) cert += v ? 'T' : 'F';
  rep.expect(agree, "d=" + std::to_string(d.value()) + " h=" + poly_str(p),
             "five equivalent statements agree", agree ? "" : cert);
  return rep;
}

bool partial_sum_condition(const std::vector<Rational>& c) {
  Rational low = 0, high = 0;
  const std::size_t n = c.size();
  for (std::size_t j = 0; j < n; ++j) {
    low += c[j];
    high += c[n - 1 - j];
    if (low > high) return false;
  }
  return true;
}

SuiteReport verify_thm_2_14(const std::vector<Rational>& c, FormalDegree d) {
  if (static_cast<int>(c.size()) != d.value() + 1) {
    throw Error(ErrorCode::kLengthMismatch, "c must have length d+1");
  }
  if (std::any_of(c.begin(), c.end(), [](const Rational& v) { return v < 0; }) ||
      !partial_sum_condition(c)) {
    throw Error(ErrorCode::kPreconditionViolated,
                "c=" + vec_str(c) + " violates the partial-sum inequalities");
  }
  SuiteReport rep{"partial-sum", "d=" + std::to_string(d.value())};
  const Polynomial h = h_from_i(from_xx1_basis(c, d), d);
  const auto dec = decompose_I(h, d);
  const std::string input = "d=" + std::to_string(d.value()) + " c=" + vec_str(c);
  expect_real_rooted(rep, dec.a, input, "a real-rooted");
  expect_real_rooted(rep, dec.b, input, "b real-rooted");
  return rep;
}

SuiteReport verify_thm_2_7_grid(int dmax, int cmax) {
  SuiteReport rep{"five-statement-grid", "dmax=" + std::to_string(dmax) + " cmax=" + std::to_string(cmax)};
  for (int d = 0; d <= dmax; ++d) {
    const FormalDegree fd(d);
    for_each_grid(d, cmax, [&](const std::vector<Rational>& c) {
      const Polynomial h = h_from_i(from_xx1_basis(c, fd), fd);
      try {
        rep.absorb(verify_thm_2_7(h, fd));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kPreconditionViolated) throw;
        rep.skip();
      }
    });
  }
  return rep;
}

SuiteReport verify_thm_2_14_grid(int dmax, int cmax) {
  SuiteReport rep{"partial-sum-grid", "dmax=" + std::to_string(dmax) + " cmax=" + std::to_string(cmax)};
  for (int d = 0; d <= dmax; ++d) {
    for_each_grid(d, cmax, [&](const std::vector<Rational>& c) {
      if (!partial_sum_condition(c)) {
        rep.skip();
        return;
      }
      rep.absorb(verify_thm_2_14(c, FormalDegree(d)));
    });
  }
  return rep;
}

SuiteReport verify_section2_lemmas(std::uint64_t seed, int dmax) {
  SuiteReport rep{"s2-cones", "dmax=" + std::to_string(dmax) + " seed=" + std::to_string(seed)};
  Rng rng(seed);

  // Cone bounds and root location.
  for (int d = 1; d <= dmax; ++d) {
    const FormalDegree fd(d);
    const Polynomial lo = E_basis(0, fd), hi = E_basis(d, fd);
    for (int s = 0; s < 6; ++s) {
      const Polynomial p = random_E_element(rng, d);
      const std::string input = "d=" + std::to_string(d);
      rep.expect(roots_within(p, -1, 0), input + " p=" + poly_str(p), "roots in [-1,0]");
      expect_interlace(rep, lo, p, input, "E_0 < p");
      expect_interlace(rep, p, hi, input, "p < E_d");
    }
  }

  // R-decomposition of E(p) for p in the x^k(x+1)^{d-k} cone.
  for (int d = 1; d <= dmax; ++d) {
    const FormalDegree fd(d);
    const Polynomial bound = Polynomial{1, 1} * E_basis(d, fd);
    for (int s = 0; s < 6; ++s) {
      auto c = random_nonneg(rng, d + 1, 4);
      c[rng.uniform(0, d)] += 1;
      const Polynomial q = subdivision_E(from_xx1_basis(c, fd));
      const auto dec = decompose_R(q, fd);
      const std::string input = "d=" + std::to_string(d) + " c=" + vec_str(c);
      expect_real_rooted(rep, dec.a, input, "R-part a real-rooted");
      expect_interlace(rep, dec.a, bound, input, "a < (x+1)E_d");
    }
  }

  // Sums of two E-basis elements with k + l >= d.
  std::vector<std::pair<Polynomial, int>> a_members;
  for (int d = 1; d <= dmax; ++d) {
    const FormalDegree fd(d), fd1(d - 1);
    for (int k = 0; k <= d; ++k) {
      for (int l = std::max(k, d - k); l <= d; ++l) {
        const Polynomial p = E_basis(k, fd) + E_basis(l, fd);
        const std::string input =
            "d=" + std::to_string(d) + " k=" + std::to_string(k) + " l=" + std::to_string(l);
        const Polynomial rp = reflect_R(p, fd);
        expect_interlace(rep, rp, p, input, "R_d(p) < p");
        const Polynomial diff = rp - p;
        expect_interlace(rep, E_basis(0, fd1), diff, input, "E_0^{d-1} < R(p)-p");
        expect_interlace(rep, diff, E_basis(d - 1, fd1), input, "R(p)-p < E_{d-1}^{d-1}");
        a_members.emplace_back(p, d);
      }
    }
  }

  // Filter: p in A_d and p < q in E_d give q in A_d.
  for (const auto& [p, d] : a_members) {
    const FormalDegree fd(d);
    for (int s = 0; s < 2; ++s) {
      const Polynomial q = p * Rational(static_cast<long>(rng.uniform(1, 3))) +
                           random_E_element(rng, d) * Rational(static_cast<long>(rng.uniform(0, 1))) +
                           E_basis(d, fd) * Rational(static_cast<long>(rng.uniform(0, 3)));
      if (!interlaces_signed(p, q).holds) {
        rep.skip();
        continue;
      }
      expect_interlace(rep, reflect_R(q, fd), q, "d=" + std::to_string(d) + " p=" + poly_str(p),
                       "filter: R_d(q) < q");
    }
  }

  // Partial order on monic samples.
  for (int d = 1; d <= std::min(dmax, 4); ++d) {
    std::vector<Polynomial> sample;
    for (int k = 0; k <= d; ++k) sample.push_back(E_basis(k, FormalDegree(d)).monic());
    for (int s = 0; s < 6; ++s) sample.push_back(random_E_element(rng, d).monic());
    const std::size_t n = sample.size();
    std::vector<std::vector<char>> rel(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) rel[i][j] = interlaces_signed(sample[i], sample[j]).holds;
    const std::string input = "d=" + std::to_string(d);
    for (std::size_t i = 0; i < n; ++i) {
      rep.expect(rel[i][i], input + " p=" + poly_str(sample[i]), "reflexive");
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rel[i][j] && rel[j][i]) {
          rep.expect(sample[i] == sample[j], input + " p=" + poly_str(sample[i]) +
                                                 " q=" + poly_str(sample[j]),
                     "antisymmetric");
        }
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (!rel[i][j]) continue;
        for (std::size_t k = 0; k < n; ++k) {
          if (!rel[j][k]) continue;
          rep.expect(rel[i][k], input + " p=" + poly_str(sample[i]) + " q=" + poly_str(sample[j]) +
                                    " r=" + poly_str(sample[k]),
                     "transitive");
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_operator_identities(std::uint64_t seed, int samples) {
  SuiteReport rep{"operators", "samples=" + std::to_string(samples) + " seed=" + std::to_string(seed)};
  Rng rng(seed ^ 0x6f70ULL);
  for (int m = 0; m <= 10; ++m) {
    for (int k = 0; k <= 10; ++k) {
      const Polynomial expected = Polynomial::monomial(
          Rational(factorial(k) * stirling2(m + 1, k + 1)), m);
      rep.expect(T_k(Polynomial::monomial(1, m), k) == expected,
                 "m=" + std::to_string(m) + " k=" + std::to_string(k), "T_k monomial law");
    }
  }
  const Polynomial x = Polynomial::x();
  for (int s = 0; s < samples; ++s) {
    const Polynomial f = random_poly(rng, static_cast<int>(rng.uniform(0, 6)), -5, 5);
    const int k = static_cast<int>(rng.uniform(1, 6));
    const Polynomial lhs = phi_k(x * f, k);
    const Polynomial rhs = x * phi_k(f, k) * Rational(k + 1) + x * phi_k(f, k - 1);
    rep.expect(lhs == rhs, "f=" + poly_str(f) + " k=" + std::to_string(k), "phi recursion");
  }
  for (int s = 0; s < samples; ++s) {
    const int d1 = static_cast<int>(rng.uniform(0, 8));
    const int d2 = static_cast<int>(rng.uniform(0, 8 - d1));
    const Polynomial p = random_poly(rng, d1, -4, 4), q = random_poly(rng, d2, -4, 4);
    const FormalDegree f1(d1), f2(d2), f12(d1 + d2);
    const std::string input = "p=" + poly_str(p) + " q=" + poly_str(q) + " d1=" +
                              std::to_string(d1) + " d2=" + std::to_string(d2);
    rep.expect(reflect_R(subdivision_E(p), f1) == subdivision_E(reflect_R(p, f1)), input, "R E = E R");
    const Polynomial pq = diamond(p, q);
    rep.expect(reflect_R(pq, f12) == diamond(reflect_R(p, f1), reflect_R(q, f2)), input,
               "R(p<>q) = R(p)<>R(q)");
    rep.expect(pq == diamond_by_definition(p, q), input, "diamond closed form");
    rep.expect(subdivision_E_inverse(subdivision_E(p)) == p, input, "E inverse");
  }
  for (int s = 0; s < samples; ++s) {
    const int d = static_cast<int>(rng.uniform(0, 8));
    const auto c = random_nonneg(rng, d + 1, 5);
    const Polynomial i = from_xx1_basis(c, FormalDegree(d));
    rep.expect(subdivision_E(i) == f_transform(h_from_i(i, FormalDegree(d)), FormalDegree(d)),
               "d=" + std::to_string(d) + " c=" + vec_str(c), "E(i) = f(h)");
  }
  return rep;
}

// ---- colored permutation families ----

SuiteReport verify_family_oracles(int n_max, int r_max) {
  SuiteReport rep{"family-oracles", "n_max=" + std::to_string(n_max) + " r_max=" + std::to_string(r_max)};
  for (int r = 1; r <= r_max; ++r) {
    for (int n = 0; n <= n_max; ++n) {
      const std::string input = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      rep.expect(colored_eulerian(n, r) == colored_eulerian_bruteforce(n, r), input,
                 "colored eulerian = enumeration");
      rep.expect(colored_derangement(n, r) == colored_derangement_bruteforce(n, r), input,
                 "colored derangement = enumeration");
    }
  }
  return rep;
}

SuiteReport verify_section3(const Section3Options& opt) {
  SuiteReport rep{"s3", "n_max=" + std::to_string(opt.n_max) + " r_max=" + std::to_string(opt.r_max) +
                            " seed=" + std::to_string(opt.seed)};
  Rng rng(opt.seed ^ 0x7333ULL);
  for (int r = 1; r <= opt.r_max; ++r) {
    for (int n = 0; n <= opt.n_max; ++n) {
      const std::string input = "n=" + std::to_string(n) + " r=" + std::to_string(r);
      const Polynomial a = colored_eulerian(n, r);
      const FormalDegree da = eulerian_degree(n, r);
      expect_interlace(rep, reverse_I(a, da), a, input, "I(A_{n,r}) < A_{n,r}");
      rep.expect(is_alternatingly_increasing(a, da), input + " p=" + poly_str(a),
                 "A_{n,r} alternatingly increasing");
      const Polynomial dn = colored_derangement(n, r);
      const FormalDegree fn(n);
      expect_interlace(rep, reverse_I(dn, fn), dn, input, "I_n(d_{n,r}) < d_{n,r}");
      const auto dec = decompose_I(dn, fn);
      expect_real_rooted(rep, dec.a, input, "d_{n,r} I-part a real-rooted");
      expect_real_rooted(rep, dec.b, input, "d_{n,r} I-part b real-rooted");
      rep.expect(is_alternatingly_increasing(dn, fn), input + " p=" + poly_str(dn),
                 "d_{n,r} alternatingly increasing");
    }
  }
  rep.absorb(verify_family_oracles(std::min(opt.n_max, opt.oracle_n_max), opt.r_max));

  // Nonnegative combinations of partial colored Eulerian polynomials, r >= 2.
  const int rtop = std::max(3, opt.r_max);
  for (int n = 1; n <= std::min(opt.n_max, 6); ++n) {
    const FormalDegree fn(n);
    for (int s = 0; s < 8; ++s) {
      Polynomial p;
      std::string desc;
      for (int r = 2; r <= rtop; ++r) {
        for (int k = 0; k <= n; ++k) {
          const long c = static_cast<long>(rng.uniform(0, 3));
          if (c == 0) continue;
          p += partial_colored_eulerian(n, r, k) * Rational(c);
          desc += " " + std::to_string(c) + "*A(" + std::to_string(r) + "," + std::to_string(k) + ")";
        }
      }
      if (p.is_zero()) {
        rep.skip();
        continue;
      }
      const std::string input = "n=" + std::to_string(n) + desc;
      expect_interlace(rep, reverse_I(p, fn), p, input, "combination: I_n(p) < p");
      rep.expect(is_alternatingly_increasing(p, fn), input, "combination alternatingly increasing");
    }
  }

  // Deranged map on the x^k(x+1)^{n-k} cone.
  for (int n = 1; n <= opt.n_max; ++n) {
    const FormalDegree fn(n);
    const Polynomial an = eulerian(n), dn = derangement(n);
    for (int s = 0; s < 5; ++s) {
      auto c = random_nonneg(rng, n + 1, 3);
      c[rng.uniform(0, n)] += 1;
      const Polynomial dp = deranged_D(from_xx1_basis(c, fn));
      const std::string input = "n=" + std::to_string(n) + " c=" + vec_str(c);
      expect_interlace(rep, an, dp, input, "A_n < D(p)");
      expect_interlace(rep, dp, dn, input, "D(p) < d_n");
      expect_interlace(rep, dp, reverse_I(dp, fn), input, "D(p) < I_n(D(p))");
    }
  }

  // Products of linear factors with roots in [-1, 0].
  for (int n = 1; n <= opt.n_max; ++n) {
    for (int s = 0; s < 4; ++s) {
      std::vector<Rational> theta;
      for (int i = 0; i < n; ++i) theta.push_back(rng.rational(0, 1, 6));
      std::sort(theta.begin(), theta.end());
      std::vector<Rational> theta2 = theta;
      for (auto& t : theta2) t -= rng.rational(0, 1, 4) * t;  // moves roots toward 0
      std::sort(theta2.begin(), theta2.end());
      Polynomial p = Polynomial::constant(1), q = Polynomial::constant(1);
      for (int i = 0; i < n; ++i) {
        p *= Polynomial{theta[i], 1};
        q *= Polynomial{theta2[i], 1};
      }
      const Rational alpha = -rng.rational(0, 1, 5);
      const std::string input = "theta=" + vec_str(theta) + " theta'=" + vec_str(theta2);
      const Polynomial dp = deranged_D(p);
      expect_real_rooted(rep, dp, input, "D(prod(x+theta)) real-rooted");
      expect_interlace(rep, dp, deranged_D(Polynomial{-alpha, 1} * p),
                       input + " alpha=" + alpha.get_str(), "D(p) < D((x-alpha)p)");
      expect_interlace(rep, dp, deranged_D(q), input, "roots ordered: D(p) < D(q)");
    }
  }
  return rep;
}

// ---- zonotopes ----

std::vector<ZonotopeSpec> zonotope_corpus(std::uint64_t seed) {
  std::vector<ZonotopeSpec> corpus;
  for (const char* text :
       {"1", "2", "1,1", "1,2", "1,0;0,1", "2,0;0,2", "1,1;0,1", "1,0,1;0,1,1", "1,2;2,1",
        "1,-1;1,1", "1,0;0,0", "1,2,0;0,1,2", "2,1,0,1;0,1,2,1", "1,0,0;0,1,0;0,0,1",
        "2,0,0;0,1,0;0,0,1", "1,1,0;0,1,1;1,0,1", "1,0,0,1;0,1,0,1;0,0,1,1",
        "1,0,1;0,1,1;0,0,0"}) {
    corpus.push_back(ZonotopeSpec::parse(text));
  }
  Rng rng(seed ^ 0x7a6fULL);
  while (corpus.size() < 30) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const int m = static_cast<int>(rng.uniform(1, 4));
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(m));
    for (auto& row : rows)
      for (auto& v : row) v = rng.uniform(-2, 2);
    ZonotopeSpec z(rows);
    if (z.dim() == 0) continue;
    corpus.push_back(std::move(z));
  }
  return corpus;
}

std::vector<ZonotopeSpec> cs_zonotope_corpus(std::uint64_t seed) {
  std::vector<ZonotopeSpec> corpus;
  for (const char* text : {"2", "2,2", "2,0;0,2", "2,0,2;0,2,2", "2,2;0,2", "2,0,0;0,2,0;0,0,2",
                           "2,0,0,2;0,2,0,2;0,0,2,2"}) {
    corpus.push_back(ZonotopeSpec::parse(text));
  }
  Rng rng(seed ^ 0x6373ULL);
  while (corpus.size() < 14) {
    const int n = static_cast<int>(rng.uniform(1, 3));
    const int m = static_cast<int>(rng.uniform(1, 4));
    std::vector<std::vector<std::int64_t>> rows(n, std::vector<std::int64_t>(m));
    for (auto& row : rows)
      for (auto& v : row) v = 2 * rng.uniform(-1, 1);
    ZonotopeSpec z(rows);
    if (z.dim() == 0) continue;
    corpus.push_back(std::move(z));
  }
  return corpus;
}

std::vector<ValuationSpec> valuation_samples(int d, std::uint64_t seed) {
  std::vector<ValuationSpec> out;
  auto unit = [&](int k) {
    std::vector<Rational> a(d + 1, 0);
    a[k] = 1;
    return ValuationSpec{a};
  };
  out.push_back(unit(0));
  out.push_back(unit(d));
  if (d >= 1) out.push_back(unit(1));
  out.push_back(ValuationSpec{std::vector<Rational>(d + 1, 1)});
  std::vector<Rational> ramp;
  for (int k = 0; k <= d; ++k) ramp.emplace_back(k + 1);
  out.push_back(ValuationSpec{ramp});
  Rng rng(seed ^ (0x7661ULL + static_cast<std::uint64_t>(d)));
  for (int s = 0; s < 2; ++s) {
    auto a = random_nonneg(rng, d + 1, 3);
    a[rng.uniform(0, d)] += 1;
    out.push_back(ValuationSpec{a});
  }
  return out;
}

SuiteReport verify_zonotopes(std::uint64_t seed) {
  SuiteReport rep{"zonotopes", "seed=" + std::to_string(seed)};
  for (const auto& z : zonotope_corpus(seed)) {
    const int d = z.dim();
    const FormalDegree fd(d);
    const std::string input = "Z=" + z.to_string();
    const Polynomial e = ehrhart(z);
    rep.expect(e == ehrhart_bruteforce(z, d + 1), input + " i=" + poly_str(e),
               "ehrhart = enumeration");
    // Negating a generator translates the zonotope by a lattice vector.
    auto rows = z.rows();
    for (auto& row : rows) row[0] = -row[0];
    const ZonotopeSpec moved(rows);
    rep.expect(ehrhart(moved) == e && lattice_point_count(moved, 1) == lattice_point_count(z, 1),
               input, "lattice translation invariance");
    const Integer interior = interior_point_count(z);
    try {
      const auto lh = lawrence_hstar(z);
      bool integral = true;
      for (const auto& v : lh) integral = integral && v.get_den() == 1 && v >= 0;
      rep.expect(integral && Rational(interior) == lh.back(),
                 input + " lawrence=" + vec_str(lh) + " interior=" + interior.get_str(),
                 "lawrence h* nonnegative with top entry = interior count");
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kNegativeCoefficient) throw;
      rep.fail(input, "lawrence h* nonnegative", err.what());
    }
    if (interior == 0) {
      rep.skip();  // alternatingly increasing h*
      for (std::size_t v = 0; v < valuation_samples(d, seed).size(); ++v) rep.skip();
      continue;
    }
    const Polynomial h = hstar(z);
    rep.expect(is_alternatingly_increasing(h, fd), input + " h*=" + poly_str(h),
               "h* alternatingly increasing");
    for (const auto& v : valuation_samples(d, seed)) {
      const Polynomial hv = hstar(z, v);
      const auto dec = decompose_I(hv, fd);
      const std::string vin = input + " alpha=" + vec_str(v.alpha);
      expect_real_rooted(rep, dec.a, vin, "valuation h: a real-rooted");
      expect_real_rooted(rep, dec.b, vin, "valuation h: b real-rooted");
    }
  }
  for (const auto& z : cs_zonotope_corpus(seed)) {
    const int d = z.dim();
    const FormalDegree fd(d);
    const std::string input = "Z=" + z.to_string();
    try {
      const auto c = decompose_cs(z);
      rep.pass();
      (void)c;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::kNotCentrallySymmetricForm) throw;
      rep.fail(input, "centrally symmetric coordinates nonnegative", err.what());
    }
    for (const auto& v : valuation_samples(d, seed)) {
      const Polynomial hv = hstar(z, v);
      const std::string vin = input + " alpha=" + vec_str(v.alpha);
      expect_interlace(rep, reverse_I(hv, fd), hv, vin, "CS: I_d(h) < h");
      rep.expect(is_alternatingly_increasing(hv, fd), vin + " h=" + poly_str(hv),
                 "CS: alternatingly increasing");
    }
  }
  return rep;
}

SuiteReport verify_halfopen_cubes(int dmax) {
  SuiteReport rep{"halfopen-cubes", "dmax=" + std::to_string(dmax)};
  for (int d = 0; d <= dmax; ++d) {
    for (int k = 0; k <= d; ++k) {
      const Polynomial h = halfopen_cube_hstar(k, d);
      rep.expect(h == typeB_bruteforce(k + 1, d + 1),
                 "k=" + std::to_string(k) + " d=" + std::to_string(d) + " h=" + poly_str(h),
                 "half-open cube h* = signed permutation descents");
    }
  }
  // The full cube [-1,1]^d as a zonotope.
  for (int d = 1; d <= std::min(dmax, 3); ++d) {
    std::vector<std::vector<std::int64_t>> rows(d, std::vector<std::int64_t>(d, 0));
    for (int i = 0; i < d; ++i) rows[i][i] = 2;
    const ZonotopeSpec cube(rows);
    rep.expect(hstar(cube) == halfopen_cube_hstar(0, d), "d=" + std::to_string(d),
               "closed cube h* from the zonotope pipeline");
  }
  return rep;
}

SuiteReport verify_cone_closure(int dmax, int mmax) {
  SuiteReport rep{"cone-closure", "dmax=" + std::to_string(dmax) + " mmax=" + std::to_string(mmax)};
  for (int d = 0; d <= dmax; ++d) {
    const FormalDegree fd(d);
    for (int i = 0; i <= d; ++i) {
      for (int j = i; j <= d; ++j) {
        const Polynomial g = gamma_cone_generator(i, j, fd);
        for (int k = 0; k <= d; ++k) {
          const auto terms = phi_gamma_cone_witness(i, j, fd, i + j, k);
          rep.expect(gamma_cone_terms_valid(terms, fd, i + j) &&
                         gamma_cone_value(terms, fd) == phi_k(g, k),
                     "d=" + std::to_string(d) + " i=" + std::to_string(i) + " j=" +
                         std::to_string(j) + " k=" + std::to_string(k),
                     "phi_k(g) in B_{d,i+j}");
        }
      }
    }
    for (int m = 0; m <= mmax; ++m) {
      for (int j = 0; j <= d; ++j) {
        const Polynomial g = Polynomial::linear_power(0, 1, j) * Polynomial::linear_power(1, m, d - j);
        for (int k = 0; k <= d; ++k) {
          const Polynomial img = phi_k(g, k);
          const auto coords = m == 0 ? std::optional<ConeCoefficients>{}
                                     : cone_membership(img, fd, ConeBasis::kBm, m);
          bool ok;
          if (m == 0) {
            ok = img.has_nonnegative_coefficients() && img.degree() <= d;
          } else {
            ok = coords.has_value();
          }
          rep.expect(ok,
                     "d=" + std::to_string(d) + " m=" + std::to_string(m) + " j=" +
                         std::to_string(j) + " k=" + std::to_string(k) + " img=" + poly_str(img),
                     "phi_k(g) in B_{d,m}");
        }
      }
    }
  }
  return rep;
}

SuiteReport verify_section4(std::uint64_t seed) {
  SuiteReport rep{"s4", "seed=" + std::to_string(seed)};
  rep.absorb(verify_zonotopes(seed));
  rep.absorb(verify_halfopen_cubes(5));
  rep.absorb(verify_cone_closure(6, 3));
  rep.absorb(verify_operator_identities(seed));
  return rep;
}

// ---- simplicial complexes ----

namespace {

// Real-rooted I-decomposition of h(sd) and the alternating chain.
void check_sd(SuiteReport& rep, const HVector& hv, const std::string& input) {
  const Polynomial s = sd_h(hv);
  const auto dec = decompose_I(s, hv.d);
  expect_real_rooted(rep, dec.a, input, "sd: a real-rooted");
  expect_real_rooted(rep, dec.b, input, "sd: b real-rooted");
  rep.expect(is_alternatingly_increasing(s, hv.d), input + " h(sd)=" + poly_str(s),
             "sd: alternatingly increasing");
}

}  // namespace

SuiteReport verify_hvector_grid(int dmax, int hmax) {
  SuiteReport rep{"hvector-grid", "dmax=" + std::to_string(dmax) + " hmax=" + std::to_string(hmax)};
  for (int d = 0; d <= dmax; ++d) {
    const FormalDegree fd(d);
    for_each_grid(d, hmax, [&](const std::vector<Rational>& h) {
      const HVector hv{h, fd};
      const std::string input = "d=" + std::to_string(d) + " h=" + vec_str(h);
      if (std::any_of(h.begin(), h.end(), [](const Rational& v) { return v != 0; })) {
        expect_real_rooted(rep, sd_h(hv), input, "sd real-rooted");
      }
      if (!level_2cm_check(hv)) {
        rep.skip(), rep.skip(), rep.skip();
        return;
      }
      check_sd(rep, hv, input);
    });
  }
  return rep;
}

SuiteReport verify_matroid_corpus() {
  SuiteReport rep{"matroids", "uniform n<=7, graphic v<=5"};
  std::map<std::string, SuiteReport> cache;
  auto run = [&](const Matroid& m, const std::string& input) {
    const HVector hv = matroid_hvector(m);
    const bool coloop_free = is_coloop_free(m);
    rep.expect(coloop_free == (hv.h.back() > 0), input + " h=" + vec_str(hv.h),
               "coloop-free iff h_d > 0");
    if (!coloop_free) {
      rep.skip(), rep.skip(), rep.skip(), rep.skip();
      return;
    }
    rep.expect(level_2cm_check(hv), input + " h=" + vec_str(hv.h), "partial-sum inequalities");
    const std::string key = std::to_string(hv.d.value()) + ":" + vec_str(hv.h);
    auto it = cache.find(key);
    if (it == cache.end()) {
      SuiteReport sub;
      check_sd(sub, hv, input + " h=" + vec_str(hv.h));
      it = cache.emplace(key, std::move(sub)).first;
    }
    rep.absorb(it->second);
  };
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k)
      run(Matroid::uniform(k, n), "U(" + std::to_string(k) + "," + std::to_string(n) + ")");
  for (int v = 1; v <= 5; ++v) {
    std::vector<std::pair<int, int>> all;
    for (int a = 1; a <= v; ++a)
      for (int b = a + 1; b <= v; ++b) all.emplace_back(a, b);
    for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<std::pair<int, int>> edges;
      std::string desc;
      for (std::size_t e = 0; e < all.size(); ++e) {
        if (!((mask >> e) & 1u)) continue;
        edges.push_back(all[e]);
        desc += (desc.empty() ? "" : ";") + std::to_string(all[e].first) + "," +
                std::to_string(all[e].second);
      }
      run(Matroid::graphic(v, edges), "graph v=" + std::to_string(v) + " E=" + desc);
    }
  }
  return rep;
}

SuiteReport verify_sd_oracle(int vertices) {
  SuiteReport rep{"sd-oracle", "vertices=" + std::to_string(vertices)};
  const unsigned nsub = (1u << vertices) - 1;  // nonempty subsets, mask s+1
  for (unsigned long fam = 1; fam < (1ul << nsub); ++fam) {
    std::vector<unsigned> sets;
    for (unsigned s = 0; s < nsub; ++s)
      if ((fam >> s) & 1ul) sets.push_back(s + 1);
    bool antichain = true;
    for (unsigned a : sets)
      for (unsigned b : sets)
        if (a != b && (a & b) == a) antichain = false;
    if (!antichain) continue;
    SimplicialComplex sc;
    for (unsigned s : sets) {
      std::vector<int> facet;
      for (int v = 0; v < vertices; ++v)
        if ((s >> v) & 1u) facet.push_back(v + 1);
      sc.facets.push_back(std::move(facet));
    }
    const HVector hv = complex_hvector(sc);
    rep.expect(sd_h(hv) == sd_oracle(sc), "facets mask=" + std::to_string(fam),
               "sd h-vector = flag count");
  }
  return rep;
}

SuiteReport verify_section5(int dmax, std::uint64_t seed) {
  SuiteReport rep{"s5", "dmax=" + std::to_string(dmax) + " seed=" + std::to_string(seed)};
  rep.absorb(verify_hvector_grid(dmax, 3));
  rep.absorb(verify_matroid_corpus());
  rep.absorb(verify_sd_oracle(4));
  return rep;
}

std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt) {
  std::vector<std::string> names;
  if (name == "all") {
    names = {"s2", "s3", "s4", "s5"};
  } else if (name == "s2" || name == "s3" || name == "s4" || name == "s5") {
    names = {name};
  } else {
    throw Error(ErrorCode::kOutOfRange, "unknown suite '" + name + "'");
  }
  auto run_one = [opt](const std::string& n) {
    SuiteReport rep;
    if (n == "s2") {
      rep = SuiteReport{"s2", "seed=" + std::to_string(opt.seed)};
      rep.absorb(verify_thm_2_7_grid(4, 2));
      rep.absorb(verify_thm_2_14_grid(5, 2));
      rep.absorb(verify_section2_lemmas(opt.seed));
    } else if (n == "s3") {
      Section3Options s3;
      s3.n_max = opt.nmax;
      s3.seed = opt.seed;
      rep = verify_section3(s3);
    } else if (n == "s4") {
      rep = verify_section4(opt.seed);
    } else {
      rep = verify_section5(5, opt.seed);
    }
    return rep;
  };
  std::vector<SuiteReport> out;
  if (opt.jobs > 1 && names.size() > 1) {
    std::vector<std::future<SuiteReport>> futures;
    for (const auto& n : names) futures.push_back(std::async(std::launch::async, run_one, n));
    for (auto& f : futures) out.push_back(f.get());
  } else {
    for (const auto& n : names) out.push_back(run_one(n));
  }
  return out;
}

}  // namespace symdec
