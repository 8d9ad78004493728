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

// Property suites over parameter grids. Each check either passes, fails
// (recorded with its input and certificate) or is skipped because the
// hypothesis of the property does not hold for that input.

#ifndef SYMDEC_VERIFY_HPP_
#define SYMDEC_VERIFY_HPP_

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symdec/polynomial.hpp"
#include "symdec/zonotopes.hpp"

namespace symdec {

inline constexpr std::uint64_t kDefaultSeed = 20180529;

// Bounded draws from mt19937_64 with a fixed reduction, so sampled inputs
// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  long long uniform(long long lo, long long hi);  // inclusive
  Rational rational(long long lo, long long hi, long long max_den);

 private:
  std::mt19937_64 engine_;
};

struct Failure {
  std::string input;
  std::string property;
  std::string certificate;
};

struct SuiteReport {
  SuiteReport() = default;
  SuiteReport(std::string suite, std::string parameters)
      : name(std::move(suite)), params(std::move(parameters)) {}

  std::string name;
  std::string params;
  long checks_run = 0;
  long passed = 0;
  long skipped = 0;
  std::vector<Failure> failures;

  bool ok() const { return failures.empty(); }
  void pass() { ++checks_run, ++passed; }
  void skip() { ++checks_run, ++skipped; }
  void fail(std::string input, std::string property, std::string certificate = {});
  // pass() if ok, fail(...) otherwise.
  void expect(bool ok, const std::string& input, const std::string& property,
              const std::string& certificate = {});
  void absorb(const SuiteReport& other);
};

// The five statements b<a, a<p, b<p, I_d(p)<p, R_d(f)<f. Throws
// PreconditionViolated when a or b has a negative coefficient.
std::array<bool, 5> thm_2_7_statements(const Polynomial& p, FormalDegree d);
SuiteReport verify_thm_2_7(const Polynomial& p, FormalDegree d);
// h = h_from_i(sum c_j x^j (x+1)^{d-j}); both I_d-parts real-rooted.
// Throws PreconditionViolated if c is negative or violates the partial-sum
// inequalities.
SuiteReport verify_thm_2_14(const std::vector<Rational>& c, FormalDegree d);
bool partial_sum_condition(const std::vector<Rational>& c);

// c in {0..cmax}^{d+1} for d <= dmax.
SuiteReport verify_thm_2_7_grid(int dmax, int cmax);
SuiteReport verify_thm_2_14_grid(int dmax, int cmax);
// E_d cone bounds, R-decomposition lemmas, the filter property and the
// partial order on monic samples.
SuiteReport verify_section2_lemmas(std::uint64_t seed, int dmax = 8);

// Monomial law for T_k, the phi recursion, R commuting with E and diamond,
// E(i) = f(h_from_i(i)).
SuiteReport verify_operator_identities(std::uint64_t seed, int samples = 100);

struct Section3Options {
  int n_max = 7;
  int r_max = 3;
  int oracle_n_max = 6;  // brute force up to min(n_max, this)
  std::uint64_t seed = kDefaultSeed;
};
SuiteReport verify_section3(const Section3Options& opt);
// Generators against exhaustive enumeration only.
SuiteReport verify_family_oracles(int n_max, int r_max);

// Built-in corpus: lattice zonotopes in dimension <= 3 with entries in
// [-2, 2] and at most 4 generators.
std::vector<ZonotopeSpec> zonotope_corpus(std::uint64_t seed);
// Centrally symmetric zonotopes in doubled-generator form.
std::vector<ZonotopeSpec> cs_zonotope_corpus(std::uint64_t seed);
// At least five nonzero weight vectors for dimension d.
std::vector<ValuationSpec> valuation_samples(int d, std::uint64_t seed);

SuiteReport verify_zonotopes(std::uint64_t seed);
SuiteReport verify_halfopen_cubes(int dmax);
// phi_k closure of the B_{d,gamma} and B_{d,m} cones on generators.
SuiteReport verify_cone_closure(int dmax, int mmax);
SuiteReport verify_section4(std::uint64_t seed);

SuiteReport verify_hvector_grid(int dmax, int hmax);
SuiteReport verify_matroid_corpus();
SuiteReport verify_sd_oracle(int vertices);
SuiteReport verify_section5(int dmax, std::uint64_t seed);

struct SuiteOptions {
  int nmax = 7;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 1;
};
// name in {s2, s3, s4, s5, all}. Throws OutOfRange for anything else.
std::vector<SuiteReport> run_suites(const std::string& name, const SuiteOptions& opt);

}  // namespace symdec

#endif  // SYMDEC_VERIFY_HPP_
