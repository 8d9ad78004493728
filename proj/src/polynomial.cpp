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

#include "symdec/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace symdec {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kInternalError: return "InternalError";
    case ErrorCode::kEndpointIsRoot: return "EndpointIsRoot";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kNotRealRooted: return "NotRealRooted";
    case ErrorCode::kUnsupportedSignPattern: return "UnsupportedSignPattern";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kNonvanishingTail: return "NonvanishingTail";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kNegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::kNotCentrallySymmetricForm: return "NotCentrallySymmetricForm";
    case ErrorCode::kInvalidMatroid: return "InvalidMatroid";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

FormalDegree::FormalDegree(int d) : d_(d) {
  if (d < 0) {
    throw Error(ErrorCode::kOutOfRange,
                "formal degree must be nonnegative, got " + std::to_string(d));
  }
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial::Polynomial(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) {
  normalize();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, std::size_t k) {
  if (c == 0) return {};
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::x() { return monomial(1, 1); }

Polynomial Polynomial::linear_power(const Rational& a, const Rational& b, unsigned n) {
  // Binomial expansion avoids n full multiplications.
  std::vector<Rational> v(n + 1);
  std::vector<Rational> apows(n + 1), bpows(n + 1);
  apows[0] = 1;
  bpows[0] = 1;
  for (unsigned k = 1; k <= n; ++k) {
    apows[k] = apows[k - 1] * a;
    bpows[k] = bpows[k - 1] * b;
  }
  for (unsigned k = 0; k <= n; ++k) {
    v[k] = Rational(binomial(n, k)) * apows[n - k] * bpows[k];
  }
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  for (auto& c : coeffs_) c.canonicalize();
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (coeffs_.empty()) {
    throw Error(ErrorCode::kZeroPolynomial, "zero polynomial has no leading coefficient");
  }
  return coeffs_.back();
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int Polynomial::sign_at(const Rational& x) const { return sgn(evaluate(x)); }

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> v(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    v[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::scale_argument(const Rational& c) const {
  std::vector<Rational> v(coeffs_);
  Rational pw = 1;
  for (auto& x : v) {
    x *= pw;
    pw *= c;
  }
  return Polynomial(std::move(v));
}

Polynomial Polynomial::compose_affine(const Rational& a, const Rational& b) const {
  const Polynomial lin({a, b});
  Polynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= lin;
    acc += constant(*it);
  }
  return acc;
}

Polynomial Polynomial::shift(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(v));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Rational inv = 1 / leading();
  return *this * inv;
}

bool Polynomial::has_nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c >= 0; });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  coeffs_ = std::move(v);
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

Polynomial operator-(Polynomial a) {
  for (auto& x : a.coeffs_) x = -x;
  return a;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.coeffs_ == b.coeffs_;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "division by zero polynomial");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<Rational> quot(a.degree() - db + 1);
  const Rational inv_lead = 1 / b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] * inv_lead;
    quot[k - db] = q;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= q * b.coeffs()[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) {
    throw Error(ErrorCode::kInternalError,
                "inexact division: remainder " + format_coefficients(r));
  }
  return q;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial u = a, v = b;
  while (!v.is_zero()) {
    Polynomial r = divmod(u, v).second;
    u = std::move(v);
    v = r.monic();
  }
  return u.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) return {};
  if (p.degree() == 0) return Polynomial::constant(1);
  return exact_divide(p, gcd(p, p.derivative())).monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  std::vector<Polynomial> out;
  if (p.degree() <= 0) return out;
  const Polynomial f = p.monic();
  Polynomial a = gcd(f, f.derivative());
  Polynomial b = exact_divide(f, a);
  Polynomial c = exact_divide(f.derivative(), a);
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    out.push_back(g);
    b = exact_divide(b, g);
    c = exact_divide(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

namespace {

void require_degree(const Polynomial& p, FormalDegree d, const char* op) {
  if (p.degree() > d.value()) {
    throw Error(ErrorCode::kDegreeTooSmall,
                std::string(op) + ": degree " + std::to_string(p.degree()) +
                    " exceeds formal degree " + std::to_string(d.value()));
  }
}

}  // namespace

Polynomial reverse_I(const Polynomial& p, FormalDegree d) {
  require_degree(p, d, "reverse_I");
  std::vector<Rational> v(d.value() + 1);
  for (int k = 0; k <= p.degree(); ++k) v[d.value() - k] = p.coeffs()[k];
  return Polynomial(std::move(v));
}

Polynomial reflect_R(const Polynomial& p, FormalDegree d) {
  require_degree(p, d, "reflect_R");
  Polynomial r = p.compose_affine(-1, -1);
  return d.value() % 2 == 0 ? r : -r;
}

std::vector<Rational> to_xx1_basis(const Polynomial& p, FormalDegree d) {
  require_degree(p, d, "to_xx1_basis");
  // c_0 = p(0); then (p - c_0 (x+1)^k) / x carries the rest one degree down.
  std::vector<Rational> c(d.value() + 1);
  Polynomial rest = p;
  for (int k = 0; k <= d.value(); ++k) {
    c[k] = rest.coeff(0);
    rest -= Polynomial::linear_power(1, 1, d.value() - k) * c[k];
    if (rest.coeff(0) != 0) {
      throw Error(ErrorCode::kInternalError, "to_xx1_basis elimination failed");
    }
    std::vector<Rational> shifted(rest.coeffs().begin() + (rest.is_zero() ? 0 : 1),
                                  rest.coeffs().end());
    rest = Polynomial(std::move(shifted));
  }
  if (!rest.is_zero()) {
    throw Error(ErrorCode::kInternalError, "to_xx1_basis left a remainder");
  }
  return c;
}

Polynomial from_xx1_basis(std::span<const Rational> c, FormalDegree d) {
  if (c.size() != static_cast<std::size_t>(d.value()) + 1) {
    throw Error(ErrorCode::kLengthMismatch,
                "expected " + std::to_string(d.value() + 1) + " coordinates, got " +
                    std::to_string(c.size()));
  }
  Polynomial out;
  for (int k = 0; k <= d.value(); ++k) {
    if (c[k] == 0) continue;
    out += (Polynomial::linear_power(1, 1, d.value() - k) * c[k]).shift(k);
  }
  return out;
}

Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

namespace {

constexpr unsigned kStirlingTableSize = 64;

// Built once on first use; read-only afterwards.
const std::vector<std::vector<Integer>>& stirling_table() {
  static const std::vector<std::vector<Integer>> table = [] {
    std::vector<std::vector<Integer>> t(kStirlingTableSize,
                                        std::vector<Integer>(kStirlingTableSize, 0));
    t[0][0] = 1;
    for (unsigned m = 0; m + 1 < kStirlingTableSize; ++m) {
      for (unsigned k = 1; k < kStirlingTableSize; ++k) {
        t[m + 1][k] = Integer(k) * t[m][k] + t[m][k - 1];
      }
    }
    return t;
  }();
  return table;
}

}  // namespace

Integer stirling2(unsigned m, unsigned k) {
  if (k > m) return 0;
  if (m < kStirlingTableSize) return stirling_table()[m][k];
  // Explicit formula S(m,k) = (1/k!) sum_j (-1)^{k-j} C(k,j) j^m.
  Integer acc = 0;
  for (unsigned j = 0; j <= k; ++j) {
    Integer term = binomial(k, j);
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), j, m);
    term *= pw;
    if ((k - j) % 2 == 0) acc += term; else acc -= term;
  }
  return acc / factorial(k);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) {
    return std::isdigit(static_cast<unsigned char>(ch)) != 0;
  });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = trim(text);
  std::string_view body = s;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                         : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::kParseError, "not a rational: '" + std::string(text) + "'");
  }
  Integer n{std::string(num)}, dn{std::string(den)};
  if (dn == 0) throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(n, dn);
  r.canonicalize();
  if (!s.empty() && s.front() == '-') r = -r;
  return r;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) throw Error(ErrorCode::kParseError, "empty coefficient list");
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parse_rational(text.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

Polynomial parse_polynomial(std::string_view text) {
  return Polynomial(parse_rational_list(text));
}

std::string format_rational_list(std::span<const Rational> values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k) out += ',';
    out += values[k].get_str();
  }
  return out;
}

std::string format_coefficients(const Polynomial& p) {
  if (p.is_zero()) return "0";
  return format_rational_list(p.coeffs());
}

std::string to_latex(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (c < 0) out << '-';
    else if (!first) out << '+';
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k == 1) out << 'x';
    else if (k >= 2 && k < 10) out << "x^" << k;
    else if (k >= 10) out << "x^{" << k << '}';
    first = false;
  }
  return out.str();
}

}  // namespace symdec
