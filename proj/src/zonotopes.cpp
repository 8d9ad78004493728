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

#include "symdec/zonotopes.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>
#include <string>

#include "symdec/operators.hpp"

namespace symdec {

namespace {

using Matrix = std::vector<std::vector<std::int64_t>>;

constexpr int kMaxGenerators = 16;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Determinant of a square integer matrix by exact elimination.
Integer determinant(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det.get_num();
}

std::vector<std::vector<Integer>> select(const Matrix& u, const std::vector<int>& rows,
                                         const std::vector<int>& cols) {
  std::vector<std::vector<Integer>> out(rows.size(), std::vector<Integer>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) out[i][j] = Integer(static_cast<long>(u[rows[i]][cols[j]]));
  return out;
}

// Calls f on every k-subset of 0..n-1 in lexicographic order; stops early
// when f returns false.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
  if (k > n) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// gcd of all maximal minors of the columns `cols`; 0 if dependent.
Integer minor_gcd(const Matrix& u, int nrows, const std::vector<int>& cols) {
  Integer g = 0;
  const int k = static_cast<int>(cols.size());
  for_each_subset(nrows, k, [&](const std::vector<int>& rows) {
    const Integer det = determinant(select(u, rows, cols));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), det.get_mpz_t());
    return true;
  });
  return g;
}

std::vector<int> columns_of_mask(unsigned mask, int m) {
  std::vector<int> cols;
  for (int c = 0; c < m; ++c)
    if ((mask >> c) & 1u) cols.push_back(c);
  return cols;
}

}  // namespace

int integer_rank(const Matrix& rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows.size(), m = rows[0].size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) a[i][j] = Rational(static_cast<long>(rows[i][j]));
  int rank = 0;
  for (std::size_t col = 0; col < m && rank < static_cast<int>(n); ++col) {
    std::size_t piv = rank;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < m; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

ZonotopeSpec::ZonotopeSpec(Matrix rows) : rows_(std::move(rows)) {
  cols_ = rows_.empty() ? 0 : static_cast<int>(rows_[0].size());
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != cols_) {
      throw Error(ErrorCode::kLengthMismatch, "generator matrix rows differ in length");
    }
  }
  if (cols_ > kMaxGenerators) {
    throw Error(ErrorCode::kTooLarge, "at most " + std::to_string(kMaxGenerators) +
                                          " generators are supported");
  }
  dim_ = integer_rank(rows_);
}

ZonotopeSpec ZonotopeSpec::parse(std::string_view text) {
  text = trim(text);
  Matrix rows;
  if (text.empty()) return ZonotopeSpec(rows);
  for (auto row_text : split(text, ';')) {
    std::vector<std::int64_t> row;
    for (auto cell : split(row_text, ',')) {
      cell = trim(cell);
      if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
      std::int64_t v = 0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw Error(ErrorCode::kParseError, "bad matrix entry '" + std::string(cell) + "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return ZonotopeSpec(std::move(rows));
}

ZonotopeSpec ZonotopeSpec::from_generators(const Matrix& gens, int ambient) {
  Matrix rows(ambient, std::vector<std::int64_t>(gens.size()));
  for (std::size_t c = 0; c < gens.size(); ++c) {
    if (static_cast<int>(gens[c].size()) != ambient) {
      throw Error(ErrorCode::kLengthMismatch, "generator has wrong ambient dimension");
    }
    for (int r = 0; r < ambient; ++r) rows[r][c] = gens[c][r];
  }
  return ZonotopeSpec(std::move(rows));
}

std::vector<std::int64_t> ZonotopeSpec::generator(int c) const {
  std::vector<std::int64_t> g(ambient());
  for (int r = 0; r < ambient(); ++r) g[r] = rows_[r][c];
  return g;
}

std::string ZonotopeSpec::to_string() const {
  std::ostringstream out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r > 0) out << ';';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c > 0) out << ',';
      out << rows_[r][c];
    }
  }
  return out.str();
}

Polynomial ehrhart(const ZonotopeSpec& z) {
  const int m = z.generators();
  std::vector<Rational> coeffs(z.dim() + 1);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    const auto cols = columns_of_mask(mask, m);
    if (static_cast<int>(cols.size()) > z.dim()) continue;
    if (cols.empty()) {
      coeffs[0] += 1;
      continue;
    }
    const Integer g = minor_gcd(z.rows(), z.ambient(), cols);
    if (g != 0) coeffs[cols.size()] += Rational(g);
  }
  return Polynomial(std::move(coeffs));
}

namespace {

// A square system picked out of U: columns `cols` (linearly independent,
// |cols| = dim) and rows `rows` with det != 0, together with the adjugate.
struct BasisSystem {
  std::vector<int> cols;
  std::vector<int> others;
  std::vector<int> rows;
  std::int64_t det = 0;
  std::vector<std::vector<std::int64_t>> adj;  // adj * A = det * I
};

std::vector<BasisSystem> basis_systems(const ZonotopeSpec& z) {
  std::vector<BasisSystem> out;
  const int d = z.dim(), m = z.generators(), n = z.ambient();
  if (d == 0) return out;
  for_each_subset(m, d, [&](const std::vector<int>& cols) {
    for_each_subset(n, d, [&](const std::vector<int>& rows) {
      const auto a = select(z.rows(), rows, cols);
      const Integer det = determinant(a);
      if (det == 0) return true;
      BasisSystem sys;
      sys.cols = cols;
      sys.rows = rows;
      sys.det = det.get_si();
      for (int c = 0; c < m; ++c)
        if (std::find(cols.begin(), cols.end(), c) == cols.end()) sys.others.push_back(c);
      // adj[i][j] = (-1)^{i+j} * minor(j, i).
      sys.adj.assign(d, std::vector<std::int64_t>(d));
      for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
          std::vector<std::vector<Integer>> minor;
          for (int r = 0; r < d; ++r) {
            if (r == j) continue;
            std::vector<Integer> row;
            for (int c = 0; c < d; ++c)
              if (c != i) row.push_back(a[r][c]);
            minor.push_back(std::move(row));
          }
          const std::int64_t cof = d == 1 ? 1 : determinant(minor).get_si();
          sys.adj[i][j] = (i + j) % 2 == 0 ? cof : -cof;
        }
      }
      out.push_back(std::move(sys));
      return false;
    });
    return true;
  });
  return out;
}

// Is p = sum t_i u_i with 0 <= t_i <= m solvable? The solution polytope, if
// nonempty, has a vertex; at a vertex the coordinates outside some column
// basis sit at a bound 0 or m.
bool in_dilate(const ZonotopeSpec& z, const std::vector<BasisSystem>& systems,
               const std::vector<std::int64_t>& p, std::int64_t m) {
  const int n = z.ambient(), d = z.dim();
  if (d == 0) return std::all_of(p.begin(), p.end(), [](std::int64_t v) { return v == 0; });
  std::vector<std::int64_t> rhs(n), num(d);
  for (const auto& sys : systems) {
    const int k = static_cast<int>(sys.others.size());
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
      rhs = p;
      for (int o = 0; o < k; ++o) {
        if (!((mask >> o) & 1u)) continue;
        for (int r = 0; r < n; ++r) rhs[r] -= m * z.entry(r, sys.others[o]);
      }
      bool ok = true;
      for (int i = 0; i < d && ok; ++i) {
        std::int64_t s = 0;
        for (int j = 0; j < d; ++j) s += sys.adj[i][j] * rhs[sys.rows[j]];
        // t_i = s / det must lie in [0, m].
        num[i] = s;
        if (sys.det > 0) ok = s >= 0 && s <= m * sys.det;
        else ok = s <= 0 && s >= m * sys.det;
      }
      if (!ok) continue;
      for (int r = 0; r < n && ok; ++r) {
        std::int64_t s = 0;
        for (int i = 0; i < d; ++i) s += z.entry(r, sys.cols[i]) * num[i];
        ok = s == rhs[r] * sys.det;
      }
      if (ok) return true;
    }
  }
  return false;
}

long long count_with(const ZonotopeSpec& z, const std::vector<BasisSystem>& systems, int m) {
  const int n = z.ambient();
  std::vector<std::int64_t> lo(n), hi(n);
  long long box = 1;
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < z.generators(); ++c) {
      const std::int64_t v = m * z.entry(r, c);
      (v < 0 ? lo[r] : hi[r]) += v;
    }
    box *= hi[r] - lo[r] + 1;
    if (box > kBruteforceBoxCap) {
      throw Error(ErrorCode::kTooLarge, "enumeration box exceeds " +
                                            std::to_string(kBruteforceBoxCap) + " points");
    }
  }
  long long count = 0;
  std::vector<std::int64_t> p = lo;
  while (true) {
    if (in_dilate(z, systems, p, m)) ++count;
    int r = 0;
    while (r < n && p[r] == hi[r]) {
      p[r] = lo[r];
      ++r;
    }
    if (r == n) break;
    ++p[r];
  }
  return count;
}

}  // namespace

long long lattice_point_count(const ZonotopeSpec& z, int m) {
  if (m < 0) throw Error(ErrorCode::kOutOfRange, "dilation factor must be nonnegative");
  return count_with(z, basis_systems(z), m);
}

Polynomial ehrhart_bruteforce(const ZonotopeSpec& z, int maxdilate) {
  const int d = z.dim();
  if (maxdilate < d) {
    throw Error(ErrorCode::kOutOfRange, "need at least dim+1 dilates to interpolate");
  }
  const auto systems = basis_systems(z);
  std::vector<Rational> counts;
  for (int m = 0; m <= maxdilate; ++m) counts.emplace_back(static_cast<long>(count_with(z, systems, m)));
  // Newton forward differences on the first d+1 values.
  std::vector<Rational> diff(counts.begin(), counts.begin() + d + 1);
  Polynomial result;
  Polynomial binom_x_k = Polynomial::constant(1);
  for (int k = 0; k <= d; ++k) {
    if (k > 0) {
      binom_x_k *= Polynomial({Rational(-(k - 1), k), Rational(1, k)});
      for (int i = d; i >= k; --i) diff[i] -= diff[i - 1];
    }
    result += binom_x_k * diff[k];
  }
  for (int m = 0; m <= maxdilate; ++m) {
    if (result.evaluate(m) != counts[m]) {
      throw Error(ErrorCode::kInternalError,
                  "lattice counts are not polynomial of degree " + std::to_string(d));
    }
  }
  return result;
}

std::vector<Rational> lawrence_hstar(const ZonotopeSpec& z) {
  auto c = to_xx1_basis(ehrhart(z), FormalDegree(z.dim()));
  for (const auto& v : c) {
    if (v < 0 || v.get_den() != 1) {
      throw Error(ErrorCode::kNegativeCoefficient,
                  "Lawrence h* entry " + v.get_str() + " for " + z.to_string());
    }
  }
  return c;
}

Integer interior_point_count(const ZonotopeSpec& z) {
  Rational v = ehrhart(z).evaluate(-1);
  if (z.dim() % 2 == 1) v = -v;
  return v.get_num();
}

Polynomial valuation_ehrhart(const ZonotopeSpec& z, const ValuationSpec& v) {
  const int d = z.dim();
  if (static_cast<int>(v.alpha.size()) != d + 1) {
    throw Error(ErrorCode::kLengthMismatch,
                "valuation needs " + std::to_string(d + 1) + " weights");
  }
  const Polynomial i = ehrhart(z);
  Polynomial out;
  for (int k = 0; k <= d; ++k) {
    if (v.alpha[k] < 0) {
      throw Error(ErrorCode::kNegativeCoefficient, "valuation weights must be nonnegative");
    }
    if (v.alpha[k] != 0) out += T_k(i, k) * v.alpha[k];
  }
  return out;
}

Polynomial hstar(const ZonotopeSpec& z, const std::optional<ValuationSpec>& v) {
  const FormalDegree d(z.dim());
  if (!v) return h_from_i(ehrhart(z), d);
  return h_from_i(valuation_ehrhart(z, *v), d);
}

std::vector<Rational> decompose_cs(const ZonotopeSpec& z) {
  auto coords = cone_coordinates(ehrhart(z), FormalDegree(z.dim()), ConeBasis::kB2).c;
  for (const auto& c : coords) {
    if (c < 0) {
      throw Error(ErrorCode::kNotCentrallySymmetricForm,
                  "negative (2x)^k(2x+1)^(d-k) coordinate for " + z.to_string());
    }
  }
  return coords;
}

bool has_doubled_generators(const ZonotopeSpec& z) {
  for (const auto& row : z.rows())
    for (auto v : row)
      if (v % 2 != 0) return false;
  return true;
}

Polynomial halfopen_cube_hstar(int k, int d) {
  if (d < 0 || k < 0 || k > d) {
    throw Error(ErrorCode::kOutOfRange, "halfopen_cube_hstar: need 0 <= k <= d");
  }
  const Polynomial i = Polynomial::linear_power(0, 2, k) * Polynomial::linear_power(1, 2, d - k);
  return h_from_i(i, FormalDegree(d));
}

}  // namespace symdec
