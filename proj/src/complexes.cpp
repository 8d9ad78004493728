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

#include "symdec/complexes.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <string>

#include "symdec/decompose.hpp"
#include "symdec/operators.hpp"

namespace symdec {

namespace {

std::vector<std::vector<int>> parse_sets(std::string_view text) {
  std::vector<std::vector<int>> sets;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(';', start);
    const auto part = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    std::vector<int> set;
    for (const auto& v : parse_rational_list(part)) {
      if (v.get_den() != 1 || !v.get_num().fits_sint_p()) {
        throw Error(ErrorCode::kParseError, "set elements must be integers");
      }
      set.push_back(static_cast<int>(v.get_num().get_si()));
    }
    sets.push_back(std::move(set));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return sets;
}

}  // namespace

Polynomial sd_h(const HVector& hv) {
  return h_from_i(from_xx1_basis(hv.h, hv.d), hv.d);
}

bool level_2cm_check(const HVector& hv) {
  const int d = hv.d.value();
  if (static_cast<int>(hv.h.size()) != d + 1) {
    throw Error(ErrorCode::kLengthMismatch, "h-vector must have length d+1");
  }
  if (hv.h[d] <= 0) return false;
  Rational low = 0, high = 0;
  for (int i = 0; i <= d; ++i) {
    low += hv.h[i];
    high += hv.h[d - i];
    if (low > high) return false;
  }
  return true;
}

SimplicialComplex SimplicialComplex::parse(std::string_view text) {
  return {parse_sets(text)};
}

std::vector<std::vector<int>> SimplicialComplex::faces() const {
  std::set<std::vector<int>> all;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    if (facet.size() > 20) throw Error(ErrorCode::kTooLarge, "facet too large");
    const unsigned n = static_cast<unsigned>(facet.size());
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      std::vector<int> face;
      for (unsigned i = 0; i < n; ++i)
        if ((mask >> i) & 1u) face.push_back(facet[i]);
      all.insert(std::move(face));
      if (all.size() > 100'000) throw Error(ErrorCode::kTooLarge, "too many faces");
    }
  }
  return {all.begin(), all.end()};
}

int SimplicialComplex::d() const {
  int d = 0;
  for (auto facet : facets) {
    std::sort(facet.begin(), facet.end());
    facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
    d = std::max(d, static_cast<int>(facet.size()));
  }
  return d;
}

std::vector<long long> f_vector(const SimplicialComplex& sc) {
  std::vector<long long> f(sc.d() + 1, 0);
  f[0] = 1;
  for (const auto& face : sc.faces()) ++f[face.size()];
  return f;
}

HVector complex_hvector(const SimplicialComplex& sc) {
  const auto f = f_vector(sc);
  const FormalDegree d(sc.d());
  std::vector<Rational> coeffs;
  for (long long v : f) coeffs.emplace_back(static_cast<long>(v));
  return {to_xx1_basis(Polynomial(std::move(coeffs)), d), d};
}

Polynomial sd_oracle(const SimplicialComplex& sc) {
  auto faces = sc.faces();
  if (static_cast<int>(faces.size()) > kSdOracleFaceCap) {
    throw Error(ErrorCode::kTooLarge, "sd_oracle supports at most " +
                                          std::to_string(kSdOracleFaceCap) + " faces");
  }
  std::sort(faces.begin(), faces.end(),
            [](const auto& a, const auto& b) { return a.size() < b.size() || (a.size() == b.size() && a < b); });
  const int d = sc.d();
  const std::size_t nf = faces.size();
  // chains[F][L]: flags of length L ending at face F.
  std::vector<std::vector<Integer>> chains(nf, std::vector<Integer>(d + 1, 0));
  std::vector<Integer> flags(d + 1, 0);
  flags[0] = 1;
  for (std::size_t f = 0; f < nf; ++f) {
    chains[f][1] = 1;
    for (std::size_t g = 0; g < f; ++g) {
      const bool proper = faces[g].size() < faces[f].size() &&
                          std::includes(faces[f].begin(), faces[f].end(),
                                        faces[g].begin(), faces[g].end());
      if (!proper) continue;
      for (int len = 2; len <= d; ++len) chains[f][len] += chains[g][len - 1];
    }
    for (int len = 1; len <= d; ++len) flags[len] += chains[f][len];
  }
  std::vector<Rational> f_sd(flags.begin(), flags.end());
  return Polynomial(to_xx1_basis(Polynomial(std::move(f_sd)), FormalDegree(d)));
}

Matroid::Matroid(int n, std::vector<std::vector<int>> bases) : n_(n), rank_(0) {
  if (n < 0 || n > 31) throw Error(ErrorCode::kInvalidMatroid, "ground set size out of range");
  if (bases.empty()) throw Error(ErrorCode::kInvalidMatroid, "no bases");
  std::set<unsigned> masks;
  for (std::size_t b = 0; b < bases.size(); ++b) {
    unsigned mask = 0;
    for (int e : bases[b]) {
      if (e < 1 || e > n) {
        throw Error(ErrorCode::kInvalidMatroid, "element " + std::to_string(e) + " not in ground set");
      }
      mask |= 1u << (e - 1);
    }
    const int size = std::popcount(mask);
    if (b == 0) rank_ = size;
    if (size != rank_ || size != static_cast<int>(bases[b].size())) {
      throw Error(ErrorCode::kInvalidMatroid, "bases must be equal-size sets");
    }
    masks.insert(mask);
  }
  bases_.assign(masks.begin(), masks.end());
  if (n <= 10) {
    // For B1, B2 and e in B1 \ B2 some f in B2 \ B1 makes B1 - e + f a basis.
    for (unsigned b1 : bases_) {
      for (unsigned b2 : bases_) {
        for (unsigned rest = b1 & ~b2; rest; rest &= rest - 1) {
          const unsigned e = rest & -rest;
          bool found = false;
          for (unsigned cand = b2 & ~b1; cand && !found; cand &= cand - 1) {
            found = masks.count((b1 & ~e) | (cand & -cand)) > 0;
          }
          if (!found) throw Error(ErrorCode::kInvalidMatroid, "basis exchange fails");
        }
      }
    }
  }
}

Matroid Matroid::parse(int n, std::string_view text) { return Matroid(n, parse_sets(text)); }

Matroid Matroid::uniform(int k, int n) {
  if (k < 0 || k > n) throw Error(ErrorCode::kInvalidMatroid, "uniform matroid needs 0 <= k <= n");
  std::vector<std::vector<int>> bases;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> b;
    for (int e = 0; e < n; ++e)
      if ((mask >> e) & 1u) b.push_back(e + 1);
    bases.push_back(std::move(b));
  }
  return Matroid(n, std::move(bases));
}

Matroid Matroid::graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  auto forest_rank = [&](unsigned mask) {
    std::vector<int> parent(vertices + 1);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int rank = 0;
    for (int e = 0; e < n; ++e) {
      if (!((mask >> e) & 1u)) continue;
      const int a = find(edges[e].first), b = find(edges[e].second);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    }
    return rank;
  };
  const unsigned all = n == 0 ? 0u : (1u << n) - 1;
  const int r = forest_rank(all);
  std::vector<std::vector<int>> bases;
  for (unsigned mask = 0; mask <= all; ++mask) {
    if (std::popcount(mask) != r || forest_rank(mask) != r) continue;
    std::vector<int> b;
    for (int e = 0; e < n; ++e)
      if ((mask >> e) & 1u) b.push_back(e + 1);
    bases.push_back(std::move(b));
  }
  return Matroid(n, std::move(bases));
}

HVector matroid_hvector(const Matroid& m) {
  const int n = m.ground_size();
  if (n > kMatroidGroundCap) {
    throw Error(ErrorCode::kTooLarge, "matroid h-vector limited to n <= " +
                                          std::to_string(kMatroidGroundCap));
  }
  const int d = m.rank();
  std::vector<Rational> f(d + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const bool independent = std::any_of(m.basis_masks().begin(), m.basis_masks().end(),
                                         [&](unsigned b) { return (mask & ~b) == 0; });
    if (independent) f[std::popcount(mask)] += 1;
  }
  return {to_xx1_basis(Polynomial(std::move(f)), FormalDegree(d)), FormalDegree(d)};
}

bool is_coloop_free(const Matroid& m) {
  unsigned common = ~0u;
  for (unsigned b : m.basis_masks()) common &= b;
  const unsigned ground = m.ground_size() == 0 ? 0u : (~0u >> (32 - m.ground_size()));
  return (common & ground) == 0;
}

}  // namespace symdec
