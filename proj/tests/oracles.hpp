#pragma once

// Test-side oracles, independent of the library's elimination and counting
// paths: plain rational Gaussian elimination, direct polynomial products,
// and the worked complexes used throughout.

#include <cstdint>
#include <vector>

#include "coinv/matrix.hpp"
#include "coinv/rational.hpp"
#include "coinv/simplicial_complex.hpp"

namespace oracle {

using coinv::Face;
using coinv::Int;
using coinv::Rat;

inline std::vector<std::vector<Rat>> to_dense(const coinv::ExactMatrix& m) {
  std::vector<std::vector<Rat>> d(m.rows(), std::vector<Rat>(m.cols(), Rat(0)));
  for (const auto& [rc, v] : m.cells()) d[rc.first][rc.second] = v;
  return d;
}

// Textbook fraction elimination over Q.
inline long long naive_rank(std::vector<std::vector<Rat>> m) {
  if (m.empty() || m[0].empty()) return 0;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const Rat f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline long long naive_rank(const coinv::ExactMatrix& m) { return naive_rank(to_dense(m)); }

// Convolution of integer coefficient lists.
inline std::vector<Int> poly_mult(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Coefficients of h(q) * prod_{i=1..d} (1 + q + ... + q^i).
inline std::vector<Int> h_times_qfactorial(const std::vector<long long>& h, int d) {
  std::vector<Int> acc;
  for (long long x : h) acc.emplace_back(static_cast<long>(x));
  for (int i = 1; i <= d; ++i) {
    acc = poly_mult(acc, std::vector<Int>(static_cast<std::size_t>(i) + 1, Int(1)));
  }
  return acc;
}

struct XorShift {
  std::uint64_t s;
  explicit XorShift(std::uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
};

inline coinv::ExactMatrix random_matrix(XorShift& rng, int rows, int cols,
                                        int density_pct, int max_abs) {
  coinv::ExactMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (rng.below(100) < density_pct) {
        const int v = rng.below(2 * max_abs + 1) - max_abs;
        m.set(i, j, Rat(v));
      }
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Worked complexes.

inline coinv::SimplicialComplex triangle_boundary() {
  return coinv::SimplicialComplex::from_facets({{1, 2}, {2, 3}, {1, 3}});
}

// Boundary of the simplex on n vertices: all (n-1)-subsets of {0..n-1}.
inline coinv::SimplicialComplex simplex_boundary(int n) {
  std::vector<Face> facets;
  for (int skip = 0; skip < n; ++skip) {
    Face f;
    for (int v = 0; v < n; ++v) {
      if (v != skip) f.push_back(v);
    }
    facets.push_back(std::move(f));
  }
  return coinv::SimplicialComplex::from_facets(facets);
}

// The 6-vertex projective plane.
inline coinv::SimplicialComplex projective_plane() {
  return coinv::SimplicialComplex::from_facets({{1, 2, 3},
                                                {1, 2, 5},
                                                {2, 4, 5},
                                                {3, 4, 5},
                                                {1, 3, 4},
                                                {1, 4, 6},
                                                {1, 5, 6},
                                                {3, 5, 6},
                                                {2, 3, 6},
                                                {2, 4, 6}});
}

// The 9-vertex pinched torus.
inline coinv::SimplicialComplex pinched_torus() {
  return coinv::SimplicialComplex::from_facets(
      {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5}, {2, 3, 9}, {2, 8, 9},
       {2, 5, 7}, {2, 7, 8}, {4, 5, 7}, {6, 7, 4}, {3, 4, 6}, {3, 6, 9},
       {7, 8, 1}, {6, 7, 1}, {6, 9, 1}, {8, 9, 1}});
}

// The 10-vertex 2-sphere whose 0/1 vertex identification gives the pinched
// torus.
inline coinv::SimplicialComplex ten_vertex_sphere() {
  return coinv::SimplicialComplex::from_facets(
      {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5}, {2, 3, 9}, {2, 8, 9},
       {2, 5, 7}, {2, 7, 8}, {4, 5, 7}, {6, 7, 4}, {3, 4, 6}, {3, 6, 9},
       {7, 8, 0}, {6, 7, 0}, {6, 9, 0}, {8, 9, 0}});
}

inline coinv::SimplicialComplex full_simplex(int n) {
  Face f(n);
  for (int i = 0; i < n; ++i) f[i] = i;
  return coinv::SimplicialComplex::from_facets({f});
}

}  // namespace oracle
