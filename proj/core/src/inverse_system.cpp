#include "coinv/inverse_system.hpp"

#include <algorithm>
#include <stdexcept>

#include "coinv/matrix.hpp"

namespace coinv {

namespace {

int default_bound(const SimplicialComplex& cx) {
  const int d = cx.dim();
  return (d + 2) * (d + 1) / 2;  // binom(d+2, 2)
}

int index_of(const std::vector<Exponents>& basis, const Exponents& e) {
  auto it = std::lower_bound(basis.begin(), basis.end(), e, MonomialOrder{});
  if (it == basis.end() || *it != e) return -1;
  return static_cast<int>(it - basis.begin());
}

// Stacked contraction constraints of the extra forms on the face-supported
// monomial span of degree k.
ExactMatrix constraint_matrix(const SimplicialComplex& cx,
                              const std::vector<DualPolynomial>& extra, int k,
                              const std::vector<Exponents>& basis_k) {
  const int n = cx.n_vertices();
  // Row counts per form: the face-supported basis in degree k - deg f.
  std::vector<std::vector<Exponents>> targets;
  int total_rows = 0;
  for (const auto& f : extra) {
    if (f.is_zero() || f.degree() > k) {
      targets.emplace_back();
      continue;
    }
    targets.push_back(face_monomials(cx, k - f.degree()));
    total_rows += static_cast<int>(targets.back().size());
  }
  ExactMatrix m(total_rows, static_cast<int>(basis_k.size()));
  int row0 = 0;
  for (std::size_t fi = 0; fi < extra.size(); ++fi) {
    const auto& tgt = targets[fi];
    if (tgt.empty()) continue;
    const auto& f = extra[fi];
    for (int c = 0; c < static_cast<int>(basis_k.size()); ++c) {
      const Exponents& b = basis_k[c];
      for (const auto& [a, ca] : f.terms()) {
        bool ok = true;
        Exponents e(n);
        for (int i = 0; i < n; ++i) {
          if (b[i] < a[i]) {
            ok = false;
            break;
          }
          e[i] = b[i] - a[i];
        }
        if (!ok) continue;
        const int r = index_of(tgt, e);
        if (r >= 0) m.add(row0 + r, c, ca);
      }
    }
    row0 += static_cast<int>(tgt.size());
  }
  return m;
}

struct PerpLadder {
  std::vector<std::vector<Exponents>> bases;        // degree -> monomial basis
  std::vector<std::vector<std::vector<Rat>>> perp;  // degree -> basis vectors
};

PerpLadder build_ladder(const SimplicialComplex& cx,
                        const std::vector<DualPolynomial>& extra, int top,
                        const Field& f) {
  PerpLadder ladder;
  ladder.bases.resize(top + 1);
  ladder.perp.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    ladder.bases[k] = face_monomials(cx, k);
    const ExactMatrix m = constraint_matrix(cx, extra, k, ladder.bases[k]);
    ladder.perp[k] = kernel_basis(m, f);
  }
  return ladder;
}

void check_extras(const SimplicialComplex& cx, const std::vector<DualPolynomial>& extra) {
  for (const auto& f : extra) {
    if (f.n_vars() != cx.n_vertices()) {
      throw std::invalid_argument("extra form variable count does not match complex");
    }
  }
}

// Images of the perp_{k+1} basis under all variable contractions, as rows
// over the degree-k monomial basis.
ExactMatrix variable_contraction_span(const SimplicialComplex& cx,
                                      const PerpLadder& ladder, int k) {
  const int n = cx.n_vertices();
  const auto& src_basis = ladder.bases[k + 1];
  const auto& dst_basis = ladder.bases[k];
  const auto& gens = ladder.perp[k + 1];
  ExactMatrix m(static_cast<int>(gens.size()) * n, static_cast<int>(dst_basis.size()));
  int row = 0;
  for (const auto& g : gens) {
    for (int i = 0; i < n; ++i, ++row) {
      for (std::size_t c = 0; c < src_basis.size(); ++c) {
        if (g[c] == 0 || src_basis[c][i] == 0) continue;
        Exponents e = src_basis[c];
        --e[i];
        const int dst = index_of(dst_basis, e);
        m.add(row, dst, g[c]);
      }
    }
  }
  return m;
}

}  // namespace

std::vector<DualPolynomial> universal_parameters(const SimplicialComplex& cx) {
  std::vector<DualPolynomial> out;
  for (int k = 1; k <= cx.dim() + 1; ++k) {
    out.push_back(elementary_symmetric_on_faces(cx, k));
  }
  return out;
}

DualPolynomial top_stress(const SimplicialComplex& cx, const Chain& cycle,
                          const Field& f) {
  const int d = cx.dim();
  if (cycle.degree != d) throw std::invalid_argument("chain degree is not the top dimension");
  const auto& dfaces = cx.faces(d);
  std::vector<Rat> vec(dfaces.size(), Rat(0));
  for (const auto& [face, c] : cycle.coeffs) {
    const int idx = cx.face_index(d, face);
    if (idx < 0) throw std::invalid_argument("chain supported on a non-face");
    vec[idx] = c;
    vec[idx].canonicalize();
  }
  const std::vector<Rat> image = boundary_matrix(cx, d).apply(vec);
  for (const Rat& x : image) {
    const bool zero = f.is_rationals() ? (x == 0) : (reduce_mod(x, f.modulus()) == 0);
    if (!zero) throw std::invalid_argument("chain is not a top-dimensional cycle");
  }

  const int n = cx.n_vertices();
  DualPolynomial out(n);
  for (std::size_t j = 0; j < dfaces.size(); ++j) {
    if (vec[j] == 0) continue;
    DualPolynomial block(n);
    Exponents supp(n, 0);
    for (int v : dfaces[j]) supp[v] = 1;
    block.add_term(supp, vec[j]);
    out += multiply(block, vandermonde(dfaces[j], n));
  }
  return out;
}

std::vector<DualPolynomial> perp_basis(const SimplicialComplex& cx,
                                       const std::vector<DualPolynomial>& extra,
                                       int k, const Field& f) {
  if (k < 0) throw std::invalid_argument("negative degree");
  check_extras(cx, extra);
  const auto basis = face_monomials(cx, k);
  const ExactMatrix m = constraint_matrix(cx, extra, k, basis);
  std::vector<DualPolynomial> out;
  for (const auto& vec : kernel_basis(m, f)) {
    DualPolynomial g(cx.n_vertices());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      if (vec[c] != 0) g.add_term(basis[c], vec[c]);
    }
    out.push_back(std::move(g));
  }
  return out;
}

StressProfile dual_module_generators(const SimplicialComplex& cx,
                                     const std::vector<DualPolynomial>& extra,
                                     int K, const Field& f) {
  check_extras(cx, extra);
  if (K < 0) K = default_bound(cx);
  const PerpLadder ladder = build_ladder(cx, extra, K + 1, f);
  if (!ladder.perp[K + 1].empty()) {
    throw std::domain_error("perp space does not vanish beyond the degree bound; "
                            "the ideal is not artinian within it");
  }
  StressProfile prof;
  prof.perp_dims.resize(K + 1);
  prof.generator_counts.resize(K + 1);
  for (int k = 0; k <= K; ++k) {
    prof.perp_dims[k] = static_cast<long long>(ladder.perp[k].size());
    const ExactMatrix span = variable_contraction_span(cx, ladder, k);
    prof.generator_counts[k] = prof.perp_dims[k] - rank(span, f);
  }
  return prof;
}

std::vector<long long> dual_lefschetz_ranks(const SimplicialComplex& cx,
                                            const std::vector<DualPolynomial>& extra,
                                            const DualPolynomial& ell, int j, int K,
                                            const Field& f) {
  check_extras(cx, extra);
  if (j < 1) throw std::invalid_argument("power must be positive");
  if (K < 0) K = default_bound(cx);
  const PerpLadder ladder = build_ladder(cx, extra, K, f);
  const DualPolynomial ell_j = power(ell, j);
  std::vector<long long> ranks(K + 1, 0);
  for (int k = j; k <= K; ++k) {
    const auto& gens = ladder.perp[k];
    if (gens.empty()) continue;
    const auto& src_basis = ladder.bases[k];
    const auto& dst_basis = ladder.bases[k - j];
    ExactMatrix m(static_cast<int>(gens.size()), static_cast<int>(dst_basis.size()));
    for (std::size_t r = 0; r < gens.size(); ++r) {
      DualPolynomial g(cx.n_vertices());
      for (std::size_t c = 0; c < src_basis.size(); ++c) {
        if (gens[r][c] != 0) g.add_term(src_basis[c], gens[r][c]);
      }
      const DualPolynomial img = contract(ell_j, g);
      for (const auto& [e, c] : img.terms()) {
        const int dst = index_of(dst_basis, e);
        if (dst >= 0) m.add(static_cast<int>(r), dst, c);
      }
    }
    ranks[k] = rank(m, f);
  }
  return ranks;
}

}  // namespace coinv
