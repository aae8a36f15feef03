#pragma once

#include <vector>

#include "coinv/field.hpp"
#include "coinv/homology.hpp"
#include "coinv/polynomial.hpp"
#include "coinv/simplicial_complex.hpp"

namespace coinv {

// Per-degree dimensions of the annihilator spaces and the number of dual
// module generators sitting in each degree.
struct StressProfile {
  std::vector<long long> perp_dims;         // degrees 0..K
  std::vector<long long> generator_counts;  // degrees 0..K
};

// The universal parameters e_1, ..., e_{d+1}, restricted to face-supported
// monomials (the discarded monomials act as zero on face-supported duals).
std::vector<DualPolynomial> universal_parameters(const SimplicialComplex& cx);

// The top stress attached to a top-dimensional cycle: for a cycle
// c_1 F_1 + ... + c_s F_s the element sum_i c_i x_{F_i} V(F_i), a dual
// polynomial of degree binom(d+2, 2) annihilated by every Stanley-Reisner
// generator and by e_1, ..., e_{d+1}. Kernel membership of the input chain is
// verified over the given field.
DualPolynomial top_stress(const SimplicialComplex& cx, const Chain& cycle,
                          const Field& f = Field::rationals());

// Basis of {F in the degree-k dual span of face-supported monomials :
// g ∘ F = 0 for every member of extra}. The Stanley-Reisner generators hold
// automatically on that span.
std::vector<DualPolynomial> perp_basis(const SimplicialComplex& cx,
                                       const std::vector<DualPolynomial>& extra,
                                       int k, const Field& f);

// Perp dimensions for degrees 0..K together with dual-module generator counts,
// where the count in degree k is dim perp_k minus the rank of the span of
// x_i ∘ G over G in perp_{k+1}. K < 0 selects the default bound binom(d+2,2).
// Throws std::domain_error when perp_{K+1} is nonzero (not artinian within
// the bound).
StressProfile dual_module_generators(const SimplicialComplex& cx,
                                     const std::vector<DualPolynomial>& extra,
                                     int K, const Field& f);

// Ranks of ell^j ∘ : perp_k -> perp_{k-j} for k = 0..K. By duality these are
// the ranks of multiplication by ell^j on the quotient algebra, so full rank
// everywhere is the dual Lefschetz probe.
std::vector<long long> dual_lefschetz_ranks(const SimplicialComplex& cx,
                                            const std::vector<DualPolynomial>& extra,
                                            const DualPolynomial& ell, int j, int K,
                                            const Field& f);

}  // namespace coinv
