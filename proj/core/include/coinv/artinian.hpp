#pragma once

#include <map>
#include <vector>

#include "coinv/field.hpp"
#include "coinv/matrix.hpp"
#include "coinv/polynomial.hpp"
#include "coinv/simplicial_complex.hpp"

namespace coinv {

// The monomial artinian reduction A = R / (I_Δ + (x_1^{a_1}, ..., x_n^{a_n})).
struct ArtinianSpec {
  SimplicialComplex complex;
  std::vector<int> caps;  // a_1..a_n, each >= 1
  Field field = Field::rationals();

  ArtinianSpec(SimplicialComplex cx, std::vector<int> caps_in, Field f);
  // All caps equal to dim+2, the bound under which nonvanishing top homology
  // forces a Lefschetz failure.
  static ArtinianSpec uniform(SimplicialComplex cx, int cap, Field f);
};

// Monomials of degree t that survive in A: support a face, exponents below
// the caps; listed in MonomialOrder.
std::vector<Exponents> monomial_basis(const ArtinianSpec& spec, int t);

// Hilbert function by direct basis counting, degrees 0..T. T < 0 extends the
// table to the first zero entry (inclusive). With uniform caps the count is
// cross-checked against the bounded-composition formula
// sum_i f_i * a(t, cap-1, i+1); disagreement throws std::logic_error.
std::vector<long long> hilbert_function(const ArtinianSpec& spec, int T = -1);

// Matrix of multiplication by L^j, L = x_1 + ... + x_n, from A_t to A_{t+j}
// in the canonical monomial bases. Entries are multinomial counts reduced
// into the field at assembly.
ExactMatrix lefschetz_matrix(const ArtinianSpec& spec, int t, int j);

struct RankRecord {
  int from_degree = 0;
  int to_degree = 0;
  long long rank = 0;
  long long target = 0;  // min(dim from, dim to)
};

struct GradedRankReport {
  std::vector<long long> dims;                 // 0..T with dims[T] == 0
  std::map<int, std::vector<long long>> ranks; // power j -> ranks of A_t -> A_{t+j}
  bool wlp_holds = true;                       // all j = 1 maps have full rank
  std::vector<RankRecord> failures;            // deficient maps, all powers
};

// Ranks of x L^j for j = 1..max_power across all degrees; the WLP verdict
// comes from j = 1. Checking L alone decides the property for monomial
// ideals, since a monomial algebra has the W/SLP iff x_1 + ... + x_n is a
// Lefschetz element for it.
GradedRankReport lefschetz_verdict(const ArtinianSpec& spec, int max_power = 1);

// Hilbert function of A/(L): entry t is dims[t] minus the rank into degree t.
std::vector<long long> quotient_dims(const GradedRankReport& rep);

struct FailureCertificate {
  bool applies = false;
  int d = 0;
  long long ridge_count = 0;  // f_{d-1}
  long long facet_count = 0;  // f_d
  long long top_betti = 0;    // β̃_d over the chosen field
  int from_degree = 0;        // t - 1
  int to_degree = 0;          // t = binom(d+2, 2), where surjectivity fails
};

// Sufficient criterion for WLP failure of the uniform cap-(d+2) reduction:
// d > 0, f_{d-1} >= f_d and nonvanishing top homology. When it applies, the
// map A_{t-1} -> A_t at t = binom(d+2,2) cannot be surjective (the top
// stress lies in the kernel of its transpose) while dim A_{t-1} >= dim A_t.
FailureCertificate guaranteed_failure(const SimplicialComplex& cx, const Field& f);

}  // namespace coinv
