#pragma once

#include <map>
#include <vector>

#include "coinv/rational.hpp"
#include "coinv/simplicial_complex.hpp"

namespace coinv {

// Exponent vector of a monomial; one entry per variable.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

// Listing order for monomial bases: lower total degree first, then descending
// graded reverse lexicographic with x_0 > x_1 > ... > x_{n-1}. Within a fixed
// degree, a precedes b when the rightmost nonzero entry of a-b is negative.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Homogeneous sparse polynomial with exact rational coefficients. Serves both
// the acting ring R and the dual ring S, which share a monomial basis; the
// role is determined by use. Terms of mixed degrees are rejected.
class DualPolynomial {
 public:
  explicit DualPolynomial(int n_vars);

  int n_vars() const { return n_; }
  int degree() const { return degree_; }  // -1 for the zero polynomial
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Exponents, Rat, MonomialOrder>& terms() const { return terms_; }

  void add_term(const Exponents& e, const Rat& c);
  Rat coeff(const Exponents& e) const;

  DualPolynomial& operator+=(const DualPolynomial& o);
  DualPolynomial operator*(const Rat& c) const;
  bool operator==(const DualPolynomial& o) const;

 private:
  int n_;
  int degree_;
  std::map<Exponents, Rat, MonomialOrder> terms_;
};

DualPolynomial multiply(const DualPolynomial& a, const DualPolynomial& b);
DualPolynomial power(const DualPolynomial& a, int j);

// Contraction action of f on F: monomials act by exponent subtraction,
// x^a ∘ y^b = y^{b-a} when b ≥ a componentwise and 0 otherwise, extended
// bilinearly. Throws on a variable-count mismatch; homogeneity of both sides
// is guaranteed by construction.
DualPolynomial contract(const DualPolynomial& f, const DualPolynomial& F);

// Expanded product of pairwise differences prod_{u<v in B} (x_u - x_v) over
// internal vertex ids; |B|! terms whose exponents permute (|B|-1, ..., 1, 0).
DualPolynomial vandermonde(const Face& B, int n_vars);

// Full elementary symmetric polynomial e_k on n variables.
DualPolynomial elementary_symmetric(int n_vars, int k);

// e_k with only the squarefree monomials supported on (k-1)-faces of cx. On
// face-supported dual elements this contracts exactly like e_k, since the
// discarded monomials annihilate them.
DualPolynomial elementary_symmetric_on_faces(const SimplicialComplex& cx, int k);

// All degree-t exponent vectors whose support is a face of cx, each exponent
// below its cap when caps are given; listed in MonomialOrder.
std::vector<Exponents> face_monomials(const SimplicialComplex& cx, int t,
                                      const std::vector<int>* caps = nullptr);

}  // namespace coinv
