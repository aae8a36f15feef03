#pragma once

#include <map>
#include <vector>

#include "coinv/field.hpp"
#include "coinv/matrix.hpp"
#include "coinv/rational.hpp"
#include "coinv/simplicial_complex.hpp"

namespace coinv {

// Formal field combination of i-faces; zero coefficients omitted. Over a
// prime field the coefficients are canonical representatives in [0, p).
struct Chain {
  int degree = 0;
  std::map<Face, Rat> coeffs;
};

// Reduced Betti numbers β̃_{-1..d}; betti[i+1] = β̃_i.
struct BettiProfile {
  Field field = Field::rationals();
  std::vector<long long> betti;
  long long at(int i) const { return betti[i + 1]; }
};

// Matrix of ∂_i : C_i -> C_{i-1}. Rows are (i-1)-faces, columns i-faces, both
// in canonical order; dropping the j-th smallest vertex contributes (-1)^j.
// i = 0 gives the augmentation to the empty face.
ExactMatrix boundary_matrix(const SimplicialComplex& cx, int i);

BettiProfile reduced_betti(const SimplicialComplex& cx, const Field& f);

struct TopCycleSpace {
  std::vector<Chain> basis;
  // Set when the complex is a pseudomanifold without boundary and the top
  // kernel is one-dimensional; basis[0] is then the orientation (first facet
  // coefficient normalized to 1).
  bool orientation_flagged = false;
};

// Kernel of ∂_d as chains on the d-faces.
TopCycleSpace top_cycle_space(const SimplicialComplex& cx, const Field& f);

struct ReisnerFlags {
  bool is_cohen_macaulay = false;
  bool is_homology_sphere = false;
};

// Link-homology criteria: Cohen-Macaulayness asks every link (the empty face
// included) to have vanishing reduced homology below its top degree; the
// homology-sphere flag additionally asks each link to carry exactly one copy
// of the field in its top degree.
ReisnerFlags reisner_check(const SimplicialComplex& cx, const Field& f);

}  // namespace coinv
