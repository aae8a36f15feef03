#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coinv/polynomial.hpp"
#include "coinv/simplicial_complex.hpp"

namespace coinv {

// Complex file format: {"labels": [...optional...], "facets": [[int,...],...]}.
// Labels, when present, must be exactly the vertex ids the facets use.
// Emission is canonical: sorted facets of sorted vertices, labels included.
SimplicialComplex read_complex_json(std::istream& in);
SimplicialComplex read_complex_file(const std::string& path);
void write_complex_json(std::ostream& out, const SimplicialComplex& cx);
std::string complex_to_json(const SimplicialComplex& cx);

// Dual polynomials serialize as a JSON list of {"exps": [...], "coeff": "r"}
// with rational-string coefficients; exps[i] belongs to labels()[i].
std::string dual_polynomial_to_json(const DualPolynomial& p);

// Forms file: {"n": <vars>, "forms": [[{"exps": [...], "coeff": "r"}, ...], ...]}.
// Throws when n does not match n_expected.
std::vector<DualPolynomial> read_forms_file(const std::string& path, int n_expected);

}  // namespace coinv
