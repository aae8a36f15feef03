#pragma once

#include <vector>

namespace coinv {

// A face is a strictly increasing vector of internal vertex ids.
using Face = std::vector<int>;

// Immutable simplicial complex given by its facets. Vertex ids are normalized
// to 0..n-1 internally; labels() maps them back to the ids the caller used.
// Faces are materialized per dimension at construction, in lexicographic
// order, so all downstream modules index against explicit bases.
class SimplicialComplex {
 public:
  // Ingests raw facets: deduplicates, prunes faces contained in other input
  // faces, sorts canonically. The vertex universe is the set of ids that
  // appear. Throws std::invalid_argument on an empty list, an empty face or
  // a negative id.
  static SimplicialComplex from_facets(const std::vector<Face>& raw);

  // Same, but with an explicit (sorted, duplicate-free) universe; it must
  // equal the set of ids used by the facets.
  static SimplicialComplex from_labeled_facets(const std::vector<Face>& raw,
                                               const std::vector<int>& labels);

  int n_vertices() const { return static_cast<int>(labels_.size()); }
  int dim() const { return dim_; }  // -1 for the complex {∅} (links of facets)
  const std::vector<int>& labels() const { return labels_; }
  int label_of(int internal) const { return labels_[internal]; }

  const std::vector<Face>& facets() const { return facets_; }
  std::vector<Face> facets_labeled() const;

  // i ranges over -1..dim; faces(-1) is {∅}.
  const std::vector<Face>& faces(int i) const;
  long long face_count(int i) const;  // f_i, zero outside -1..dim
  bool is_face(const Face& sigma) const;
  // Position of sigma within faces(i), or -1.
  int face_index(int i, const Face& sigma) const;

  // {τ : τ ∪ σ ∈ Δ, τ ∩ σ = ∅} on the same vertex universe. Throws if σ ∉ Δ.
  SimplicialComplex link(const Face& sigma) const;

  // Inclusion-minimal non-faces (the Stanley–Reisner generators). A minimal
  // non-face has every proper subset a face, so its size is at most dim+2.
  std::vector<Face> minimal_nonfaces() const;

  bool operator==(const SimplicialComplex& o) const {
    return labels_ == o.labels_ && facets_ == o.facets_;
  }

 private:
  SimplicialComplex() = default;
  static SimplicialComplex build(const std::vector<Face>& raw,
                                 const std::vector<int>* universe);
  void enumerate_faces();

  std::vector<int> labels_;
  std::vector<Face> facets_;
  std::vector<std::vector<Face>> faces_;  // faces_[i+1] = i-faces
  int dim_ = -1;
};

struct FVector {
  int dim = -1;
  std::vector<long long> f;  // f[i] = f_{i-1}, i = 0..dim+1, so f[0] = 1
  std::vector<long long> h;  // h[0..dim+1]
  std::vector<long long> g;  // g[0..ceil((dim+1)/2)]
};

// Face counts by exhaustive enumeration; h and g by the defining identities.
FVector fhg_vectors(const SimplicialComplex& cx);

struct PseudomanifoldReport {
  bool is_pure = false;
  bool is_strongly_connected = false;
  int max_ridge_degree = 0;
  std::vector<Face> boundary_ridges;  // ridges lying in exactly one facet
  bool is_pseudomanifold = false;
  bool is_without_boundary = false;
  std::vector<int> cone_apexes;  // vertices belonging to every facet
};

PseudomanifoldReport classify_pseudomanifold(const SimplicialComplex& cx);

}  // namespace coinv
