#include "coinv/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace coinv {

namespace {

Face sorted_unique(const Face& f) {
  Face s = f;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

bool contains(const Face& big, const Face& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::build(const std::vector<Face>& raw,
                                           const std::vector<int>* universe) {
  if (raw.empty()) throw std::invalid_argument("facet list is empty");
  std::set<Face> cleaned;
  std::set<int> used;
  for (const Face& f : raw) {
    if (f.empty()) throw std::invalid_argument("empty face in facet list");
    for (int v : f) {
      if (v < 0) throw std::invalid_argument("negative vertex id");
      used.insert(v);
    }
    Face s = sorted_unique(f);
    if (static_cast<int>(s.size()) > 20) {
      throw std::invalid_argument("facet too large for explicit face enumeration");
    }
    cleaned.insert(std::move(s));
  }

  SimplicialComplex cx;
  if (universe) {
    cx.labels_ = *universe;
    if (!std::is_sorted(cx.labels_.begin(), cx.labels_.end()) ||
        std::adjacent_find(cx.labels_.begin(), cx.labels_.end()) != cx.labels_.end()) {
      throw std::invalid_argument("labels must be sorted and duplicate-free");
    }
    std::set<int> lab(cx.labels_.begin(), cx.labels_.end());
    if (lab != used) {
      throw std::invalid_argument("labels do not match the vertex ids used by the facets");
    }
  } else {
    cx.labels_.assign(used.begin(), used.end());
  }
  std::map<int, int> to_internal;
  for (int i = 0; i < static_cast<int>(cx.labels_.size()); ++i) {
    to_internal[cx.labels_[i]] = i;
  }

  std::vector<Face> relabeled;
  relabeled.reserve(cleaned.size());
  for (const Face& f : cleaned) {
    Face g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = to_internal.at(f[i]);
    relabeled.push_back(std::move(g));  // order-preserving relabeling keeps faces sorted
  }
  // Prune faces contained in other input faces.
  for (const Face& f : relabeled) {
    bool maximal = true;
    for (const Face& g : relabeled) {
      if (&f != &g && f.size() < g.size() && contains(g, f)) {
        maximal = false;
        break;
      }
    }
    if (maximal) cx.facets_.push_back(f);
  }
  std::sort(cx.facets_.begin(), cx.facets_.end());
  cx.facets_.erase(std::unique(cx.facets_.begin(), cx.facets_.end()), cx.facets_.end());
  cx.dim_ = 0;
  for (const Face& f : cx.facets_) {
    cx.dim_ = std::max(cx.dim_, static_cast<int>(f.size()) - 1);
  }
  cx.enumerate_faces();
  return cx;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<Face>& raw) {
  return build(raw, nullptr);
}

SimplicialComplex SimplicialComplex::from_labeled_facets(const std::vector<Face>& raw,
                                                         const std::vector<int>& labels) {
  return build(raw, &labels);
}

void SimplicialComplex::enumerate_faces() {
  // faces_[i+1] holds the i-faces, materialized degree by degree.
  std::vector<std::set<Face>> by_dim(dim_ + 2);
  by_dim[0].insert(Face{});
  for (const Face& f : facets_) {
    const std::size_t k = f.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      Face sub;
      for (std::size_t b = 0; b < k; ++b) {
        if (mask & (std::size_t{1} << b)) sub.push_back(f[b]);
      }
      by_dim[sub.size()].insert(std::move(sub));
    }
  }
  faces_.assign(dim_ + 2, {});
  for (int s = 0; s <= dim_ + 1; ++s) {
    faces_[s].assign(by_dim[s].begin(), by_dim[s].end());
  }
}

std::vector<Face> SimplicialComplex::facets_labeled() const {
  std::vector<Face> out;
  out.reserve(facets_.size());
  for (const Face& f : facets_) {
    Face g(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = labels_[f[i]];
    out.push_back(std::move(g));
  }
  return out;
}

const std::vector<Face>& SimplicialComplex::faces(int i) const {
  if (i < -1 || i > dim_) throw std::out_of_range("face dimension out of range");
  return faces_[i + 1];
}

long long SimplicialComplex::face_count(int i) const {
  if (i < -1 || i > dim_) return 0;
  return static_cast<long long>(faces_[i + 1].size());
}

bool SimplicialComplex::is_face(const Face& sigma) const {
  const int i = static_cast<int>(sigma.size()) - 1;
  if (i < -1 || i > dim_) return false;
  const auto& fs = faces_[i + 1];
  return std::binary_search(fs.begin(), fs.end(), sigma);
}

int SimplicialComplex::face_index(int i, const Face& sigma) const {
  if (i < -1 || i > dim_) return -1;
  const auto& fs = faces_[i + 1];
  auto it = std::lower_bound(fs.begin(), fs.end(), sigma);
  if (it == fs.end() || *it != sigma) return -1;
  return static_cast<int>(it - fs.begin());
}

SimplicialComplex SimplicialComplex::link(const Face& sigma) const {
  if (!is_face(sigma)) throw std::invalid_argument("link of a non-face");
  std::vector<Face> lk_facets;
  for (const Face& f : facets_) {
    if (!contains(f, sigma)) continue;
    Face tau;
    std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(),
                        std::back_inserter(tau));
    lk_facets.push_back(std::move(tau));
  }
  // Maximal elements only.
  std::vector<Face> maximal;
  for (const Face& f : lk_facets) {
    bool keep = true;
    for (const Face& g : lk_facets) {
      if (&f != &g && f.size() < g.size() && contains(g, f)) {
        keep = false;
        break;
      }
    }
    if (keep) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end());
  maximal.erase(std::unique(maximal.begin(), maximal.end()), maximal.end());

  SimplicialComplex lk;
  lk.labels_ = labels_;  // same universe
  lk.facets_ = std::move(maximal);
  lk.dim_ = -1;
  for (const Face& f : lk.facets_) {
    lk.dim_ = std::max(lk.dim_, static_cast<int>(f.size()) - 1);
  }
  lk.enumerate_faces();
  return lk;
}

std::vector<Face> SimplicialComplex::minimal_nonfaces() const {
  std::vector<Face> out;
  const int n = n_vertices();
  // Size-1 candidates: vertices of the universe that are not faces.
  for (int v = 0; v < n; ++v) {
    if (!is_face({v})) out.push_back({v});
  }
  // Size-k candidates extend a (k-2)-face by one vertex; all proper subsets
  // must be faces.
  for (int k = 2; k <= dim_ + 2; ++k) {
    std::set<Face> candidates;
    for (const Face& f : faces(k - 2)) {
      for (int v = 0; v < n; ++v) {
        if (std::binary_search(f.begin(), f.end(), v)) continue;
        Face cand;
        std::merge(f.begin(), f.end(), &v, &v + 1, std::back_inserter(cand));
        candidates.insert(std::move(cand));
      }
    }
    for (const Face& cand : candidates) {
      if (is_face(cand)) continue;
      bool all_subsets_faces = true;
      for (std::size_t drop = 0; drop < cand.size() && all_subsets_faces; ++drop) {
        Face sub = cand;
        sub.erase(sub.begin() + static_cast<long>(drop));
        all_subsets_faces = is_face(sub);
      }
      if (all_subsets_faces) out.push_back(cand);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

FVector fhg_vectors(const SimplicialComplex& cx) {
  if (cx.dim() < 0) throw std::invalid_argument("f-vector of the empty-face complex");
  const int d = cx.dim();
  FVector fv;
  fv.dim = d;
  fv.f.resize(d + 2);
  for (int i = -1; i <= d; ++i) fv.f[i + 1] = cx.face_count(i);

  // Pascal triangle up to d+1.
  std::vector<std::vector<long long>> choose(d + 2, std::vector<long long>(d + 2, 0));
  for (int a = 0; a <= d + 1; ++a) {
    choose[a][0] = 1;
    for (int b = 1; b <= a; ++b) {
      choose[a][b] = choose[a - 1][b - 1] + (b <= a - 1 ? choose[a - 1][b] : 0);
    }
  }
  fv.h.assign(d + 2, 0);
  for (int k = 0; k <= d + 1; ++k) {
    long long s = 0;
    for (int i = 0; i <= k; ++i) {
      const long long c = choose[d + 1 - i][k - i];
      s += ((k - i) % 2 == 0 ? c : -c) * fv.f[i];
    }
    fv.h[k] = s;
  }
  long long hsum = std::accumulate(fv.h.begin(), fv.h.end(), 0ll);
  if (hsum != fv.f[d + 1]) throw std::logic_error("h-vector identity violated");

  const int gtop = (d + 2) / 2;  // ceil((d+1)/2)
  fv.g.assign(gtop + 1, 0);
  fv.g[0] = 1;
  for (int i = 1; i <= gtop; ++i) fv.g[i] = fv.h[i] - fv.h[i - 1];
  return fv;
}

PseudomanifoldReport classify_pseudomanifold(const SimplicialComplex& cx) {
  if (cx.dim() < 0) throw std::invalid_argument("classification of the empty-face complex");
  PseudomanifoldReport rep;
  const int d = cx.dim();
  const auto& facets = cx.facets();

  rep.is_pure = std::all_of(facets.begin(), facets.end(), [&](const Face& f) {
    return static_cast<int>(f.size()) == d + 1;
  });

  // Ridge degrees: count facet containment over all ridges.
  const auto& ridges = cx.faces(d - 1);
  std::map<Face, std::vector<int>> ridge_facets;
  for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
    const Face& f = facets[fi];
    if (static_cast<int>(f.size()) != d + 1) continue;
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face r = f;
      r.erase(r.begin() + static_cast<long>(drop));
      ridge_facets[r].push_back(fi);
    }
  }
  rep.max_ridge_degree = 0;
  for (const Face& r : ridges) {
    auto it = ridge_facets.find(r);
    const int deg = it == ridge_facets.end() ? 0 : static_cast<int>(it->second.size());
    rep.max_ridge_degree = std::max(rep.max_ridge_degree, deg);
    if (deg == 1) rep.boundary_ridges.push_back(r);
  }

  // Strong connectivity of the facet-ridge adjacency graph (top facets only).
  std::vector<int> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int> top;
  for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
    if (static_cast<int>(facets[fi].size()) == d + 1) top.push_back(fi);
  }
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [r, fs] : ridge_facets) {
    for (std::size_t i = 1; i < fs.size(); ++i) parent[find(fs[i])] = find(fs[0]);
  }
  rep.is_strongly_connected =
      !top.empty() && std::all_of(top.begin(), top.end(), [&](int fi) {
        return find(fi) == find(top[0]);
      });

  rep.is_pseudomanifold =
      rep.is_pure && rep.is_strongly_connected && rep.max_ridge_degree <= 2;
  rep.is_without_boundary = rep.is_pseudomanifold && rep.boundary_ridges.empty();

  for (int v = 0; v < cx.n_vertices(); ++v) {
    const bool apex = std::all_of(facets.begin(), facets.end(), [&](const Face& f) {
      return std::binary_search(f.begin(), f.end(), v);
    });
    if (apex) rep.cone_apexes.push_back(v);
  }
  return rep;
}

}  // namespace coinv
