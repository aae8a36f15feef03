#include "coinv/homology.hpp"

#include <stdexcept>

namespace coinv {

ExactMatrix boundary_matrix(const SimplicialComplex& cx, int i) {
  if (i < 0 || i > cx.dim()) throw std::out_of_range("boundary degree out of range");
  const auto& rows = cx.faces(i - 1);
  const auto& cols = cx.faces(i);
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
    const Face& s = cols[c];
    for (std::size_t j = 0; j < s.size(); ++j) {
      Face t = s;
      t.erase(t.begin() + static_cast<long>(j));
      const int r = cx.face_index(i - 1, t);
      m.set(r, c, (j % 2 == 0) ? Rat(1) : Rat(-1));
    }
  }
  return m;
}

BettiProfile reduced_betti(const SimplicialComplex& cx, const Field& f) {
  BettiProfile prof;
  prof.field = f;
  const int d = cx.dim();
  if (d < 0) {
    prof.betti = {1};  // the complex {∅} carries one class in degree -1
    return prof;
  }
  std::vector<long long> rk(d + 2, 0);
  for (int i = 0; i <= d; ++i) rk[i] = rank(boundary_matrix(cx, i), f);
  rk[d + 1] = 0;
  prof.betti.assign(d + 2, 0);
  // β̃_i = dim ker ∂_i - rank ∂_{i+1}, with ∂_{-1} the zero map on C_{-1}.
  prof.betti[0] = 1 - rk[0];
  for (int i = 0; i <= d; ++i) {
    prof.betti[i + 1] = (cx.face_count(i) - rk[i]) - rk[i + 1];
  }
  return prof;
}

TopCycleSpace top_cycle_space(const SimplicialComplex& cx, const Field& f) {
  TopCycleSpace out;
  const int d = cx.dim();
  if (d < 0) return out;
  const auto kernel = kernel_basis(boundary_matrix(cx, d), f);
  const auto& dfaces = cx.faces(d);
  for (const auto& vec : kernel) {
    Chain ch;
    ch.degree = d;
    for (std::size_t j = 0; j < vec.size(); ++j) {
      if (vec[j] != 0) ch.coeffs[dfaces[j]] = vec[j];
    }
    out.basis.push_back(std::move(ch));
  }
  if (out.basis.size() == 1) {
    const auto rep = classify_pseudomanifold(cx);
    if (rep.is_pseudomanifold && rep.is_without_boundary) {
      out.orientation_flagged = true;  // kernel vectors lead with coefficient 1
    }
  }
  return out;
}

ReisnerFlags reisner_check(const SimplicialComplex& cx, const Field& f) {
  ReisnerFlags flags{true, true};
  for (int i = -1; i <= cx.dim(); ++i) {
    for (const Face& sigma : cx.faces(i)) {
      const SimplicialComplex lk = cx.link(sigma);
      const int dl = lk.dim();
      const BettiProfile b = reduced_betti(lk, f);
      for (int j = -1; j < dl; ++j) {
        if (b.at(j) != 0) {
          flags.is_cohen_macaulay = false;
          flags.is_homology_sphere = false;
        }
      }
      if (b.at(dl) != 1) flags.is_homology_sphere = false;
    }
  }
  return flags;
}

}  // namespace coinv
