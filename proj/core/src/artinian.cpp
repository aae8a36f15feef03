#include "coinv/artinian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "coinv/compositions.hpp"
#include "coinv/homology.hpp"

namespace coinv {

ArtinianSpec::ArtinianSpec(SimplicialComplex cx, std::vector<int> caps_in, Field f)
    : complex(std::move(cx)), caps(std::move(caps_in)), field(f) {
  if (static_cast<int>(caps.size()) != complex.n_vertices()) {
    throw std::invalid_argument("cap count does not match vertex count");
  }
  for (int c : caps) {
    if (c < 1) throw std::invalid_argument("caps must be positive");
  }
}

ArtinianSpec ArtinianSpec::uniform(SimplicialComplex cx, int cap, Field f) {
  const int n = cx.n_vertices();
  return ArtinianSpec(std::move(cx), std::vector<int>(n, cap), f);
}

std::vector<Exponents> monomial_basis(const ArtinianSpec& spec, int t) {
  if (t < 0) throw std::invalid_argument("negative degree");
  return face_monomials(spec.complex, t, &spec.caps);
}

std::vector<long long> hilbert_function(const ArtinianSpec& spec, int T) {
  const bool auto_extent = T < 0;
  const int hard_stop =
      std::accumulate(spec.caps.begin(), spec.caps.end(), 0) - spec.complex.n_vertices() + 1;
  if (auto_extent) T = hard_stop;
  std::vector<long long> dims;
  for (int t = 0; t <= T; ++t) {
    dims.push_back(static_cast<long long>(monomial_basis(spec, t).size()));
    if (auto_extent && dims.back() == 0) break;
  }

  const bool uniform =
      std::all_of(spec.caps.begin(), spec.caps.end(), [&](int c) { return c == spec.caps[0]; });
  if (uniform) {
    const int k = spec.caps[0] - 1;  // exponent bound
    for (std::size_t t = 0; t < dims.size(); ++t) {
      Int expect = (t == 0) ? Int(1) : Int(0);
      for (int i = 0; i <= spec.complex.dim(); ++i) {
        expect += Int(static_cast<long>(spec.complex.face_count(i))) *
                  count_a(static_cast<int>(t), k, i + 1);
      }
      if (expect != Int(static_cast<long>(dims[t]))) {
        throw std::logic_error("direct and composition-formula Hilbert functions disagree");
      }
    }
  }
  return dims;
}

ExactMatrix lefschetz_matrix(const ArtinianSpec& spec, int t, int j) {
  if (t < 0 || j < 0) throw std::invalid_argument("negative degree or power");
  const auto src = monomial_basis(spec, t);
  const auto dst = monomial_basis(spec, t + j);
  std::map<Exponents, int, MonomialOrder> dst_index;
  for (int i = 0; i < static_cast<int>(dst.size()); ++i) dst_index.emplace(dst[i], i);

  ExactMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  const int n = spec.complex.n_vertices();
  Int factorial_j(1);
  for (int i = 2; i <= j; ++i) factorial_j *= i;

  // Walks over the exponent increments gamma with |gamma| = j; the entry for
  // (m * x^gamma, m) is the multinomial j! / prod gamma_i!.
  std::vector<int> gamma(n, 0);
  auto emit = [&](int col) {
    Exponents e = src[col];
    for (int i = 0; i < n; ++i) e[i] += gamma[i];
    auto it = dst_index.find(e);
    if (it == dst_index.end()) return;
    Int coef = factorial_j;
    for (int i = 0; i < n; ++i) {
      Int fg(1);
      for (int q = 2; q <= gamma[i]; ++q) fg *= q;
      coef /= fg;
    }
    Rat entry{coef};
    if (spec.field.is_prime_field()) {
      entry = Rat(static_cast<unsigned long>(reduce_mod(entry, spec.field.modulus())));
    }
    m.add(it->second, col, entry);
  };
  for (int col = 0; col < static_cast<int>(src.size()); ++col) {
    // enumerate gamma recursively
    auto rec = [&](auto&& self, int var, int remaining) -> void {
      if (var == n - 1) {
        gamma[var] = remaining;
        emit(col);
        gamma[var] = 0;
        return;
      }
      for (int e = 0; e <= remaining; ++e) {
        gamma[var] = e;
        self(self, var + 1, remaining - e);
      }
      gamma[var] = 0;
    };
    rec(rec, 0, j);
  }
  return m;
}

GradedRankReport lefschetz_verdict(const ArtinianSpec& spec, int max_power) {
  if (max_power < 1) throw std::invalid_argument("max power must be positive");
  GradedRankReport rep;
  rep.dims = hilbert_function(spec);
  const int T = static_cast<int>(rep.dims.size()) - 1;
  for (int j = 1; j <= max_power; ++j) {
    std::vector<long long> ranks;
    for (int t = 0; t + j <= T; ++t) {
      const long long target = std::min(rep.dims[t], rep.dims[t + j]);
      long long r = 0;
      if (target > 0) r = rank(lefschetz_matrix(spec, t, j), spec.field);
      ranks.push_back(r);
      if (r < target) {
        rep.failures.push_back(RankRecord{t, t + j, r, target});
        if (j == 1) rep.wlp_holds = false;
      }
    }
    rep.ranks[j] = std::move(ranks);
  }
  return rep;
}

std::vector<long long> quotient_dims(const GradedRankReport& rep) {
  const auto& r1 = rep.ranks.at(1);
  std::vector<long long> q(rep.dims.size());
  q[0] = rep.dims[0];
  for (std::size_t t = 1; t < rep.dims.size(); ++t) {
    q[t] = rep.dims[t] - (t - 1 < r1.size() ? r1[t - 1] : 0);
  }
  return q;
}

FailureCertificate guaranteed_failure(const SimplicialComplex& cx, const Field& f) {
  FailureCertificate cert;
  cert.d = cx.dim();
  if (cert.d < 1) return cert;
  cert.ridge_count = cx.face_count(cert.d - 1);
  cert.facet_count = cx.face_count(cert.d);
  // β̃_d needs only the top boundary rank; there are no (d+1)-chains.
  cert.top_betti = cert.facet_count - rank(boundary_matrix(cx, cert.d), f);
  cert.to_degree = (cert.d + 2) * (cert.d + 1) / 2;
  cert.from_degree = cert.to_degree - 1;
  cert.applies = cert.ridge_count >= cert.facet_count && cert.top_betti > 0;
  return cert;
}

}  // namespace coinv
