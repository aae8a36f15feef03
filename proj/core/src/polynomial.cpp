#include "coinv/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace coinv {

int total_degree(const Exponents& e) {
  return std::accumulate(e.begin(), e.end(), 0);
}

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i];  // smaller last entry comes first
  }
  return false;
}

DualPolynomial::DualPolynomial(int n_vars) : n_(n_vars), degree_(-1) {
  if (n_vars < 0) throw std::invalid_argument("negative variable count");
}

void DualPolynomial::add_term(const Exponents& e, const Rat& c) {
  if (static_cast<int>(e.size()) != n_) {
    throw std::invalid_argument("exponent vector length does not match variable count");
  }
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("negative exponent");
  }
  Rat canon = c;
  canon.canonicalize();  // two-argument mpq_class constructions may not be
  if (canon == 0) return;
  const int d = total_degree(e);
  if (degree_ >= 0 && d != degree_) {
    throw std::invalid_argument("mixed degrees in a homogeneous polynomial");
  }
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, std::move(canon));
    degree_ = d;
  } else {
    it->second += canon;
    if (it->second == 0) terms_.erase(it);
  }
  if (terms_.empty()) degree_ = -1;
}

Rat DualPolynomial::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rat(0) : it->second;
}

DualPolynomial& DualPolynomial::operator+=(const DualPolynomial& o) {
  if (o.n_ != n_) throw std::invalid_argument("variable count mismatch");
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

DualPolynomial DualPolynomial::operator*(const Rat& c) const {
  DualPolynomial out(n_);
  Rat canon = c;
  canon.canonicalize();
  if (canon == 0) return out;
  for (const auto& [e, v] : terms_) out.add_term(e, v * canon);
  return out;
}

bool DualPolynomial::operator==(const DualPolynomial& o) const {
  return n_ == o.n_ && terms_ == o.terms_;
}

DualPolynomial multiply(const DualPolynomial& a, const DualPolynomial& b) {
  if (a.n_vars() != b.n_vars()) throw std::invalid_argument("variable count mismatch");
  DualPolynomial out(a.n_vars());
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponents e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

DualPolynomial power(const DualPolynomial& a, int j) {
  if (j < 0) throw std::invalid_argument("negative power");
  DualPolynomial out(a.n_vars());
  out.add_term(Exponents(a.n_vars(), 0), Rat(1));
  for (int i = 0; i < j; ++i) out = multiply(out, a);
  return out;
}

DualPolynomial contract(const DualPolynomial& f, const DualPolynomial& F) {
  if (f.n_vars() != F.n_vars()) throw std::invalid_argument("variable count mismatch");
  const int n = f.n_vars();
  DualPolynomial out(n);
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : F.terms()) {
      bool ok = true;
      Exponents e(n);
      for (int i = 0; i < n; ++i) {
        if (b[i] < a[i]) {
          ok = false;
          break;
        }
        e[i] = b[i] - a[i];
      }
      if (ok) out.add_term(e, ca * cb);
    }
  }
  return out;
}

DualPolynomial vandermonde(const Face& B, int n_vars) {
  if (B.empty()) throw std::invalid_argument("Vandermonde on an empty vertex set");
  for (int v : B) {
    if (v < 0 || v >= n_vars) throw std::invalid_argument("vertex id out of range");
  }
  DualPolynomial out(n_vars);
  out.add_term(Exponents(n_vars, 0), Rat(1));
  for (std::size_t i = 0; i < B.size(); ++i) {
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      DualPolynomial diff(n_vars);
      Exponents eu(n_vars, 0), ev(n_vars, 0);
      eu[B[i]] = 1;
      ev[B[j]] = 1;
      diff.add_term(eu, Rat(1));
      diff.add_term(ev, Rat(-1));
      out = multiply(out, diff);
    }
  }
  return out;
}

DualPolynomial elementary_symmetric(int n_vars, int k) {
  if (k < 0 || k > n_vars) throw std::invalid_argument("elementary symmetric index out of range");
  DualPolynomial out(n_vars);
  if (k == 0) {
    out.add_term(Exponents(n_vars, 0), Rat(1));
    return out;
  }
  Face sel(k);
  std::iota(sel.begin(), sel.end(), 0);
  while (true) {
    Exponents e(n_vars, 0);
    for (int v : sel) e[v] = 1;
    out.add_term(e, Rat(1));
    int i = k - 1;
    while (i >= 0 && sel[i] == n_vars - k + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
  }
  return out;
}

DualPolynomial elementary_symmetric_on_faces(const SimplicialComplex& cx, int k) {
  if (k < 1) throw std::invalid_argument("elementary symmetric index must be positive");
  DualPolynomial out(cx.n_vertices());
  if (k - 1 > cx.dim()) return out;  // no (k-1)-faces: acts as zero on face-supported duals
  for (const Face& f : cx.faces(k - 1)) {
    Exponents e(cx.n_vertices(), 0);
    for (int v : f) e[v] = 1;
    out.add_term(e, Rat(1));
  }
  return out;
}

namespace {

void enumerate_on_face(const Face& f, const std::vector<int>* caps, int n, int t,
                       std::size_t pos, Exponents& cur, std::vector<Exponents>& out) {
  const int remaining_slots = static_cast<int>(f.size() - pos);
  if (remaining_slots == 0) {
    if (t == 0) out.push_back(cur);
    return;
  }
  const int v = f[pos];
  const int hi_cap = caps ? (*caps)[v] - 1 : t;
  // Each remaining vertex needs exponent >= 1 (the support is exactly f).
  const int hi = std::min(hi_cap, t - (remaining_slots - 1));
  for (int e = 1; e <= hi; ++e) {
    cur[v] = e;
    enumerate_on_face(f, caps, n, t - e, pos + 1, cur, out);
  }
  cur[v] = 0;
}

}  // namespace

std::vector<Exponents> face_monomials(const SimplicialComplex& cx, int t,
                                      const std::vector<int>* caps) {
  if (t < 0) throw std::invalid_argument("negative degree");
  if (caps && static_cast<int>(caps->size()) != cx.n_vertices()) {
    throw std::invalid_argument("cap vector length does not match vertex count");
  }
  const int n = cx.n_vertices();
  std::vector<Exponents> out;
  if (t == 0) {
    out.emplace_back(n, 0);
    return out;
  }
  Exponents cur(n, 0);
  for (int i = 0; i <= cx.dim(); ++i) {
    if (i + 1 > t) break;
    for (const Face& f : cx.faces(i)) {
      enumerate_on_face(f, caps, n, t, 0, cur, out);
    }
  }
  std::sort(out.begin(), out.end(), MonomialOrder{});
  return out;
}

}  // namespace coinv
