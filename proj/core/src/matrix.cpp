#include "coinv/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace coinv {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

void ExactMatrix::check(int r, int c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
    throw std::out_of_range("matrix index out of range");
  }
}

void ExactMatrix::add(int r, int c, const Rat& v) {
  check(r, c);
  Rat canon = v;
  canon.canonicalize();  // two-argument mpq_class constructions may not be
  if (canon == 0) return;
  auto key = std::make_pair(r, c);
  auto it = cells_.find(key);
  if (it == cells_.end()) {
    cells_.emplace(key, std::move(canon));
  } else {
    it->second += canon;
    if (it->second == 0) cells_.erase(it);
  }
}

void ExactMatrix::set(int r, int c, const Rat& v) {
  check(r, c);
  Rat canon = v;
  canon.canonicalize();
  auto key = std::make_pair(r, c);
  if (canon == 0) {
    cells_.erase(key);
  } else {
    cells_[key] = std::move(canon);
  }
}

Rat ExactMatrix::at(int r, int c) const {
  check(r, c);
  auto it = cells_.find(std::make_pair(r, c));
  return it == cells_.end() ? Rat(0) : it->second;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (const auto& [rc, v] : cells_) t.cells_[{rc.second, rc.first}] = v;
  return t;
}

std::vector<Rat> ExactMatrix::apply(const std::vector<Rat>& x) const {
  if (static_cast<int>(x.size()) != cols_) {
    throw std::invalid_argument("vector length does not match column count");
  }
  std::vector<Rat> y(rows_, Rat(0));
  for (const auto& [rc, v] : cells_) {
    if (x[rc.second] != 0) y[rc.first] += v * x[rc.second];
  }
  return y;
}

namespace {

// ---------------------------------------------------------------------------
// Dense conversions

// Rows scaled by the lcm of their denominators: integer matrix with the same
// row space and null space.
std::vector<std::vector<Int>> dense_integer_rows(const ExactMatrix& m) {
  std::vector<std::vector<Int>> d(m.rows(), std::vector<Int>(m.cols(), Int(0)));
  std::vector<Int> scale(m.rows(), Int(1));
  for (const auto& [rc, v] : m.cells()) {
    Int den = v.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), scale[rc.first].get_mpz_t(), den.get_mpz_t());
    scale[rc.first] = scale[rc.first] / g * den;
  }
  for (const auto& [rc, v] : m.cells()) {
    Rat scaled = v * Rat(scale[rc.first]);
    d[rc.first][rc.second] = scaled.get_num();  // denominator is 1 by construction
  }
  return d;
}

std::vector<std::vector<std::uint64_t>> dense_mod(const ExactMatrix& m, std::uint64_t p) {
  std::vector<std::vector<std::uint64_t>> d(m.rows(),
                                            std::vector<std::uint64_t>(m.cols(), 0));
  for (const auto& [rc, v] : m.cells()) {
    d[rc.first][rc.second] = reduce_mod(v, p);
  }
  return d;
}

// ---------------------------------------------------------------------------
// Structural trimming for rank: repeatedly delete zero rows/columns and pivot
// away rows/columns with a single nonzero entry. Each singleton pivot adds 1
// to the rank and requires no arithmetic.
template <typename T>
long long trim_for_rank(std::vector<std::vector<T>>& m) {
  long long pivots = 0;
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  std::vector<bool> row_dead(rows, false), col_dead(cols, false);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> row_nnz(rows, 0), col_nnz(cols, 0);
    std::vector<std::size_t> row_last(rows, 0), col_last(cols, 0);
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_dead[i]) continue;
      for (std::size_t j = 0; j < cols; ++j) {
        if (col_dead[j] || m[i][j] == T(0)) continue;
        ++row_nnz[i];
        row_last[i] = j;
        ++col_nnz[j];
        col_last[j] = i;
      }
    }
    std::vector<bool> row_claim(rows, false), col_claim(cols, false);
    for (std::size_t i = 0; i < rows; ++i) {
      if (row_dead[i]) continue;
      if (row_nnz[i] == 0) {
        row_dead[i] = true;
        changed = true;
      } else if (row_nnz[i] == 1 && !row_claim[i] && !col_claim[row_last[i]]) {
        row_claim[i] = col_claim[row_last[i]] = true;
        row_dead[i] = col_dead[row_last[i]] = true;
        ++pivots;
        changed = true;
      }
    }
    for (std::size_t j = 0; j < cols; ++j) {
      if (col_dead[j]) continue;
      if (col_nnz[j] == 0) {
        col_dead[j] = true;
        changed = true;
      } else if (col_nnz[j] == 1 && !col_claim[j] && !row_claim[col_last[j]] &&
                 !row_dead[col_last[j]]) {
        col_claim[j] = row_claim[col_last[j]] = true;
        col_dead[j] = row_dead[col_last[j]] = true;
        ++pivots;
        changed = true;
      }
    }
  }
  std::vector<std::vector<T>> rest;
  for (std::size_t i = 0; i < rows; ++i) {
    if (row_dead[i]) continue;
    std::vector<T> row;
    row.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      if (!col_dead[j]) row.push_back(std::move(m[i][j]));
    }
    rest.push_back(std::move(row));
  }
  m = std::move(rest);
  return pivots;
}

// ---------------------------------------------------------------------------
// Fraction-free forward elimination (Bareiss). Entries stay single minors of
// the input, so growth is polynomially bounded. Returns the pivot column list;
// on exit m holds the echelon form with pivot rows first.
std::vector<int> bareiss_forward(std::vector<std::vector<Int>>& m) {
  std::vector<int> pivot_cols;
  if (m.empty() || m[0].empty()) return pivot_cols;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  Int prev(1);
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    const Int& piv = m[r][c];
    Int num, q, rem;
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        num = piv * m[i][j] - m[i][c] * m[r][j];
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (rem != 0) throw std::logic_error("fraction-free elimination step not exact");
        m[i][j] = q;
      }
      m[i][c] = 0;
    }
    prev = piv;
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

long long bareiss_rank(std::vector<std::vector<Int>>& m) {
  return static_cast<long long>(bareiss_forward(m).size());
}

// Modular forward elimination; returns the pivot column list.
std::vector<int> mod_forward(std::vector<std::vector<std::uint64_t>>& m, std::uint64_t p) {
  std::vector<int> pivot_cols;
  if (m.empty() || m[0].empty()) return pivot_cols;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] % p != 0) {
        pr = i;
        break;
      }
    }
    if (pr < 0) continue;
    std::swap(m[r], m[pr]);
    const std::uint64_t inv = inv_mod(m[r][c], p);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      const std::uint64_t f = mul_mod(m[i][c], inv, p);
      for (int j = c; j < cols; ++j) {
        if (m[r][j] == 0) continue;
        const std::uint64_t sub = mul_mod(f, m[r][j], p);
        m[i][j] = (m[i][j] + p - sub) % p;
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return pivot_cols;
}

long long rank_mod_p(const ExactMatrix& m, std::uint64_t p) {
  auto d = dense_mod(m, p);
  long long base = trim_for_rank(d);
  return base + static_cast<long long>(mod_forward(d, p).size());
}

// Certifying prime: a nonzero minor mod p is nonzero over Q, so a full-rank
// answer mod p is already exact over Q.
constexpr std::uint64_t kWitnessPrime = 2147483647ull;

long long rank_rationals(const ExactMatrix& m) {
  const long long full = std::min(m.rows(), m.cols());
  if (full == 0 || m.nonzeros() == 0) return 0;
  try {
    const long long rp = rank_mod_p(m, kWitnessPrime);
    if (rp == full) return rp;
  } catch (const std::domain_error&) {
    // a denominator hit the witness prime; fall through to the exact path
  }
  auto d = dense_integer_rows(m);
  long long base = trim_for_rank(d);
  return base + bareiss_rank(d);
}

std::vector<Rat> normalize_first_nonzero(std::vector<Rat> v, const Field& f) {
  for (const Rat& x : v) {
    if (x != 0) {
      Rat lead = x;
      if (f.is_prime_field()) {
        lead = Rat(static_cast<unsigned long>(reduce_mod(x, f.modulus())));
      }
      for (Rat& y : v) {
        if (y != 0) {
          if (f.is_prime_field()) {
            const std::uint64_t p = f.modulus();
            const std::uint64_t val =
                mul_mod(reduce_mod(y, p), inv_mod(reduce_mod(lead, p), p), p);
            y = Rat(static_cast<unsigned long>(val));
          } else {
            y /= lead;
          }
        }
      }
      break;
    }
  }
  return v;
}

std::vector<std::vector<Rat>> kernel_rationals(const ExactMatrix& m) {
  const int cols = m.cols();
  std::vector<std::vector<Rat>> basis;
  if (cols == 0) return basis;
  auto d = dense_integer_rows(m);
  const std::vector<int> pivot_cols = bareiss_forward(d);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(cols, Rat(0));
    v[fc] = 1;
    for (int k = static_cast<int>(pivot_cols.size()) - 1; k >= 0; --k) {
      const int pc = pivot_cols[k];
      Rat s(0);
      for (int j = pc + 1; j < cols; ++j) {
        if (d[k][j] != 0 && v[j] != 0) s += Rat(d[k][j]) * v[j];
      }
      v[pc] = -s / Rat(d[k][pc]);
    }
    basis.push_back(normalize_first_nonzero(std::move(v), Field::rationals()));
  }
  return basis;
}

std::vector<std::vector<Rat>> kernel_mod_p(const ExactMatrix& m, const Field& f) {
  const std::uint64_t p = f.modulus();
  const int cols = m.cols();
  std::vector<std::vector<Rat>> basis;
  if (cols == 0) return basis;
  auto d = dense_mod(m, p);
  const std::vector<int> pivot_cols = mod_forward(d, p);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  for (int fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[fc] = 1;
    for (int k = static_cast<int>(pivot_cols.size()) - 1; k >= 0; --k) {
      const int pc = pivot_cols[k];
      std::uint64_t s = 0;
      for (int j = pc + 1; j < cols; ++j) {
        if (d[k][j] && v[j]) s = (s + mul_mod(d[k][j], v[j], p)) % p;
      }
      v[pc] = mul_mod((p - s) % p, inv_mod(d[k][pc], p), p);
    }
    std::vector<Rat> rv(cols);
    for (int j = 0; j < cols; ++j) rv[j] = Rat(static_cast<unsigned long>(v[j]));
    basis.push_back(normalize_first_nonzero(std::move(rv), f));
  }
  return basis;
}

}  // namespace

long long rank(const ExactMatrix& m, const Field& f) {
  if (f.is_rationals()) return rank_rationals(m);
  return rank_mod_p(m, f.modulus());
}

std::vector<std::vector<Rat>> kernel_basis(const ExactMatrix& m, const Field& f) {
  if (f.is_rationals()) return kernel_rationals(m);
  return kernel_mod_p(m, f);
}

}  // namespace coinv
