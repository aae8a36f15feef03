#include "coinv/compositions.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace coinv {

namespace {

std::mutex cache_mutex;

// (k, l) -> coefficient list of (1 + x + ... + x^k)^l
std::map<std::pair<int, int>, std::vector<Int>> b_cache;

const std::vector<Int>& bounded_power(int k, int l) {
  const auto key = std::make_pair(k, l);
  auto it = b_cache.find(key);
  if (it != b_cache.end()) return it->second;
  std::vector<Int> poly{Int(1)};
  for (int step = 0; step < l; ++step) {
    std::vector<Int> next(poly.size() + static_cast<std::size_t>(k), Int(0));
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (poly[i] == 0) continue;
      for (int j = 0; j <= k; ++j) next[i + static_cast<std::size_t>(j)] += poly[i];
    }
    poly = std::move(next);
  }
  return b_cache.emplace(key, std::move(poly)).first->second;
}

std::map<std::tuple<int, int, int>, Int> a_cache;

}  // namespace

Int count_a(int n, int k, int l) {
  if (n < 0 || k < 0 || l < 0) throw std::invalid_argument("negative composition argument");
  if (l == 0) return n == 0 ? Int(1) : Int(0);
  if (n < l || n > k * l) return Int(0);
  std::lock_guard<std::mutex> lock(cache_mutex);
  const auto key = std::make_tuple(n, k, l);
  auto it = a_cache.find(key);
  if (it != a_cache.end()) return it->second;
  // row[m] = a(m, k, parts); build up part by part
  std::vector<Int> row(n + 1, Int(0));
  row[0] = 1;
  for (int parts = 1; parts <= l; ++parts) {
    std::vector<Int> next(n + 1, Int(0));
    for (int m = 0; m <= n; ++m) {
      if (row[m] == 0) continue;
      for (int j = 1; j <= k && m + j <= n; ++j) next[m + j] += row[m];
    }
    row = std::move(next);
  }
  return a_cache.emplace(key, row[n]).first->second;
}

Int count_b(int n, int k, int l) {
  if (n < 0 || k < 0 || l < 0) throw std::invalid_argument("negative composition argument");
  if (n > k * l) return Int(0);
  std::lock_guard<std::mutex> lock(cache_mutex);
  const auto& poly = bounded_power(k, l);
  if (n >= static_cast<int>(poly.size())) return Int(0);
  return poly[static_cast<std::size_t>(n)];
}

std::vector<IdentityCheck> verify_identities(int d_max) {
  if (d_max < 1) throw std::invalid_argument("d_max must be at least 1");
  std::vector<IdentityCheck> out;
  for (int d = 1; d <= d_max; ++d) {
    const int t = (d + 2) * (d + 1) / 2;
    for (int i = 1; i <= d; ++i) {
      IdentityCheck c;
      c.kind = "peak";
      c.d = d;
      c.i = i;
      c.lhs = count_a(t - 1, d + 1, i);
      c.rhs = count_a(t, d + 1, i);
      c.ok = c.lhs >= c.rhs;
      out.push_back(std::move(c));
    }
    IdentityCheck c;
    c.kind = "linkage";
    c.d = d;
    c.lhs = count_b(t - d - 1, d, d) - count_b(t - d, d, d);
    c.rhs = count_b(t - d - 1, d, d + 1) - count_b(t - d - 2, d, d + 1);
    c.ok = c.lhs == c.rhs;
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace coinv
