#pragma once

#include <string>
#include <vector>

#include "coinv/rational.hpp"

namespace coinv {

// Number of compositions of n into exactly l parts, each in [1, k].
// Memoized dynamic programming over parts; exact big integers.
Int count_a(int n, int k, int l);

// Number of compositions of n into l parts, each in [0, k]; the coefficient
// of x^n in (1 + x + ... + x^k)^l, extracted from an iterated polynomial
// product. This is also the Hilbert function of the monomial complete
// intersection (x_1^{k+1}, ..., x_l^{k+1}) at n.
Int count_b(int n, int k, int l);

struct IdentityCheck {
  std::string kind;  // "peak" or "linkage"
  int d = 0;
  int i = 0;  // part count for peak checks; unused for linkage
  Int lhs;
  Int rhs;
  bool ok = false;
};

// For each 1 <= d <= d_max, with t = binom(d+2, 2):
//   peak:    a(t-1, d+1, i) >= a(t, d+1, i) for 1 <= i <= d
//   linkage: b(t-d-1, d, d) - b(t-d, d, d)
//              == b(t-d-1, d, d+1) - b(t-d-2, d, d+1)
// Both are theorems, so a failed row signals an implementation bug.
std::vector<IdentityCheck> verify_identities(int d_max);

}  // namespace coinv
