#include "coinv/rational.hpp"

#include <stdexcept>

namespace coinv {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  }
  if (q.get_den() == 0) {
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  }
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& x) {
  return x.get_str();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero mod p");
  return pow_mod(a, p - 2, p);  // p prime
}

std::uint64_t reduce_mod(const Rat& x, std::uint64_t p) {
  const Int num = x.get_num();
  const Int den = x.get_den();
  const Int pz(static_cast<unsigned long>(p));
  Int nr = num % pz;
  if (nr < 0) nr += pz;
  Int dr = den % pz;
  if (dr == 0) throw std::domain_error("denominator vanishes mod p");
  const std::uint64_t n = nr.get_ui();
  const std::uint64_t d = dr.get_ui();
  return mul_mod(n, inv_mod(d, p), p);
}

}  // namespace coinv
