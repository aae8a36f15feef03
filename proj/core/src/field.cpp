#include "coinv/field.hpp"

#include <stdexcept>

namespace coinv {

namespace {

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t q = 3; q * q <= p; q += 2) {
    if (p % q == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31)) {
    throw std::invalid_argument("prime field modulus must be below 2^31");
  }
  if (!is_prime_u64(p)) {
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::uint64_t Field::modulus() const {
  if (p_ == 0) throw std::logic_error("rationals have no modulus");
  return p_;
}

std::string Field::name() const {
  return p_ == 0 ? "QQ" : "F" + std::to_string(p_);
}

}  // namespace coinv
