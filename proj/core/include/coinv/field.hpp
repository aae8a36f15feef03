#pragma once

#include <cstdint>
#include <string>

namespace coinv {

// Coefficient field for all exact linear algebra: the rationals, or a prime
// field F_p with p < 2^31.
class Field {
 public:
  static Field rationals() { return Field(0); }
  // Throws std::invalid_argument unless p is a prime below 2^31.
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  // Field characteristic: 0 for the rationals.
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t modulus() const;

  std::string name() const;  // "QQ" or "F<p>"
  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_;
};

}  // namespace coinv
