#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "gf2m/errors.hpp"

namespace gf2m {

/// Fixed-width bit vector over GF(2). Bit i is the coefficient of x^i
/// (LSB = constant term). All operations stay within the declared width.
class BitVec {
public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits);

  /// Parses a hex string (case-insensitive) into a vector of `nbits` bits.
  /// Rejects set bits at index >= nbits instead of truncating.
  static BitVec from_hex(std::string_view hex, std::size_t nbits);

  /// Vector of `nbits` bits with exactly the listed bit positions set.
  static BitVec with_bits(std::initializer_list<std::size_t> set_bits,
                          std::size_t nbits);

  static BitVec from_u64(std::uint64_t value, std::size_t nbits);

  std::size_t bits() const { return nbits_; }
  bool test(std::size_t i) const;
  void set(std::size_t i, bool v = true);
  bool none() const;
  std::size_t count() const;
  /// Index of the highest set bit, or -1 for the zero vector.
  int degree() const;

  BitVec& operator^=(const BitVec& rhs);
  friend BitVec operator^(BitVec lhs, const BitVec& rhs) {
    lhs ^= rhs;
    return lhs;
  }
  bool operator==(const BitVec&) const = default;

  /// Shift up by one within the fixed width; the former top bit is dropped.
  BitVec shifted_up() const;

  /// Lowercase hex, most significant nibble first, padded to ceil(bits/4) digits.
  std::string to_hex() const;
  std::uint64_t to_u64() const;

private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;

  void trim_();
  friend BitVec clmul(const BitVec&, const BitVec&);
  friend void xor_shifted_(std::vector<std::uint64_t>&, const BitVec&, std::size_t);
};

/// Carry-less (GF(2)[x]) product; result width a.bits() + b.bits() - 1.
BitVec clmul(const BitVec& a, const BitVec& b);

} // namespace gf2m
