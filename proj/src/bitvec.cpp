#include "gf2m/bitvec.hpp"

#include <bit>

namespace gf2m {

namespace {
constexpr std::size_t kWordBits = 64;

std::size_t word_count(std::size_t nbits) {
  return (nbits + kWordBits - 1) / kWordBits;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}
} // namespace

BitVec::BitVec(std::size_t nbits) : nbits_(nbits), words_(word_count(nbits), 0) {}

BitVec BitVec::from_hex(std::string_view hex, std::size_t nbits) {
  if (hex.empty()) throw ParseError("empty hex string");
  BitVec v(nbits);
  std::size_t bit = 0; // next bit index, filled from the string's end
  for (std::size_t pos = hex.size(); pos-- > 0;) {
    int d = hex_digit(hex[pos]);
    if (d < 0)
      throw ParseError(std::string("invalid hex digit '") + hex[pos] + "'");
    for (int k = 0; k < 4; ++k, ++bit) {
      if (!((d >> k) & 1)) continue;
      if (bit >= nbits)
        throw ParseError("hex value has a set coefficient at index " +
                         std::to_string(bit) + ", outside a field of degree " +
                         std::to_string(nbits));
      v.set(bit);
    }
  }
  return v;
}

BitVec BitVec::with_bits(std::initializer_list<std::size_t> set_bits,
                         std::size_t nbits) {
  BitVec v(nbits);
  for (std::size_t i : set_bits) v.set(i);
  return v;
}

BitVec BitVec::from_u64(std::uint64_t value, std::size_t nbits) {
  BitVec v(nbits);
  for (std::size_t i = 0; i < kWordBits && i < nbits; ++i)
    if ((value >> i) & 1) v.set(i);
  if (nbits < kWordBits && (value >> nbits) != 0)
    throw ParseError("value does not fit in " + std::to_string(nbits) + " bits");
  return v;
}

bool BitVec::test(std::size_t i) const {
  if (i >= nbits_) throw Error("bit index out of range");
  return (words_[i / kWordBits] >> (i % kWordBits)) & 1;
}

void BitVec::set(std::size_t i, bool v) {
  if (i >= nbits_) throw Error("bit index out of range");
  std::uint64_t mask = std::uint64_t{1} << (i % kWordBits);
  if (v)
    words_[i / kWordBits] |= mask;
  else
    words_[i / kWordBits] &= ~mask;
}

bool BitVec::none() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::size_t BitVec::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

int BitVec::degree() const {
  for (std::size_t i = words_.size(); i-- > 0;)
    if (words_[i])
      return static_cast<int>(i * kWordBits + kWordBits - 1 -
                              static_cast<std::size_t>(std::countl_zero(words_[i])));
  return -1;
}

BitVec& BitVec::operator^=(const BitVec& rhs) {
  if (nbits_ != rhs.nbits_)
    throw DegreeMismatch("bit vector widths differ: " + std::to_string(nbits_) +
                         " vs " + std::to_string(rhs.nbits_));
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= rhs.words_[i];
  return *this;
}

BitVec BitVec::shifted_up() const {
  BitVec out(nbits_);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] = (words_[i] << 1) | carry;
    carry = words_[i] >> (kWordBits - 1);
  }
  out.trim_();
  return out;
}

std::string BitVec::to_hex() const {
  std::size_t digits = (nbits_ + 3) / 4;
  std::string out(digits, '0');
  static const char* kHex = "0123456789abcdef";
  for (std::size_t d = 0; d < digits; ++d) {
    int nib = 0;
    for (int k = 0; k < 4; ++k) {
      std::size_t bit = d * 4 + static_cast<std::size_t>(k);
      if (bit < nbits_ && test(bit)) nib |= 1 << k;
    }
    out[digits - 1 - d] = kHex[nib];
  }
  return out;
}

std::uint64_t BitVec::to_u64() const {
  if (nbits_ > kWordBits) throw Error("vector wider than 64 bits");
  return words_.empty() ? 0 : words_[0];
}

void BitVec::trim_() {
  std::size_t slack = word_count(nbits_) * kWordBits - nbits_;
  if (!words_.empty() && slack)
    words_.back() &= ~std::uint64_t{0} >> slack;
}

// dst ^= src << shift (dst sized to hold the result)
void xor_shifted_(std::vector<std::uint64_t>& dst, const BitVec& src,
                  std::size_t shift) {
  std::size_t word_shift = shift / 64;
  std::size_t bit_shift = shift % 64;
  for (std::size_t i = 0; i < src.words_.size(); ++i) {
    std::uint64_t w = src.words_[i];
    if (!w) continue;
    dst[i + word_shift] ^= w << bit_shift;
    if (bit_shift && i + word_shift + 1 < dst.size())
      dst[i + word_shift + 1] ^= w >> (64 - bit_shift);
  }
}

BitVec clmul(const BitVec& a, const BitVec& b) {
  if (a.bits() == 0 || b.bits() == 0) throw Error("empty operand");
  BitVec out(a.bits() + b.bits() - 1);
  for (std::size_t i = 0; i < a.bits(); ++i)
    if (a.test(i)) xor_shifted_(out.words_, b, i);
  out.trim_();
  return out;
}

} // namespace gf2m
