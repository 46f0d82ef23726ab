#pragma once

#include <array>
#include <optional>
#include <random>
#include <string_view>

#include "gf2m/bitvec.hpp"

namespace gf2m {

/// An element of GF(2^m) in polynomial basis: exactly m coefficient bits.
using FieldElement = BitVec;

/// Monic degree-m reduction polynomial f(x) = x^m + r(x), stored as the m-bit
/// reduction vector r = f - x^m. The constant term f_0 is always 1.
struct IrreduciblePoly {
  std::size_t m = 0;
  BitVec reduction;

  static IrreduciblePoly create(std::size_t m, BitVec reduction_vector);
  static IrreduciblePoly from_hex(std::size_t m, std::string_view reduction_hex);

  bool operator==(const IrreduciblePoly&) const = default;
};

/// a + b over GF(2^m): coefficient-wise XOR.
FieldElement add(const FieldElement& a, const FieldElement& b);

/// Reduces a (2m-1)-bit carry-less product modulo f, high bits downward.
FieldElement reduce(const BitVec& product, const IrreduciblePoly& f);

/// Reference multiplication: full schoolbook carry-less product followed by
/// one modular reduction. Serves as the oracle for the serial engines.
FieldElement mul_reference(const FieldElement& a, const FieldElement& b,
                           const IrreduciblePoly& f);

enum class NistFieldId { B163, B233, B283, B409, B571 };

IrreduciblePoly nist_poly(NistFieldId id);
std::size_t nist_degree(NistFieldId id);
std::string_view nist_name(NistFieldId id);
const std::array<NistFieldId, 5>& all_nist_fields();

/// Accepts "b163", "B163", "B-163", ...
std::optional<NistFieldId> parse_nist_id(std::string_view name);

/// Catalog polynomial for a bare degree: the two small test fields
/// (m = 4, 8) and the five NIST fields. Empty for any other m.
std::optional<IrreduciblePoly> default_poly(std::size_t m);

/// Uniformly random element of GF(2^m).
FieldElement random_element(std::size_t m, std::mt19937_64& rng);

} // namespace gf2m
