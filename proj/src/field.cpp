#include "gf2m/field.hpp"

namespace gf2m {

IrreduciblePoly IrreduciblePoly::create(std::size_t m, BitVec reduction_vector) {
  if (m == 0) throw Error("field degree must be positive");
  if (reduction_vector.bits() != m)
    throw DegreeMismatch("reduction vector must have exactly m = " +
                         std::to_string(m) + " bits");
  if (!reduction_vector.test(0))
    throw Error("reduction polynomial must have constant term f_0 = 1");
  return IrreduciblePoly{m, std::move(reduction_vector)};
}

IrreduciblePoly IrreduciblePoly::from_hex(std::size_t m, std::string_view hex) {
  return create(m, BitVec::from_hex(hex, m));
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  if (a.bits() != b.bits())
    throw DegreeMismatch("add: operands from different fields (" +
                         std::to_string(a.bits()) + " vs " +
                         std::to_string(b.bits()) + ")");
  return a ^ b;
}

FieldElement reduce(const BitVec& product, const IrreduciblePoly& f) {
  const std::size_t m = f.m;
  if (product.bits() != 2 * m - 1)
    throw DegreeMismatch("reduce: product must have exactly 2m-1 = " +
                         std::to_string(2 * m - 1) + " bits");
  BitVec work = product;
  for (std::size_t i = 2 * m - 2; i >= m; --i) {
    if (!work.test(i)) continue;
    work.set(i, false);
    // x^i = x^(i-m) * x^m == x^(i-m) * r(x) (mod f)
    for (std::size_t j = 0; j < m; ++j)
      if (f.reduction.test(j)) work.set(i - m + j, !work.test(i - m + j));
  }
  FieldElement out(m);
  for (std::size_t j = 0; j < m; ++j)
    if (work.test(j)) out.set(j);
  return out;
}

FieldElement mul_reference(const FieldElement& a, const FieldElement& b,
                           const IrreduciblePoly& f) {
  if (a.bits() != f.m || b.bits() != f.m)
    throw DegreeMismatch("mul_reference: operand width does not match field degree");
  return reduce(clmul(a, b), f);
}

namespace {
IrreduciblePoly make_poly(std::size_t m, std::initializer_list<std::size_t> bits) {
  return IrreduciblePoly::create(m, BitVec::with_bits(bits, m));
}
} // namespace

IrreduciblePoly nist_poly(NistFieldId id) {
  switch (id) {
    case NistFieldId::B163: return make_poly(163, {7, 6, 3, 0});
    case NistFieldId::B233: return make_poly(233, {74, 0});
    case NistFieldId::B283: return make_poly(283, {12, 7, 5, 0});
    case NistFieldId::B409: return make_poly(409, {87, 0});
    case NistFieldId::B571: return make_poly(571, {10, 5, 2, 0});
  }
  throw Error("unknown NIST field id");
}

std::size_t nist_degree(NistFieldId id) {
  switch (id) {
    case NistFieldId::B163: return 163;
    case NistFieldId::B233: return 233;
    case NistFieldId::B283: return 283;
    case NistFieldId::B409: return 409;
    case NistFieldId::B571: return 571;
  }
  throw Error("unknown NIST field id");
}

std::string_view nist_name(NistFieldId id) {
  switch (id) {
    case NistFieldId::B163: return "b163";
    case NistFieldId::B233: return "b233";
    case NistFieldId::B283: return "b283";
    case NistFieldId::B409: return "b409";
    case NistFieldId::B571: return "b571";
  }
  throw Error("unknown NIST field id");
}

const std::array<NistFieldId, 5>& all_nist_fields() {
  static const std::array<NistFieldId, 5> ids = {
      NistFieldId::B163, NistFieldId::B233, NistFieldId::B283,
      NistFieldId::B409, NistFieldId::B571};
  return ids;
}

std::optional<NistFieldId> parse_nist_id(std::string_view name) {
  std::string norm;
  for (char c : name) {
    if (c == '-' || c == '_') continue;
    norm += static_cast<char>(c >= 'A' && c <= 'Z' ? c - 'A' + 'a' : c);
  }
  for (NistFieldId id : all_nist_fields())
    if (norm == nist_name(id)) return id;
  return std::nullopt;
}

FieldElement random_element(std::size_t m, std::mt19937_64& rng) {
  FieldElement e(m);
  for (std::size_t base = 0; base < m; base += 64) {
    std::uint64_t w = rng();
    for (std::size_t k = 0; k < 64 && base + k < m; ++k)
      if ((w >> k) & 1) e.set(base + k);
  }
  return e;
}

std::optional<IrreduciblePoly> default_poly(std::size_t m) {
  switch (m) {
    case 4: return make_poly(4, {1, 0});          // x^4 + x + 1
    case 8: return make_poly(8, {4, 3, 1, 0});    // x^8 + x^4 + x^3 + x + 1
    case 163: return nist_poly(NistFieldId::B163);
    case 233: return nist_poly(NistFieldId::B233);
    case 283: return nist_poly(NistFieldId::B283);
    case 409: return nist_poly(NistFieldId::B409);
    case 571: return nist_poly(NistFieldId::B571);
    default: return std::nullopt;
  }
}

} // namespace gf2m
