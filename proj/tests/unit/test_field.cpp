#include <doctest.h>

#include <random>
#include <set>

#include "gf2m/field.hpp"
#include "oracle.hpp"

using namespace gf2m;
using testutil::oracle_mul;
using testutil::oracle_reduce;

namespace {
const IrreduciblePoly kF4 = *default_poly(4);   // x^4 + x + 1
const IrreduciblePoly kF8 = *default_poly(8);   // x^8 + x^4 + x^3 + x + 1

FieldElement el4(std::uint64_t v) { return BitVec::from_u64(v, 4); }
} // namespace

TEST_CASE("add is coefficient-wise XOR") {
  CHECK(add(el4(0x0), el4(0xB)) == el4(0xB));
  CHECK(add(el4(0xB), el4(0xB)) == el4(0x0));
  CHECK(add(el4(0b1011), el4(0b0110)) == el4(0b1101));
  CHECK_THROWS_AS(add(el4(1), BitVec::from_u64(1, 8)), DegreeMismatch);
}

TEST_CASE("reduce folds high bits with the reduction vector") {
  // x^4 == x + 1
  BitVec p(7);
  p.set(4);
  CHECK(reduce(p, kF4) == el4(0b0011));
  CHECK(reduce(p, kF4) == oracle_reduce(p, kF4));

  // degree < m passes through
  BitVec q(7);
  q.set(2);
  q.set(0);
  CHECK(reduce(q, kF4) == el4(0b0101));

  // x^6 == x^3 + x^2
  BitVec r(7);
  r.set(6);
  CHECK(reduce(r, kF4) == el4(0b1100));
  CHECK(reduce(r, kF4) == oracle_reduce(r, kF4));

  CHECK_THROWS_AS(reduce(BitVec(6), kF4), DegreeMismatch);
}

TEST_CASE("reduce is idempotent on reduced values") {
  for (std::uint64_t v = 0; v < 16; ++v) {
    BitVec widened(7);
    for (std::size_t i = 0; i < 4; ++i)
      if ((v >> i) & 1) widened.set(i);
    CHECK(reduce(widened, kF4) == el4(v));
  }
}

TEST_CASE("mul_reference identities and the worked GF(2^4) product") {
  CHECK(mul_reference(el4(1), el4(0xB), kF4) == el4(0xB));
  CHECK(mul_reference(el4(0), el4(0xB), kF4) == el4(0));
  // frozen from the coefficient-array oracle
  FieldElement expected = el4(0b1101);
  CHECK(oracle_mul(el4(0b1011), el4(0b1100), kF4) == expected);
  CHECK(mul_reference(el4(0b1011), el4(0b1100), kF4) == expected);
  CHECK_THROWS_AS(mul_reference(el4(1), BitVec::from_u64(1, 8), kF4),
                  DegreeMismatch);
}

TEST_CASE("mul_reference matches the oracle exhaustively on GF(2^4)") {
  for (std::uint64_t a = 0; a < 16; ++a)
    for (std::uint64_t b = 0; b < 16; ++b)
      CHECK(mul_reference(el4(a), el4(b), kF4) == oracle_mul(el4(a), el4(b), kF4));
}

TEST_CASE("mul_reference matches the oracle on random GF(2^8) and B-163 pairs") {
  std::mt19937_64 rng(0x5eed);
  for (int i = 0; i < 500; ++i) {
    FieldElement a = random_element(8, rng);
    FieldElement b = random_element(8, rng);
    CHECK(mul_reference(a, b, kF8) == oracle_mul(a, b, kF8));
  }
  IrreduciblePoly f163 = nist_poly(NistFieldId::B163);
  for (int i = 0; i < 50; ++i) {
    FieldElement a = random_element(163, rng);
    FieldElement b = random_element(163, rng);
    CHECK(mul_reference(a, b, f163) == oracle_mul(a, b, f163));
  }
}

TEST_CASE("field axioms hold exhaustively on GF(2^4)") {
  for (std::uint64_t a = 0; a < 16; ++a) {
    for (std::uint64_t b = 0; b < 16; ++b) {
      CHECK(mul_reference(el4(a), el4(b), kF4) ==
            mul_reference(el4(b), el4(a), kF4));
      for (std::uint64_t c = 0; c < 16; ++c) {
        FieldElement bc = mul_reference(el4(b), el4(c), kF4);
        FieldElement ab = mul_reference(el4(a), el4(b), kF4);
        CHECK(mul_reference(el4(a), bc, kF4) == mul_reference(ab, el4(c), kF4));
        CHECK(mul_reference(el4(a), add(el4(b), el4(c)), kF4) ==
              add(mul_reference(el4(a), el4(b), kF4),
                  mul_reference(el4(a), el4(c), kF4)));
      }
    }
  }
}

TEST_CASE("every nonzero element of GF(2^4) multiplies bijectively") {
  for (std::uint64_t a = 1; a < 16; ++a) {
    std::set<std::uint64_t> image;
    for (std::uint64_t b = 0; b < 16; ++b)
      image.insert(mul_reference(el4(a), el4(b), kF4).to_u64());
    CHECK(image.size() == 16);
  }
}

TEST_CASE("NIST catalog polynomials") {
  CHECK(nist_poly(NistFieldId::B163).m == 163);
  CHECK(nist_poly(NistFieldId::B163).reduction ==
        BitVec::with_bits({7, 6, 3, 0}, 163));
  CHECK(nist_poly(NistFieldId::B233).reduction ==
        BitVec::with_bits({74, 0}, 233));
  for (NistFieldId id : all_nist_fields()) {
    IrreduciblePoly f = nist_poly(id);
    CHECK(f.m == nist_degree(id));
    CHECK(f.reduction.test(0)); // f_0 = 1
  }
  CHECK(parse_nist_id("b163") == NistFieldId::B163);
  CHECK(parse_nist_id("B-409") == NistFieldId::B409);
  CHECK(!parse_nist_id("b999"));
}

TEST_CASE("catalog polynomials pass the irreducibility check up to m = 283") {
  CHECK(testutil::rabin_irreducible(kF4));
  CHECK(testutil::rabin_irreducible(kF8));
  CHECK(testutil::rabin_irreducible(nist_poly(NistFieldId::B163)));
  CHECK(testutil::rabin_irreducible(nist_poly(NistFieldId::B233)));
  CHECK(testutil::rabin_irreducible(nist_poly(NistFieldId::B283)));
  // negative control: x^4 + x^2 + 1 = (x^2 + x + 1)^2
  CHECK(!testutil::rabin_irreducible(
      IrreduciblePoly::create(4, BitVec::with_bits({2, 0}, 4))));
}

TEST_CASE("IrreduciblePoly construction enforces f_0 = 1") {
  CHECK_THROWS(IrreduciblePoly::create(4, BitVec::with_bits({1}, 4)));
  CHECK_THROWS(IrreduciblePoly::from_hex(4, "2"));
  CHECK(IrreduciblePoly::from_hex(4, "3").reduction == BitVec::with_bits({1, 0}, 4));
}

TEST_CASE("hex element encoding") {
  CHECK(el4(0xB).to_hex() == "b");
  CHECK(BitVec::from_hex("b", 4) == el4(0xB));
  CHECK(BitVec::from_hex("B", 4) == el4(0xB));
  CHECK(BitVec::from_hex("0b", 4) == el4(0xB)); // leading zeros allowed

  // padded to ceil(m/4) digits
  CHECK(nist_poly(NistFieldId::B163).reduction.to_hex() ==
        std::string(39, '0') + "c9");
  CHECK(BitVec(5).to_hex() == "00");

  // rejects coefficients at index >= m rather than truncating
  CHECK_THROWS_AS(BitVec::from_hex("20", 4), ParseError);
  CHECK_THROWS_AS(BitVec::from_hex("1g", 8), ParseError);
  CHECK_THROWS_AS(BitVec::from_hex("", 8), ParseError);

  std::mt19937_64 rng(7);
  for (int i = 0; i < 100; ++i) {
    FieldElement e = random_element(233, rng);
    CHECK(BitVec::from_hex(e.to_hex(), 233) == e);
    CHECK(e.to_hex().size() == (233 + 3) / 4);
  }
}

TEST_CASE("default_poly catalog") {
  CHECK(default_poly(4)->reduction == BitVec::with_bits({1, 0}, 4));
  CHECK(default_poly(8)->reduction == BitVec::with_bits({4, 3, 1, 0}, 8));
  CHECK(default_poly(571)->m == 571);
  CHECK(!default_poly(5));
}
