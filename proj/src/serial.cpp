#include "gf2m/serial.hpp"

namespace gf2m {

namespace {

inline bool nand(bool a, bool b) { return !(a && b); }

// XOR(x, l AND r), bit-sliced, with the XOR either native or via the
// 4-NAND identity. Shared by the shift-reduce and accumulate stages:
// shift-reduce uses (l, r) = (p_top, f_i), accumulate uses (b_bit, a_i).
FieldElement xor_and_slice(const FieldElement& x, bool l, const FieldElement& r,
                           XorMode mode) {
  const std::size_t m = r.bits();
  FieldElement out(m);
  for (std::size_t i = 0; i < m; ++i) {
    bool g = l && r.test(i);
    bool o = mode == XorMode::NandOnly ? nand_xor(x.test(i), g)
                                       : (x.test(i) != g);
    if (o) out.set(i);
  }
  return out;
}

FieldElement xtimes_reduce_mode(const FieldElement& p, const IrreduciblePoly& f,
                                XorMode mode) {
  if (p.bits() != f.m)
    throw DegreeMismatch("xtimes_reduce: operand width does not match field degree");
  return xor_and_slice(p.shifted_up(), p.test(f.m - 1), f.reduction, mode);
}

FieldElement accumulate_mode(const FieldElement& p, bool b_bit,
                             const FieldElement& a, XorMode mode) {
  if (p.bits() != a.bits())
    throw DegreeMismatch("accumulate: operands from different fields");
  return xor_and_slice(p, b_bit, a, mode);
}

} // namespace

bool nand_xor(bool p_bit, bool g_bit) {
  bool t = nand(p_bit, g_bit);
  return nand(nand(p_bit, t), nand(t, g_bit));
}

FieldElement xtimes_reduce(const FieldElement& p, const IrreduciblePoly& f) {
  return xtimes_reduce_mode(p, f, XorMode::Plain);
}

FieldElement accumulate(const FieldElement& p, bool b_bit, const FieldElement& a) {
  return accumulate_mode(p, b_bit, a, XorMode::Plain);
}

SerialProduct mul_serial(const FieldElement& a, const FieldElement& b,
                         const IrreduciblePoly& f, XorMode mode) {
  const std::size_t m = f.m;
  if (a.bits() != m || b.bits() != m)
    throw DegreeMismatch("mul_serial: operand width does not match field degree");

  SerialProduct out{FieldElement(m), {}};
  out.trace.reserve(m);
  FieldElement p(m);
  for (std::size_t k = 1; k <= m; ++k) {
    bool b_bit = b.test(m - k);
    FieldElement after_g = xtimes_reduce_mode(p, f, mode);
    FieldElement after_h = accumulate_mode(after_g, b_bit, a, mode);
    out.trace.push_back(TraceRecord{k, b_bit, after_g, after_h});
    p = after_h;
  }
  out.product = p;
  return out;
}

} // namespace gf2m
