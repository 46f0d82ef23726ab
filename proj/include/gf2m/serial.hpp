#pragma once

#include <vector>

#include "gf2m/field.hpp"

namespace gf2m {

/// How the bitwise XORs inside the serial multiplier are evaluated.
/// NandOnly routes every XOR through the 4-NAND identity; the two modes
/// are an exact logic identity and must produce bit-identical traces.
enum class XorMode { Plain, NandOnly };

/// One cycle of the serial multiplier, MSB of B first.
/// after_g: partial product after the shift-and-reduce stage.
/// after_h: after the conditional accumulate, i.e. the new Reg2 contents.
struct TraceRecord {
  std::size_t cycle = 0; // 1-based
  bool b_bit = false;
  FieldElement after_g;
  FieldElement after_h;

  bool operator==(const TraceRecord&) const = default;
};

/// XOR built exclusively from the 4-NAND composition
/// t = NAND(p,g); out = NAND(NAND(p,t), NAND(t,g)).
bool nand_xor(bool p_bit, bool g_bit);

/// (p(x) * x) mod f: one shift up plus a conditional add of the reduction
/// vector when the dropped top coefficient was set.
FieldElement xtimes_reduce(const FieldElement& p, const IrreduciblePoly& f);

/// p + b_bit * a: conditional accumulation of the parallel operand.
FieldElement accumulate(const FieldElement& p, bool b_bit, const FieldElement& a);

struct SerialProduct {
  FieldElement product;
  std::vector<TraceRecord> trace; // exactly m records
};

/// MSB-first interleaved serial multiplication: P starts at 0 and each of the
/// m cycles applies shift-reduce then accumulate with the next bit of B.
/// The result equals mul_reference in both XOR modes.
SerialProduct mul_serial(const FieldElement& a, const FieldElement& b,
                         const IrreduciblePoly& f, XorMode mode = XorMode::Plain);

} // namespace gf2m
