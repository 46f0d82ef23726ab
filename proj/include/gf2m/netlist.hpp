#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gf2m/costs.hpp"
#include "gf2m/field.hpp"
#include "gf2m/serial.hpp"

namespace gf2m {

using NetId = std::uint32_t;

enum class GateKind : std::uint8_t { Const0, Const1, And2, Nand2, Nand3, Dff };

std::string_view gate_kind_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

struct Gate {
  GateKind kind = GateKind::Const0;
  std::array<NetId, 3> in{}; // first fanin() entries are valid
  NetId out = 0;
  /// Combinational stage tag: 1..3 for the reduce block (G), 4..6 for the
  /// accumulate block (H); 0 for constants and flip-flops.
  std::uint16_t level = 0;

  int fanin() const;
};

struct NetlistCensus {
  std::size_t and2 = 0;
  std::size_t nand2 = 0;
  std::size_t nand3 = 0;
  std::size_t dff = 0;
  std::size_t xor2 = 0;  // always 0 by construction; reported for Table 1 parity
  std::size_t xnor2 = 0; // "
  std::size_t mux = 0;   // "

  std::size_t nand_total() const { return nand2 + nand3; }
  bool operator==(const NetlistCensus&) const = default;
};

/// Gate-level IR of the two-block serial multiplier: per output bit each
/// block realizes XOR(x, l AND r) as one AND2 plus a NAND3 and three NAND2s
/// (the NAND3 absorbs the conjunction in NAND(x, l AND r)).
///
/// Block G (shift-reduce): x_i = SL-rewired Reg2 bit i-1 (bit 0 tied to 0),
/// l = Reg2 bit m-1, r = f_i baked in as a constant net.
/// Block H (accumulate): x_i = G output bit i, l = b_serial, r = Reg1 bit i.
/// H feeds Reg2's data inputs; Reg1 recirculates the preloaded operand A.
class Netlist {
public:
  static Netlist build(const IrreduciblePoly& f);
  static Netlist from_json(const nlohmann::json& doc);

  std::size_t m() const { return m_; }
  std::size_t net_count() const { return net_count_; }
  const std::vector<Gate>& gates() const { return gates_; }

  // ports
  const std::vector<NetId>& a_in() const { return a_in_; }
  const std::vector<NetId>& f_in() const { return f_in_; }
  NetId b_serial() const { return b_serial_; }
  const std::vector<NetId>& p_out() const { return p_out_; }

  /// Indices into gates() of the two DFF banks.
  const std::vector<std::size_t>& reg1_cells() const { return reg1_cells_; }
  const std::vector<std::size_t>& reg2_cells() const { return reg2_cells_; }

  /// Block G output nets (trace taps); populated on built netlists.
  const std::vector<NetId>& g_out() const { return g_out_; }
  /// Block H output nets, i.e. Reg2's data inputs.
  const std::vector<NetId>& h_out() const { return h_out_; }

  /// Gate evaluation order (indices into gates(), combinational gates only),
  /// topologically sorted; computed once at construction.
  const std::vector<std::size_t>& eval_order() const { return eval_order_; }

  /// Stable-ordered export: gates listed const, block G bit 0..m-1,
  /// block H, then DFFs. Byte-reproducible for identical netlists.
  nlohmann::ordered_json to_json() const;
  std::string to_json_text() const;

private:
  std::size_t m_ = 0;
  std::size_t net_count_ = 0;
  std::vector<Gate> gates_;
  std::vector<NetId> a_in_, f_in_, p_out_, g_out_, h_out_;
  NetId b_serial_ = 0;
  std::vector<std::size_t> reg1_cells_, reg2_cells_;
  std::vector<std::size_t> eval_order_;

  /// Arity, single-driver, driven-input and acyclicity checks; fills
  /// eval_order_. Throws NetlistError on malformed structure.
  void validate_();
};

/// Builds the architecture for GF(2^m); m must equal f.m and be >= 2.
Netlist build_netlist(std::size_t m, const IrreduciblePoly& f);

NetlistCensus census(const Netlist& nl);

/// Net values after one cycle's combinational settle (every net, by NetId).
/// Flip-flop output nets show the state the cycle started from; the H-block
/// output nets therefore equal Reg2's contents right after the cycle's clock.
struct SimVector {
  std::size_t cycle = 0; // 1-based
  std::vector<std::uint8_t> nets;
};

struct SimResult {
  FieldElement product; // Reg2 after m cycles
  std::vector<SimVector> vectors;
};

/// Two-phase cycle-accurate simulation: all combinational gates settle in
/// topological order, then every DFF clocks simultaneously. B enters
/// MSB-first, one bit per cycle (zero once exhausted); requires cycles >= m.
SimResult simulate(const Netlist& nl, const FieldElement& a,
                   const FieldElement& b, std::size_t cycles,
                   bool record_vectors = true);

/// simulate() for exactly m cycles without vector recording.
FieldElement simulate_product(const Netlist& nl, const FieldElement& a,
                              const FieldElement& b);

/// Per-cycle trace read off the simulated netlist (block G and block H
/// output taps), in the same shape the serial engine produces. Requires a
/// built netlist (imported documents carry no taps).
std::vector<TraceRecord> gate_trace(const Netlist& nl, const FieldElement& a,
                                    const FieldElement& b);

/// Register-to-register critical path under the stage model the block
/// structure is specified with: each combinational level settles together,
/// so a level costs the max gate delay within it and the path is the sum
/// over levels. For the two-block netlist this is 2*T_A + 4*T_N.
double critical_path(const Netlist& nl, const GateCostTable& costs);

/// Per-level stage delays, index 0 = level 1. Levels 1..3 sum to one
/// block's delay (max(T_A, T_N) + 2*T_N).
std::vector<double> stage_delays(const Netlist& nl, const GateCostTable& costs);

/// Diagnostic: the literal per-gate longest register-to-register path,
/// ignoring stage grouping. For the two-block netlist this is T_A + 5*T_N
/// (block H's AND2 is driven by Reg1/b_serial, so only one AND2 lies on the
/// Reg2-to-Reg2 path). Not the figure the complexity claims use.
double critical_path_gate_exact(const Netlist& nl, const GateCostTable& costs);

} // namespace gf2m
