#include <algorithm>

#include "gf2m/netlist.hpp"

namespace gf2m {

namespace {

inline std::uint8_t eval_gate(const Gate& g, const std::vector<std::uint8_t>& v) {
  switch (g.kind) {
    case GateKind::Const0: return 0;
    case GateKind::Const1: return 1;
    case GateKind::And2: return v[g.in[0]] & v[g.in[1]];
    case GateKind::Nand2: return !(v[g.in[0]] & v[g.in[1]]);
    case GateKind::Nand3: return !(v[g.in[0]] & v[g.in[1]] & v[g.in[2]]);
    case GateKind::Dff: break;
  }
  throw NetlistError("flip-flops are not combinational");
}

double gate_delay(GateKind kind, const GateCostTable& costs) {
  switch (kind) {
    case GateKind::And2: return costs.t_and2;
    case GateKind::Nand2:
    case GateKind::Nand3: return costs.t_nand2; // every NAND level at T_N
    case GateKind::Const0:
    case GateKind::Const1:
    case GateKind::Dff: return 0.0;
  }
  throw NetlistError("unknown gate kind");
}

} // namespace

SimResult simulate(const Netlist& nl, const FieldElement& a,
                   const FieldElement& b, std::size_t cycles,
                   bool record_vectors) {
  const std::size_t m = nl.m();
  if (a.bits() != m || b.bits() != m)
    throw DegreeMismatch("simulate: operand width does not match the netlist");
  if (cycles < m)
    throw NetlistError("simulate: need at least m cycles for the product");

  const auto& gates = nl.gates();
  // Register state, indexed like gates(); only DFF slots are used.
  std::vector<std::uint8_t> state(gates.size(), 0);
  for (std::size_t i = 0; i < m; ++i)
    state[nl.reg1_cells()[i]] = a.test(i) ? 1 : 0;

  std::vector<std::uint8_t> vals(nl.net_count(), 0);
  SimResult result{FieldElement(m), {}};
  if (record_vectors) result.vectors.reserve(cycles);

  for (std::size_t k = 1; k <= cycles; ++k) {
    // Phase 1: combinational settle.
    for (std::size_t gi = 0; gi < gates.size(); ++gi)
      if (gates[gi].kind == GateKind::Dff) vals[gates[gi].out] = state[gi];
    vals[nl.b_serial()] = (k <= m && b.test(m - k)) ? 1 : 0;
    for (std::size_t gi : nl.eval_order())
      vals[gates[gi].out] = eval_gate(gates[gi], vals);

    if (record_vectors) result.vectors.push_back(SimVector{k, vals});

    // Phase 2: simultaneous clock edge.
    for (std::size_t gi = 0; gi < gates.size(); ++gi)
      if (gates[gi].kind == GateKind::Dff) state[gi] = vals[gates[gi].in[0]];

    if (k == m)
      for (std::size_t i = 0; i < m; ++i)
        if (state[nl.reg2_cells()[i]]) result.product.set(i);
  }
  return result;
}

FieldElement simulate_product(const Netlist& nl, const FieldElement& a,
                              const FieldElement& b) {
  return simulate(nl, a, b, nl.m(), /*record_vectors=*/false).product;
}

std::vector<TraceRecord> gate_trace(const Netlist& nl, const FieldElement& a,
                                    const FieldElement& b) {
  const std::size_t m = nl.m();
  if (nl.g_out().size() != m || nl.h_out().size() != m)
    throw NetlistError("gate_trace requires a built netlist with block taps");
  SimResult run = simulate(nl, a, b, m, /*record_vectors=*/true);
  std::vector<TraceRecord> trace;
  trace.reserve(m);
  for (std::size_t k = 1; k <= m; ++k) {
    const SimVector& vec = run.vectors[k - 1];
    TraceRecord rec{k, vec.nets[nl.b_serial()] != 0, FieldElement(m),
                    FieldElement(m)};
    for (std::size_t i = 0; i < m; ++i) {
      if (vec.nets[nl.g_out()[i]]) rec.after_g.set(i);
      if (vec.nets[nl.h_out()[i]]) rec.after_h.set(i);
    }
    trace.push_back(std::move(rec));
  }
  return trace;
}

std::vector<double> stage_delays(const Netlist& nl, const GateCostTable& costs) {
  std::uint16_t max_level = 0;
  for (const Gate& g : nl.gates()) max_level = std::max(max_level, g.level);
  std::vector<double> stages(max_level, 0.0);
  for (const Gate& g : nl.gates())
    if (g.level > 0)
      stages[g.level - 1] = std::max(stages[g.level - 1], gate_delay(g.kind, costs));
  return stages;
}

double critical_path(const Netlist& nl, const GateCostTable& costs) {
  double total = 0.0;
  for (double d : stage_delays(nl, costs)) total += d;
  return total;
}

double critical_path_gate_exact(const Netlist& nl, const GateCostTable& costs) {
  const auto& gates = nl.gates();
  std::vector<double> arrival(nl.net_count(), 0.0);
  for (std::size_t gi : nl.eval_order()) {
    const Gate& g = gates[gi];
    double in_max = 0.0;
    for (int k = 0; k < g.fanin(); ++k)
      in_max = std::max(in_max, arrival[g.in[static_cast<std::size_t>(k)]]);
    arrival[g.out] = in_max + gate_delay(g.kind, costs);
  }
  double worst = 0.0;
  for (const Gate& g : gates)
    if (g.kind == GateKind::Dff) worst = std::max(worst, arrival[g.in[0]]);
  return worst;
}

} // namespace gf2m
