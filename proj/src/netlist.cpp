#include "gf2m/netlist.hpp"

#include <algorithm>

namespace gf2m {

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::Const0: return "CONST0";
    case GateKind::Const1: return "CONST1";
    case GateKind::And2: return "AND2";
    case GateKind::Nand2: return "NAND2";
    case GateKind::Nand3: return "NAND3";
    case GateKind::Dff: return "DFF";
  }
  throw NetlistError("unknown gate kind");
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
  if (name == "CONST0") return GateKind::Const0;
  if (name == "CONST1") return GateKind::Const1;
  if (name == "AND2") return GateKind::And2;
  if (name == "NAND2") return GateKind::Nand2;
  if (name == "NAND3") return GateKind::Nand3;
  if (name == "DFF") return GateKind::Dff;
  return std::nullopt;
}

int Gate::fanin() const {
  switch (kind) {
    case GateKind::Const0:
    case GateKind::Const1: return 0;
    case GateKind::Dff: return 1;
    case GateKind::And2:
    case GateKind::Nand2: return 2;
    case GateKind::Nand3: return 3;
  }
  throw NetlistError("unknown gate kind");
}

Netlist Netlist::build(const IrreduciblePoly& f) {
  const std::size_t m = f.m;
  if (m < 2) throw NetlistError("netlist construction requires m >= 2");
  if (!f.reduction.test(0))
    throw NetlistError("netlist construction requires f_0 = 1");

  Netlist nl;
  nl.m_ = m;

  // Net layout: const0, const1, Reg1 Q bank, Reg2 Q bank, b_serial,
  // then one net per combinational gate output.
  const NetId const0 = 0;
  const NetId const1 = 1;
  auto reg1_q = [](std::size_t i) { return static_cast<NetId>(2 + i); };
  auto reg2_q = [m](std::size_t i) { return static_cast<NetId>(2 + m + i); };
  nl.b_serial_ = static_cast<NetId>(2 + 2 * m);
  NetId next = static_cast<NetId>(3 + 2 * m);
  auto fresh = [&next]() { return next++; };

  nl.gates_.push_back(Gate{GateKind::Const0, {}, const0, 0});
  nl.gates_.push_back(Gate{GateKind::Const1, {}, const1, 0});

  for (std::size_t i = 0; i < m; ++i) {
    nl.a_in_.push_back(reg1_q(i));
    nl.p_out_.push_back(reg2_q(i));
    nl.f_in_.push_back(f.reduction.test(i) ? const1 : const0);
  }

  // One XOR(x, l AND r) slice: AND2 for the visible conjunction, NAND3
  // absorbing it inside NAND(x, l AND r), then the remaining two NAND
  // levels of the 4-NAND XOR.
  auto emit_block_bit = [&](NetId x, NetId l, NetId r, std::uint16_t base_level) {
    NetId g = fresh();
    NetId t = fresh();
    NetId u1 = fresh();
    NetId u2 = fresh();
    NetId out = fresh();
    nl.gates_.push_back(Gate{GateKind::And2, {l, r}, g, base_level});
    nl.gates_.push_back(Gate{GateKind::Nand3, {x, l, r}, t, base_level});
    nl.gates_.push_back(Gate{GateKind::Nand2, {x, t}, u1,
                             static_cast<std::uint16_t>(base_level + 1)});
    nl.gates_.push_back(Gate{GateKind::Nand2, {t, g}, u2,
                             static_cast<std::uint16_t>(base_level + 1)});
    nl.gates_.push_back(Gate{GateKind::Nand2, {u1, u2}, out,
                             static_cast<std::uint16_t>(base_level + 2)});
    return out;
  };

  // Block G: SL block is rewiring only -- bit i reads Reg2 bit i-1,
  // bit 0 reads constant 0; l = Reg2 top bit, r = f_i constant.
  const NetId p_top = reg2_q(m - 1);
  for (std::size_t i = 0; i < m; ++i) {
    NetId x = i == 0 ? const0 : reg2_q(i - 1);
    nl.g_out_.push_back(emit_block_bit(x, p_top, nl.f_in_[i], 1));
  }

  // Block H: x = G output, l = b_serial, r = Reg1 bit.
  for (std::size_t i = 0; i < m; ++i)
    nl.h_out_.push_back(emit_block_bit(nl.g_out_[i], nl.b_serial_, reg1_q(i), 4));

  // Reg1 recirculates (loaded before cycle 1); Reg2 captures block H.
  for (std::size_t i = 0; i < m; ++i) {
    nl.reg1_cells_.push_back(nl.gates_.size());
    nl.gates_.push_back(Gate{GateKind::Dff, {reg1_q(i)}, reg1_q(i), 0});
  }
  for (std::size_t i = 0; i < m; ++i) {
    nl.reg2_cells_.push_back(nl.gates_.size());
    nl.gates_.push_back(Gate{GateKind::Dff, {nl.h_out_[i]}, reg2_q(i), 0});
  }

  nl.net_count_ = next;
  nl.validate_();
  return nl;
}

Netlist build_netlist(std::size_t m, const IrreduciblePoly& f) {
  if (m != f.m)
    throw NetlistError("requested degree does not match the reduction polynomial");
  return Netlist::build(f);
}

void Netlist::validate_() {
  std::vector<int> driver(net_count_, -1);
  for (std::size_t gi = 0; gi < gates_.size(); ++gi) {
    const Gate& g = gates_[gi];
    if (g.out >= net_count_) throw NetlistError("gate output net out of range");
    for (int k = 0; k < g.fanin(); ++k)
      if (g.in[static_cast<std::size_t>(k)] >= net_count_)
        throw NetlistError("gate input net out of range");
    if (driver[g.out] != -1)
      throw NetlistError("net " + std::to_string(g.out) + " has two drivers");
    driver[g.out] = static_cast<int>(gi);
  }
  if (b_serial_ >= net_count_) throw NetlistError("b_serial net out of range");

  // Every net must be driven by a gate or be the serial input. (DFF outputs
  // count as driven; they are cut points for the combinational sort.)
  for (NetId n = 0; n < net_count_; ++n)
    if (driver[n] == -1 && n != b_serial_)
      throw NetlistError("net " + std::to_string(n) + " has no driver");

  // Kahn over combinational gates only; DFF outputs and the serial input are
  // sources. Anything left unplaced sits on a combinational cycle.
  std::vector<int> pending(gates_.size(), 0);
  std::vector<std::vector<std::size_t>> consumers(net_count_);
  std::vector<std::size_t> ready;
  for (std::size_t gi = 0; gi < gates_.size(); ++gi) {
    const Gate& g = gates_[gi];
    if (g.kind == GateKind::Dff) continue;
    for (int k = 0; k < g.fanin(); ++k) {
      NetId n = g.in[static_cast<std::size_t>(k)];
      int d = driver[n];
      if (n == b_serial_ || (d >= 0 && gates_[static_cast<std::size_t>(d)].kind ==
                                           GateKind::Dff))
        continue;
      ++pending[gi];
      consumers[n].push_back(gi);
    }
    if (pending[gi] == 0) ready.push_back(gi);
  }
  eval_order_.clear();
  std::size_t comb_count = 0;
  for (const Gate& g : gates_)
    if (g.kind != GateKind::Dff) ++comb_count;
  while (!ready.empty()) {
    std::size_t gi = ready.back();
    ready.pop_back();
    eval_order_.push_back(gi);
    for (std::size_t ci : consumers[gates_[gi].out])
      if (--pending[ci] == 0) ready.push_back(ci);
  }
  if (eval_order_.size() != comb_count)
    throw NetlistError("combinational cycle detected");

  // Stable evaluation independent of Kahn's visiting order.
  std::sort(eval_order_.begin(), eval_order_.end(),
            [this](std::size_t a, std::size_t b) {
              if (gates_[a].level != gates_[b].level)
                return gates_[a].level < gates_[b].level;
              return a < b;
            });
  // Level tags must be consistent with the topology.
  std::vector<std::uint16_t> net_level(net_count_, 0);
  for (std::size_t gi : eval_order_) {
    const Gate& g = gates_[gi];
    if (g.kind == GateKind::Const0 || g.kind == GateKind::Const1) continue;
    for (int k = 0; k < g.fanin(); ++k) {
      NetId n = g.in[static_cast<std::size_t>(k)];
      int d = driver[n];
      bool comb_driver = d >= 0 &&
                         gates_[static_cast<std::size_t>(d)].kind != GateKind::Dff &&
                         gates_[static_cast<std::size_t>(d)].fanin() > 0;
      if (comb_driver && net_level[n] >= g.level)
        throw NetlistError("gate level tags are not monotone along wires");
    }
    net_level[g.out] = g.level;
  }
}

NetlistCensus census(const Netlist& nl) {
  NetlistCensus c;
  for (const Gate& g : nl.gates()) {
    switch (g.kind) {
      case GateKind::And2: ++c.and2; break;
      case GateKind::Nand2: ++c.nand2; break;
      case GateKind::Nand3: ++c.nand3; break;
      case GateKind::Dff: ++c.dff; break;
      case GateKind::Const0:
      case GateKind::Const1: break;
    }
  }
  return c;
}

nlohmann::ordered_json Netlist::to_json() const {
  nlohmann::ordered_json doc;
  doc["m"] = m_;
  doc["nets"] = net_count_;
  nlohmann::ordered_json gates = nlohmann::ordered_json::array();
  for (std::size_t gi = 0; gi < gates_.size(); ++gi) {
    const Gate& g = gates_[gi];
    nlohmann::ordered_json jg;
    jg["id"] = gi;
    jg["kind"] = gate_kind_name(g.kind);
    nlohmann::ordered_json ins = nlohmann::ordered_json::array();
    for (int k = 0; k < g.fanin(); ++k) ins.push_back(g.in[static_cast<std::size_t>(k)]);
    jg["inputs"] = std::move(ins);
    jg["output"] = g.out;
    jg["level"] = g.level;
    gates.push_back(std::move(jg));
  }
  doc["gates"] = std::move(gates);
  doc["ports"] = nlohmann::ordered_json{
      {"a", a_in_}, {"f", f_in_}, {"b_serial", b_serial_}, {"p_out", p_out_}};
  doc["registers"] = nlohmann::ordered_json::array(
      {nlohmann::ordered_json{{"name", "reg1"}, {"gates", reg1_cells_}},
       nlohmann::ordered_json{{"name", "reg2"}, {"gates", reg2_cells_}}});
  return doc;
}

std::string Netlist::to_json_text() const { return to_json().dump(2) + "\n"; }

Netlist Netlist::from_json(const nlohmann::json& doc) {
  try {
    Netlist nl;
    nl.m_ = doc.at("m").get<std::size_t>();
    nl.net_count_ = doc.at("nets").get<std::size_t>();
    for (const auto& jg : doc.at("gates")) {
      Gate g;
      auto kind = gate_kind_from_name(jg.at("kind").get<std::string>());
      if (!kind) throw NetlistError("unknown gate kind in document");
      g.kind = *kind;
      const auto& ins = jg.at("inputs");
      if (static_cast<int>(ins.size()) != g.fanin())
        throw NetlistError("gate arity does not match its kind");
      for (std::size_t k = 0; k < ins.size(); ++k)
        g.in[k] = ins[k].get<NetId>();
      g.out = jg.at("output").get<NetId>();
      g.level = jg.at("level").get<std::uint16_t>();
      nl.gates_.push_back(g);
    }
    const auto& ports = doc.at("ports");
    nl.a_in_ = ports.at("a").get<std::vector<NetId>>();
    nl.f_in_ = ports.at("f").get<std::vector<NetId>>();
    nl.b_serial_ = ports.at("b_serial").get<NetId>();
    nl.p_out_ = ports.at("p_out").get<std::vector<NetId>>();
    for (const auto& reg : doc.at("registers")) {
      auto cells = reg.at("gates").get<std::vector<std::size_t>>();
      for (std::size_t gi : cells)
        if (gi >= nl.gates_.size() || nl.gates_[gi].kind != GateKind::Dff)
          throw NetlistError("register list does not point at DFF gates");
      if (reg.at("name") == "reg1")
        nl.reg1_cells_ = std::move(cells);
      else if (reg.at("name") == "reg2")
        nl.reg2_cells_ = std::move(cells);
    }
    if (nl.a_in_.size() != nl.m_ || nl.p_out_.size() != nl.m_ ||
        nl.f_in_.size() != nl.m_)
      throw NetlistError("port widths do not match m");
    if (nl.reg1_cells_.size() != nl.m_ || nl.reg2_cells_.size() != nl.m_)
      throw NetlistError("register banks must hold m cells each");
    nl.validate_();
    return nl;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed netlist document: ") + e.what());
  }
}

} // namespace gf2m
