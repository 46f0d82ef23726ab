#include "gf2m/costmodel.hpp"

#include <cmath>

namespace gf2m {

const std::array<ArchId, 6>& all_archs() {
  static const std::array<ArchId, 6> ids = {ArchId::Proposed, ArchId::Ref29,
                                            ArchId::Ref25,    ArchId::Ref8,
                                            ArchId::Ref22,    ArchId::Ref33};
  return ids;
}

std::string_view arch_name(ArchId id) {
  switch (id) {
    case ArchId::Proposed: return "Proposed";
    case ArchId::Ref29: return "[29]";
    case ArchId::Ref25: return "[25]";
    case ArchId::Ref8: return "[8]";
    case ArchId::Ref22: return "[22]";
    case ArchId::Ref33: return "[33]";
  }
  throw Error("unknown architecture");
}

std::string_view arch_slug(ArchId id) {
  switch (id) {
    case ArchId::Proposed: return "proposed";
    case ArchId::Ref29: return "ref29";
    case ArchId::Ref25: return "ref25";
    case ArchId::Ref8: return "ref8";
    case ArchId::Ref22: return "ref22";
    case ArchId::Ref33: return "ref33";
  }
  throw Error("unknown architecture");
}

std::optional<ArchId> parse_arch(std::string_view token) {
  for (ArchId id : all_archs())
    if (token == arch_slug(id) || token == arch_name(id)) return id;
  return std::nullopt;
}

long long QuadPoly::eval(std::size_t m) const {
  long long mm = static_cast<long long>(m);
  return (a2 * mm * mm + a1 * mm + a0) / div;
}

const ArchFormula& arch_formula(ArchId id) {
  // and2 / nand2 / nand3 / xor_xnor / mux21 / dff, latency, critical path.
  static const ArchFormula proposed{ArchId::Proposed,
                                    {0, 2, 0}, // AND
                                    {0, 6, 0}, // NAND2 (three XOR levels per bit pair)
                                    {0, 2, 0}, // NAND3 (conjunction absorbed)
                                    {},        // no XOR/XNOR
                                    {},        // no MUX
                                    {0, 2, 0}, // 2m flip-flops
                                    false,
                                    {0, 1, 0},
                                    /*c_ta=*/2, /*c_tn=*/4, 0, 0, 0};
  static const ArchFormula ref29{ArchId::Ref29,
                                 {},        {0, 2, 0}, {},
                                 {0, 2, 0}, // XNORs
                                 {},        {0, 2, 0},
                                 true,
                                 {0, 1, 0},
                                 0, /*c_tn=*/1, 0, /*c_txn=*/2, 0};
  static const ArchFormula ref25{ArchId::Ref25,
                                 {0, 2, 0}, {}, {}, {0, 2, 0}, {}, {0, 3, 0},
                                 false,
                                 {0, 1, 0},
                                 /*c_ta=*/1, 0, /*c_tx=*/1, 0, 0};
  static const ArchFormula ref8{ArchId::Ref8,
                                {1, 0, 0}, {}, {}, {1, 1, -1}, {}, {3, 2, -2},
                                false,
                                {0, 2, -1},
                                /*c_ta=*/1, 0, /*c_tx=*/1, 0, 0};
  static const ArchFormula ref22{ArchId::Ref22,
                                 {2, 2, 0}, {}, {}, {2, 3, 0}, {}, {3, 4, 0},
                                 false,
                                 {0, 1, 2, 2}, // floor((m + 2) / 2)
                                 /*c_ta=*/1, 0, /*c_tx=*/2, 0, 0};
  static const ArchFormula ref33{ArchId::Ref33,
                                 {2, 0, 0}, {}, {}, {2, 0, 0}, {1, 0, 0}, {8, 0, 0},
                                 false,
                                 {0, 2, 0},
                                 /*c_ta=*/1, 0, /*c_tx=*/1, 0, 0};
  switch (id) {
    case ArchId::Proposed: return proposed;
    case ArchId::Ref29: return ref29;
    case ArchId::Ref25: return ref25;
    case ArchId::Ref8: return ref8;
    case ArchId::Ref22: return ref22;
    case ArchId::Ref33: return ref33;
  }
  throw Error("unknown architecture");
}

long long transistor_count(ArchId id, std::size_t m, const GateCostTable& costs,
                           bool strict_nand3) {
  if (m < 2) throw Error("transistor_count requires m >= 2");
  const ArchFormula& f = arch_formula(id);
  long long nand3_price = strict_nand3 ? costs.nand3 : costs.nand2;
  long long xor_price = f.xor_is_xnor ? costs.xnor2 : costs.xor2;
  return f.and2.eval(m) * costs.and2 + f.nand2.eval(m) * costs.nand2 +
         f.nand3.eval(m) * nand3_price + f.xor_xnor.eval(m) * xor_price +
         f.mux21.eval(m) * costs.mux21 + f.dff.eval(m) * costs.dff;
}

Timing timing(ArchId id, std::size_t m, const GateCostTable& costs) {
  if (m < 2) throw Error("timing requires m >= 2");
  const ArchFormula& f = arch_formula(id);
  Timing t;
  t.critical_path_ns = f.c_ta * costs.t_and2 + f.c_tn * costs.t_nand2 +
                       f.c_tx * costs.t_xor2 + f.c_txn * costs.t_xnor2 +
                       f.c_tm * costs.t_mux21;
  t.latency_cycles = f.latency.eval(m);
  t.total_delay_ns = t.critical_path_ns * static_cast<double>(t.latency_cycles);
  return t;
}

namespace {
constexpr std::array<std::size_t, 5> kNistDegrees = {163, 233, 283, 409, 571};

std::optional<std::size_t> nist_column(std::size_t m) {
  for (std::size_t i = 0; i < kNistDegrees.size(); ++i)
    if (kNistDegrees[i] == m) return i;
  return std::nullopt;
}
} // namespace

std::optional<long long> printed_transistors(ArchId id, std::size_t m) {
  auto col = nist_column(m);
  if (!col) return std::nullopt;
  static constexpr std::array<long long, 5> k22 = {1285418, 2620318, 3861818,
                                                   8054846, 15685370};
  static constexpr std::array<long long, 5> k8 = {906910, 1850930, 2729230,
                                                  5696530, 11097934};
  static constexpr std::array<long long, 5> k33 = {2391210, 4886010, 7208010,
                                                   15055290, 29343690};
  static constexpr std::array<long long, 5> k25 = {20538, 29358, 35658, 51534,
                                                   71946};
  static constexpr std::array<long long, 5> k29 = {14996, 21436, 26036, 37628,
                                                   52532};
  static constexpr std::array<long long, 5> kProposed = {16952, 24232, 29432,
                                                         42536, 59384};
  switch (id) {
    case ArchId::Ref22: return k22[*col];
    case ArchId::Ref8: return k8[*col];
    case ArchId::Ref33: return k33[*col];
    case ArchId::Ref25: return k25[*col];
    case ArchId::Ref29: return k29[*col];
    case ArchId::Proposed: return kProposed[*col];
  }
  return std::nullopt;
}

std::string_view printed_row_tag(ArchId id) {
  // The per-degree table printed the ref33 row under the tag "[39]".
  return id == ArchId::Ref33 ? "[39]" : arch_name(id);
}

std::optional<PrintedAdpRow> printed_adp_row(ArchId id) {
  switch (id) {
    case ArchId::Ref33:
      return PrintedAdpRow{0.07, 818, 11.41, 48176928, 5496.0, 99.96, 99.93};
    case ArchId::Ref22:
      return PrintedAdpRow{0.11, 205, 17.93, 21146118, 3791.0, 99.91, 99.89};
    case ArchId::Ref8:
      return PrintedAdpRow{0.07, 817, 11.41, 837629, 95.5, 97.97, 96.02};
    case ArchId::Ref25:
      return PrintedAdpRow{0.07, 163, 11.41, 20538, 2.3, 17.46, std::nullopt};
    case ArchId::Ref29:
      return PrintedAdpRow{0.10, 163, 16.3, 14996, 2.4, std::nullopt, std::nullopt};
    case ArchId::Proposed:
      return PrintedAdpRow{0.14, 163, 22.82, 16952, 3.8, std::nullopt, std::nullopt};
  }
  return std::nullopt;
}

long long CostRow::transistors_effective() const {
  if (!discrepancy) return transistors;
  if (transistors_printed_adp) return *transistors_printed_adp;
  if (transistors_printed_per_m) return *transistors_printed_per_m;
  return transistors;
}

namespace {
CostRow make_row(ArchId id, std::size_t m, const GateCostTable& costs,
                 bool strict, bool for_adp_table) {
  CostRow row;
  row.arch = id;
  row.m = m;
  row.transistors = transistor_count(id, m, costs, strict);
  row.transistors_printed_per_m = printed_transistors(id, m);
  if (for_adp_table && m == 163)
    if (auto printed = printed_adp_row(id)) row.transistors_printed_adp = printed->transistors;
  row.discrepancy = row.transistors_printed_per_m &&
                    *row.transistors_printed_per_m != row.transistors;
  Timing t = timing(id, m, costs);
  row.critical_path_ns = t.critical_path_ns;
  row.latency_cycles = t.latency_cycles;
  return row;
}
} // namespace

CostReport adp_report(std::span<const ArchId> archs,
                      std::span<const std::size_t> ms,
                      const GateCostTable& costs, bool strict_nand3,
                      std::size_t adp_m) {
  if (archs.empty() || ms.empty()) throw Error("adp_report: empty inputs");
  CostReport report;
  report.ms.assign(ms.begin(), ms.end());
  report.adp_m = adp_m;
  report.strict_nand3 = strict_nand3;
  report.costs = costs;
  for (ArchId id : archs) {
    for (std::size_t m : ms)
      report.transistor_rows.push_back(make_row(id, m, costs, strict_nand3, false));
    report.adp_rows.push_back(make_row(id, adp_m, costs, strict_nand3, true));
  }
  return report;
}

const CostRow* CostReport::find(ArchId id, std::size_t m) const {
  for (const CostRow& r : transistor_rows)
    if (r.arch == id && r.m == m) return &r;
  return nullptr;
}

const CostRow* CostReport::adp_row(ArchId id) const {
  for (const CostRow& r : adp_rows)
    if (r.arch == id) return &r;
  return nullptr;
}

std::optional<double> CostReport::reduction_area_pct(ArchId id) const {
  const CostRow* self = adp_row(id);
  const CostRow* prop = adp_row(ArchId::Proposed);
  if (!self || !prop || id == ArchId::Proposed) return std::nullopt;
  double competitor = static_cast<double>(self->transistors_effective());
  double proposed = static_cast<double>(prop->transistors_effective());
  return (competitor - proposed) / competitor * 100.0;
}

std::optional<double> CostReport::reduction_adp_pct(ArchId id) const {
  const CostRow* self = adp_row(id);
  const CostRow* prop = adp_row(ArchId::Proposed);
  if (!self || !prop || id == ArchId::Proposed) return std::nullopt;
  double competitor = self->adp_paper();
  double proposed = prop->adp_paper();
  return (competitor - proposed) / competitor * 100.0;
}

double CostReport::proposed_overhead_vs_ref29_pct() const {
  const CostRow* prop = adp_row(ArchId::Proposed);
  const CostRow* r29 = adp_row(ArchId::Ref29);
  if (!prop || !r29) throw Error("report lacks the proposed/[29] rows");
  double p = static_cast<double>(prop->transistors);
  double r = static_cast<double>(r29->transistors);
  return (p - r) / p * 100.0;
}

NetlistConsistency verify_against_netlist(const Netlist& nl,
                                          const GateCostTable& costs) {
  NetlistConsistency rec;
  rec.m = nl.m();
  rec.counted = census(nl);
  const NetlistCensus& c = rec.counted;
  rec.census_transistors_default =
      static_cast<long long>(c.and2) * costs.and2 +
      static_cast<long long>(c.nand_total()) * costs.nand2 +
      static_cast<long long>(c.dff) * costs.dff;
  rec.census_transistors_strict =
      static_cast<long long>(c.and2) * costs.and2 +
      static_cast<long long>(c.nand2) * costs.nand2 +
      static_cast<long long>(c.nand3) * costs.nand3 +
      static_cast<long long>(c.dff) * costs.dff;
  rec.formula_transistors_default =
      transistor_count(ArchId::Proposed, rec.m, costs, false);
  rec.formula_transistors_strict =
      transistor_count(ArchId::Proposed, rec.m, costs, true);
  rec.netlist_critical_ns = critical_path(nl, costs);
  rec.formula_critical_ns = timing(ArchId::Proposed, rec.m, costs).critical_path_ns;

  std::string diff;
  auto expect = [&diff](std::string_view what, long long got, long long want) {
    if (got != want)
      diff += std::string(what) + ": census " + std::to_string(got) +
              " vs formula " + std::to_string(want) + "\n";
  };
  const long long mm = static_cast<long long>(rec.m);
  expect("AND2", static_cast<long long>(c.and2), 2 * mm);
  expect("NAND total", static_cast<long long>(c.nand_total()), 8 * mm);
  expect("NAND3", static_cast<long long>(c.nand3), 2 * mm);
  expect("NAND2", static_cast<long long>(c.nand2), 6 * mm);
  expect("DFF", static_cast<long long>(c.dff), 2 * mm);
  expect("XOR/XNOR", static_cast<long long>(c.xor2 + c.xnor2), 0);
  expect("MUX", static_cast<long long>(c.mux), 0);
  expect("transistors (default pricing)", rec.census_transistors_default,
         rec.formula_transistors_default);
  expect("transistors (strict NAND3 pricing)", rec.census_transistors_strict,
         rec.formula_transistors_strict);
  if (std::abs(rec.netlist_critical_ns - rec.formula_critical_ns) > 1e-9)
    diff += "critical path: netlist " + std::to_string(rec.netlist_critical_ns) +
            " vs formula " + std::to_string(rec.formula_critical_ns) + "\n";
  rec.ok = diff.empty();
  rec.diff = std::move(diff);
  return rec;
}

} // namespace gf2m
