#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gf2m/costs.hpp"
#include "gf2m/netlist.hpp"

namespace gf2m {

/// The six architectures of the complexity comparison. Competitors are
/// modeled by their published gate-count/latency/critical-path formulas
/// only; the proposed two-block design also exists as a real netlist.
enum class ArchId { Proposed, Ref29, Ref25, Ref8, Ref22, Ref33 };

const std::array<ArchId, 6>& all_archs();
std::string_view arch_name(ArchId id);  // display tag: "Proposed", "[29]", ...
std::string_view arch_slug(ArchId id);  // cli token: "proposed", "ref29", ...
std::optional<ArchId> parse_arch(std::string_view token);

/// a2*m^2 + a1*m + a0, all over an integer divisor (floor).
struct QuadPoly {
  long long a2 = 0;
  long long a1 = 0;
  long long a0 = 0;
  long long div = 1;

  long long eval(std::size_t m) const;
  bool zero() const { return a2 == 0 && a1 == 0 && a0 == 0; }
};

/// Space/time complexity of one architecture: per-gate-kind count
/// polynomials, a latency polynomial, and the critical path as a formal
/// sum of gate-delay symbols.
struct ArchFormula {
  ArchId id{};
  QuadPoly and2, nand2, nand3, xor_xnor, mux21, dff;
  bool xor_is_xnor = false; // the XOR/XNOR column realized with XNORs
  QuadPoly latency;
  int c_ta = 0, c_tn = 0, c_tx = 0, c_txn = 0, c_tm = 0;
};

const ArchFormula& arch_formula(ArchId id);

/// Total transistors of an architecture at degree m. Default mode prices
/// every NAND of the proposed design at the 2-input NAND cost (104m total),
/// matching the published totals; strict mode prices the 2m NAND3s at their
/// own 8-transistor cost (112m), a labeled variant.
long long transistor_count(ArchId id, std::size_t m, const GateCostTable& costs,
                           bool strict_nand3 = false);

struct Timing {
  double critical_path_ns = 0.0;
  long long latency_cycles = 0;
  double total_delay_ns = 0.0; // latency * critical path
};

Timing timing(ArchId id, std::size_t m, const GateCostTable& costs);

/// Printed transistor totals of the per-degree comparison table
/// (rows [22], [8], [39], [25], [29], Proposed; the [39] row tag maps
/// to ref33). Only the five NIST degrees are tabulated.
std::optional<long long> printed_transistors(ArchId id, std::size_t m);

/// Row tag the per-degree table printed the values under.
std::string_view printed_row_tag(ArchId id);

/// Printed m=163 timing/ADP comparison row.
struct PrintedAdpRow {
  double critical_path_ns = 0.0;
  long long latency_cycles = 0; // as printed (evaluated at m=409; carried, flagged)
  double delay_ns = 0.0;        // as printed (critical path x 163 for every row)
  long long transistors = 0;
  double adp_1e5 = 0.0;
  std::optional<double> reduction_area_pct;
  std::optional<double> reduction_adp_pct;
};

std::optional<PrintedAdpRow> printed_adp_row(ArchId id);

/// One (architecture, m) cell of the report. ADP and reductions are
/// derived quantities; they are recomputed from these fields on demand.
struct CostRow {
  ArchId arch{};
  std::size_t m = 0;
  long long transistors = 0; // formula-derived, mode-priced
  std::optional<long long> transistors_printed_per_m;
  std::optional<long long> transistors_printed_adp; // m=163 table only
  bool discrepancy = false; // printed per-m value irreconcilable with formula
  double critical_path_ns = 0.0;
  long long latency_cycles = 0;

  double total_delay_ns() const { return critical_path_ns * static_cast<double>(latency_cycles); }
  /// The printed comparison's delay convention: m cycles for every row.
  double paper_delay_ns() const { return critical_path_ns * static_cast<double>(m); }
  /// Transistor value the printed comparison used at this cell.
  long long transistors_effective() const;
  double adp() const { return static_cast<double>(transistors) * total_delay_ns(); }
  double adp_paper() const { return static_cast<double>(transistors_effective()) * paper_delay_ns(); }
};

struct CostReport {
  std::vector<std::size_t> ms;      // transistor-table columns
  std::size_t adp_m = 163;          // timing/ADP table degree
  bool strict_nand3 = false;
  GateCostTable costs;
  std::vector<CostRow> transistor_rows; // arch-major, one per (arch, m)
  std::vector<CostRow> adp_rows;        // one per arch at adp_m

  const CostRow* find(ArchId id, std::size_t m) const;
  const CostRow* adp_row(ArchId id) const;

  /// (competitor - proposed) / competitor, in percent, from the same
  /// quantities the printed comparison used. Null for the proposed row.
  std::optional<double> reduction_area_pct(ArchId id) const;
  std::optional<double> reduction_adp_pct(ArchId id) const;
  /// Proposed-vs-[29] transistor overhead at adp_m, in percent.
  double proposed_overhead_vs_ref29_pct() const;
};

CostReport adp_report(std::span<const ArchId> archs,
                      std::span<const std::size_t> ms,
                      const GateCostTable& costs, bool strict_nand3 = false,
                      std::size_t adp_m = 163);

/// Consistency record tying the built netlist back to the formulas.
struct NetlistConsistency {
  std::size_t m = 0;
  NetlistCensus counted;
  long long census_transistors_default = 0;
  long long formula_transistors_default = 0;
  long long census_transistors_strict = 0;
  long long formula_transistors_strict = 0;
  double netlist_critical_ns = 0.0;
  double formula_critical_ns = 0.0;
  bool ok = false;
  std::string diff; // populated on mismatch
};

/// Recomputes transistor totals from the actual gate census and the
/// critical path from the netlist, and checks both against the proposed
/// architecture's formulas (default and strict pricing).
NetlistConsistency verify_against_netlist(const Netlist& nl,
                                          const GateCostTable& costs);

enum class ReportFormat { Text, Csv, Json };

std::string render_report(const CostReport& report, ReportFormat format,
                          bool paper_rows);

nlohmann::ordered_json report_to_json(const CostReport& report);

} // namespace gf2m
