#include <cmath>
#include <cstdio>
#include <sstream>

#include "gf2m/costmodel.hpp"

namespace gf2m {

namespace {

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string pct_or_dash(const std::optional<double>& v, bool paper_rows) {
  if (!v) return "-";
  if (paper_rows && *v < 0) return "-"; // printed comparison leaves these blank
  return fixed(*v, 2);
}

// Row order of each printed table, used in --paper-rows mode.
const std::array<ArchId, 6> kPerMOrder = {ArchId::Ref22, ArchId::Ref8,
                                          ArchId::Ref33, ArchId::Ref25,
                                          ArchId::Ref29, ArchId::Proposed};
const std::array<ArchId, 6> kAdpOrder = {ArchId::Ref33, ArchId::Ref22,
                                         ArchId::Ref8,  ArchId::Ref25,
                                         ArchId::Ref29, ArchId::Proposed};

std::vector<ArchId> row_order(const CostReport& report, bool paper_rows,
                              bool adp_table) {
  std::vector<ArchId> order;
  const auto& preferred = adp_table ? kAdpOrder : kPerMOrder;
  if (paper_rows) {
    for (ArchId id : preferred)
      if (report.adp_row(id)) order.push_back(id);
  } else {
    for (const CostRow& r : report.adp_rows) order.push_back(r.arch);
  }
  return order;
}

void render_text(const CostReport& report, bool paper_rows, std::ostream& os) {
  os << "Transistor counts by field degree ("
     << (report.strict_nand3 ? "strict NAND3 pricing, 112m variant"
                             : "default NAND pricing")
     << ")\n";
  os << "  values are formula-derived; '!' marks rows whose printed totals"
        " cannot be reconciled (printed value shown alongside)\n";
  for (ArchId id : row_order(report, paper_rows, false)) {
    os << "  " << printed_row_tag(id);
    for (std::size_t m : report.ms) {
      const CostRow* r = report.find(id, m);
      if (!r) continue;
      os << "  m=" << m << ": " << r->transistors;
      if (r->discrepancy)
        os << " !printed " << *r->transistors_printed_per_m;
    }
    os << "\n";
  }

  os << "\nTiming and area-delay comparison at m = " << report.adp_m << "\n";
  os << "  arch        crit(ns)  latency  delay(ns)  transistors      ADP(x1e5)"
        "  redArea%  redADP%\n";
  for (ArchId id : row_order(report, paper_rows, true)) {
    const CostRow* r = report.adp_row(id);
    if (!r) continue;
    std::ostringstream trans;
    trans << r->transistors;
    if (r->discrepancy) trans << " !" << r->transistors_effective();
    char line[256];
    std::snprintf(line, sizeof(line),
                  "  %-10s  %-8s  %-7lld  %-9s  %-15s  %-9s  %-8s  %s\n",
                  std::string(arch_name(id)).c_str(),
                  fixed(r->critical_path_ns, 2).c_str(), r->latency_cycles,
                  fixed(r->total_delay_ns(), 2).c_str(), trans.str().c_str(),
                  fixed(r->adp_paper() / 1e5, 1).c_str(),
                  pct_or_dash(report.reduction_area_pct(id), paper_rows).c_str(),
                  pct_or_dash(report.reduction_adp_pct(id), paper_rows).c_str());
    os << line;
  }
  os << "\nNotes:\n";
  os << "  - flagged rows ([8], [22], [33]): printed transistor totals do not"
        " follow from their gate-count formulas under this cost table; both"
        " values are carried, neither is corrected.\n";
  os << "  - the per-degree table prints the [33] row under the tag [39].\n";
  os << "  - ADP column uses the printed comparison's delay convention"
        " (critical path x m cycles) and, for flagged rows, the printed"
        " transistor totals; machine formats also carry the fully"
        " formula-derived ADP.\n";
  if (report.adp_row(ArchId::Proposed) && report.adp_row(ArchId::Ref29))
    os << "  - proposed transistor overhead vs [29] at m=" << report.adp_m
       << ": " << fixed(report.proposed_overhead_vs_ref29_pct(), 2) << "%\n";
}

void render_csv(const CostReport& report, bool paper_rows, std::ostream& os) {
  os << "table,arch,m,transistors_formula,transistors_printed,discrepancy,"
        "critical_path_ns,latency_cycles,delay_ns,adp_formula,adp_paper,"
        "reduction_area_pct,reduction_adp_pct\n";
  auto emit = [&os](const CostRow& r, const char* table,
                    std::optional<double> red_a, std::optional<double> red_d) {
    os << table << ',' << arch_name(r.arch) << ',' << r.m << ','
       << r.transistors << ',';
    if (r.transistors_printed_per_m) os << *r.transistors_printed_per_m;
    os << ',' << (r.discrepancy ? 1 : 0) << ',' << fixed(r.critical_path_ns, 4)
       << ',' << r.latency_cycles << ',' << fixed(r.total_delay_ns(), 4) << ','
       << fixed(r.adp(), 4) << ',' << fixed(r.adp_paper(), 4) << ',';
    if (red_a) os << fixed(*red_a, 4);
    os << ',';
    if (red_d) os << fixed(*red_d, 4);
    os << '\n';
  };
  for (ArchId id : row_order(report, paper_rows, false))
    for (std::size_t m : report.ms)
      if (const CostRow* r = report.find(id, m))
        emit(*r, "transistors", std::nullopt, std::nullopt);
  for (ArchId id : row_order(report, paper_rows, true))
    if (const CostRow* r = report.adp_row(id))
      emit(*r, "adp", report.reduction_area_pct(id), report.reduction_adp_pct(id));
}

nlohmann::ordered_json row_to_json(const CostReport& report, const CostRow& r,
                                   bool adp_table) {
  nlohmann::ordered_json j;
  j["arch"] = arch_name(r.arch);
  j["printed_row_tag"] = printed_row_tag(r.arch);
  j["m"] = r.m;
  j["transistors_formula"] = r.transistors;
  if (r.transistors_printed_per_m)
    j["transistors_printed"] = *r.transistors_printed_per_m;
  else
    j["transistors_printed"] = nullptr;
  j["discrepancy"] = r.discrepancy;
  j["critical_path_ns"] = r.critical_path_ns;
  j["latency_cycles"] = r.latency_cycles;
  j["delay_ns"] = r.total_delay_ns();
  j["adp_formula"] = r.adp();
  if (adp_table) {
    if (r.transistors_printed_adp)
      j["transistors_printed_adp_table"] = *r.transistors_printed_adp;
    j["transistors_effective"] = r.transistors_effective();
    j["paper_delay_ns"] = r.paper_delay_ns();
    j["adp_paper"] = r.adp_paper();
    auto red_a = report.reduction_area_pct(r.arch);
    auto red_d = report.reduction_adp_pct(r.arch);
    j["reduction_area_pct"] = red_a ? nlohmann::ordered_json(*red_a)
                                    : nlohmann::ordered_json(nullptr);
    j["reduction_adp_pct"] = red_d ? nlohmann::ordered_json(*red_d)
                                   : nlohmann::ordered_json(nullptr);
  }
  return j;
}

} // namespace

nlohmann::ordered_json report_to_json(const CostReport& report) {
  nlohmann::ordered_json doc;
  doc["cost_table"] = {
      {"transistors",
       {{"NAND2", report.costs.nand2},
        {"NAND3", report.costs.nand3},
        {"AND2", report.costs.and2},
        {"XOR2", report.costs.xor2},
        {"XNOR2", report.costs.xnor2},
        {"MUX21", report.costs.mux21},
        {"DFF", report.costs.dff}}},
      {"delays_ns",
       {{"NAND2", report.costs.t_nand2},
        {"AND2", report.costs.t_and2},
        {"XOR2", report.costs.t_xor2},
        {"XNOR2", report.costs.t_xnor2},
        {"MUX21", report.costs.t_mux21},
        {"DFF", report.costs.t_dff}}}};
  doc["nand_pricing"] = report.strict_nand3 ? "strict-nand3" : "default";
  doc["transistor_table"] = nlohmann::ordered_json::array();
  for (const CostRow& r : report.transistor_rows)
    doc["transistor_table"].push_back(row_to_json(report, r, false));
  doc["adp_table"] = {{"m", report.adp_m},
                      {"rows", nlohmann::ordered_json::array()}};
  for (const CostRow& r : report.adp_rows)
    doc["adp_table"]["rows"].push_back(row_to_json(report, r, true));
  doc["proposed_overhead_vs_ref29_pct"] = report.proposed_overhead_vs_ref29_pct();
  return doc;
}

std::string render_report(const CostReport& report, ReportFormat format,
                          bool paper_rows) {
  if (format == ReportFormat::Json) return report_to_json(report).dump(2) + "\n";
  std::ostringstream os;
  if (format == ReportFormat::Text)
    render_text(report, paper_rows, os);
  else
    render_csv(report, paper_rows, os);
  return os.str();
}

} // namespace gf2m
