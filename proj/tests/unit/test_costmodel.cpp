#include <doctest.h>

#include <cmath>

#include "gf2m/costmodel.hpp"

using namespace gf2m;

namespace {
const GateCostTable kCosts;
constexpr std::array<std::size_t, 5> kNistMs = {163, 233, 283, 409, 571};

double round_to(double v, int digits) {
  double scale = std::pow(10.0, digits);
  return std::round(v * scale) / scale;
}
} // namespace

TEST_CASE("default cost table carries the 65nm constants") {
  CHECK(kCosts.nand2 == 4);
  CHECK(kCosts.nand3 == 8);
  CHECK(kCosts.and2 == 6);
  CHECK(kCosts.xor2 == 12);
  CHECK(kCosts.xnor2 == 12);
  CHECK(kCosts.mux21 == 12);
  CHECK(kCosts.dff == 30);
  CHECK(kCosts.t_nand2 == 0.02);
  CHECK(kCosts.t_and2 == 0.03);
  CHECK(kCosts.t_xor2 == 0.04);
  CHECK(kCosts.t_xnor2 == 0.04);
  CHECK(kCosts.t_mux21 == 0.03);
  CHECK(kCosts.t_dff == 0.08);
  CHECK(kCosts.valid());
}

TEST_CASE("transistor counts reproduce the published linear rows exactly") {
  const long long proposed[] = {16952, 24232, 29432, 42536, 59384};
  const long long ref29[] = {14996, 21436, 26036, 37628, 52532};
  const long long ref25[] = {20538, 29358, 35658, 51534, 71946};
  for (std::size_t i = 0; i < kNistMs.size(); ++i) {
    std::size_t m = kNistMs[i];
    CHECK(transistor_count(ArchId::Proposed, m, kCosts) == proposed[i]);
    CHECK(transistor_count(ArchId::Ref29, m, kCosts) == ref29[i]);
    CHECK(transistor_count(ArchId::Ref25, m, kCosts) == ref25[i]);
    // closed forms
    CHECK(transistor_count(ArchId::Proposed, m, kCosts) ==
          104 * static_cast<long long>(m));
    CHECK(transistor_count(ArchId::Ref29, m, kCosts) ==
          92 * static_cast<long long>(m));
    CHECK(transistor_count(ArchId::Ref25, m, kCosts) ==
          126 * static_cast<long long>(m));
  }
}

TEST_CASE("strict NAND3 pricing is the labeled 112m variant") {
  CHECK(transistor_count(ArchId::Proposed, 4, kCosts, false) == 416);
  CHECK(transistor_count(ArchId::Proposed, 4, kCosts, true) == 448);
  CHECK(transistor_count(ArchId::Proposed, 163, kCosts, true) == 112 * 163);
  // the NAND split only exists in the proposed design
  CHECK(transistor_count(ArchId::Ref29, 163, kCosts, true) ==
        transistor_count(ArchId::Ref29, 163, kCosts, false));
}

TEST_CASE("timing formulas") {
  Timing p = timing(ArchId::Proposed, 163, kCosts);
  CHECK(p.critical_path_ns == doctest::Approx(0.14));
  CHECK(p.latency_cycles == 163);
  CHECK(p.total_delay_ns == doctest::Approx(22.82));

  Timing r29 = timing(ArchId::Ref29, 163, kCosts);
  CHECK(r29.critical_path_ns == doctest::Approx(0.10));
  CHECK(r29.latency_cycles == 163);
  CHECK(r29.total_delay_ns == doctest::Approx(16.3));

  Timing r25 = timing(ArchId::Ref25, 163, kCosts);
  CHECK(r25.critical_path_ns == doctest::Approx(0.07));
  CHECK(r25.latency_cycles == 163);
  CHECK(r25.total_delay_ns == doctest::Approx(11.41));

  CHECK(timing(ArchId::Ref33, 163, kCosts).latency_cycles == 326);
  CHECK(timing(ArchId::Ref22, 163, kCosts).latency_cycles == 82);
  CHECK(timing(ArchId::Ref22, 409, kCosts).latency_cycles == 205);
  CHECK(timing(ArchId::Ref8, 163, kCosts).latency_cycles == 325);
  CHECK(timing(ArchId::Ref22, 163, kCosts).critical_path_ns ==
        doctest::Approx(0.11));
}

TEST_CASE("architecture parsing") {
  CHECK(parse_arch("proposed") == ArchId::Proposed);
  CHECK(parse_arch("[29]") == ArchId::Ref29);
  CHECK(parse_arch("ref33") == ArchId::Ref33);
  CHECK(!parse_arch("ref99"));
  CHECK(printed_row_tag(ArchId::Ref33) == "[39]");
  CHECK(printed_row_tag(ArchId::Ref29) == "[29]");
}

TEST_CASE("counts and ADP grow strictly with m; linear rows double exactly") {
  for (ArchId id : all_archs()) {
    long long prev = 0;
    double prev_adp = 0.0;
    for (std::size_t m : kNistMs) {
      long long t = transistor_count(id, m, kCosts);
      Timing tm = timing(id, m, kCosts);
      double adp = static_cast<double>(t) * tm.total_delay_ns;
      CHECK(t > prev);
      CHECK(adp > prev_adp);
      prev = t;
      prev_adp = adp;
    }
  }
  for (ArchId id : {ArchId::Proposed, ArchId::Ref25, ArchId::Ref29})
    CHECK(transistor_count(id, 326, kCosts) ==
          2 * transistor_count(id, 163, kCosts));
  for (ArchId id : {ArchId::Ref8, ArchId::Ref22, ArchId::Ref33}) {
    double ratio = static_cast<double>(transistor_count(id, 326, kCosts)) /
                   static_cast<double>(transistor_count(id, 163, kCosts));
    CHECK(ratio > 3.0);
  }
}

TEST_CASE("discrepancy flags fire for exactly the three quadratic rows") {
  auto report = adp_report(all_archs(), kNistMs, kCosts);
  for (ArchId id : all_archs()) {
    bool expect = id == ArchId::Ref8 || id == ArchId::Ref22 || id == ArchId::Ref33;
    for (std::size_t m : kNistMs) {
      const CostRow* row = report.find(id, m);
      REQUIRE(row != nullptr);
      REQUIRE(row->transistors_printed_per_m.has_value());
      CHECK(row->discrepancy == expect);
    }
  }
}

TEST_CASE("ADP report reproduces the published m=163 comparison") {
  auto report = adp_report(all_archs(), kNistMs, kCosts);
  const CostRow* prop = report.adp_row(ArchId::Proposed);
  REQUIRE(prop != nullptr);
  CHECK(prop->adp() == doctest::Approx(16952 * 22.82).epsilon(1e-9));
  CHECK(std::abs(prop->adp() / 1e5 - 3.8) <= 0.1); // printed one-decimal 3.8

  CHECK(round_to(*report.reduction_area_pct(ArchId::Ref25), 2) == 17.46);

  // flagged rows anchor on their printed transistors and the printed
  // delay convention (critical path x m cycles)
  const CostRow* r33 = report.adp_row(ArchId::Ref33);
  REQUIRE(r33 != nullptr);
  CHECK(r33->transistors_effective() == 48176928);
  CHECK(r33->paper_delay_ns() == doctest::Approx(11.41));
  CHECK(round_to(*report.reduction_adp_pct(ArchId::Ref33), 2) == 99.93);

  CHECK(round_to(*report.reduction_area_pct(ArchId::Ref33), 2) == 99.96);
  CHECK(std::abs(*report.reduction_area_pct(ArchId::Ref22) - 99.91) <= 0.01);
  CHECK(std::abs(*report.reduction_area_pct(ArchId::Ref8) - 97.97) <= 0.01);

  // proposed-vs-[29] overhead, recomputed: (16952-14996)/16952
  CHECK(round_to(report.proposed_overhead_vs_ref29_pct(), 2) == 11.54);

  // reductions are derived on demand, none for the proposed row
  CHECK(!report.reduction_area_pct(ArchId::Proposed));
  CHECK(!report.reduction_adp_pct(ArchId::Proposed));
  // [29] is cheaper than proposed: signed values, not clamped
  CHECK(*report.reduction_area_pct(ArchId::Ref29) < 0.0);
}

TEST_CASE("printed ADP-table rows are carried verbatim") {
  auto row = printed_adp_row(ArchId::Ref22);
  REQUIRE(row.has_value());
  CHECK(row->transistors == 21146118);
  CHECK(row->delay_ns == 17.93);
  CHECK(row->latency_cycles == 205);
  CHECK(*row->reduction_adp_pct == 99.89);
  CHECK(printed_transistors(ArchId::Ref33, 409) == 15055290);
  CHECK(!printed_transistors(ArchId::Ref33, 100));
}

TEST_CASE("verify_against_netlist ties the census to the formulas") {
  IrreduciblePoly f163 = nist_poly(NistFieldId::B163);
  NetlistConsistency rec = verify_against_netlist(Netlist::build(f163), kCosts);
  CHECK(rec.ok);
  CHECK(rec.census_transistors_default == 16952);
  CHECK(rec.census_transistors_strict == 112 * 163);
  CHECK(rec.netlist_critical_ns == doctest::Approx(0.14));

  NetlistConsistency rec4 =
      verify_against_netlist(Netlist::build(*default_poly(4)), kCosts);
  CHECK(rec4.ok);
  CHECK(rec4.census_transistors_default == 416);
  CHECK(rec4.census_transistors_strict == 448);
}

TEST_CASE("a tampered netlist is reported with a census diff") {
  Netlist nl = Netlist::build(*default_poly(4));
  nlohmann::json doc = nlohmann::json::parse(nl.to_json_text());
  doc["gates"][4]["kind"] = "AND2"; // one NAND2 flipped to AND2
  Netlist tampered = Netlist::from_json(doc);
  NetlistConsistency rec = verify_against_netlist(tampered, kCosts);
  CHECK(!rec.ok);
  CHECK(rec.diff.find("NAND") != std::string::npos);
}

TEST_CASE("report rendering carries both value sets") {
  auto report = adp_report(all_archs(), kNistMs, kCosts);
  std::string text = render_report(report, ReportFormat::Text, true);
  CHECK(text.find("16952") != std::string::npos);
  CHECK(text.find("[39]") != std::string::npos);

  nlohmann::json doc = report_to_json(report);
  bool found = false;
  for (const auto& row : doc["adp_table"]["rows"]) {
    if (row["arch"] != "[33]") continue;
    found = true;
    CHECK(row["transistors_formula"].get<long long>() == 288LL * 163 * 163);
    CHECK(row["transistors_printed"].get<long long>() == 2391210);
    CHECK(row["transistors_printed_adp_table"].get<long long>() == 48176928);
    CHECK(row["discrepancy"].get<bool>());
  }
  CHECK(found);

  std::string csv = render_report(report, ReportFormat::Csv, false);
  CHECK(csv.find("transistors_formula") != std::string::npos);
}

TEST_CASE("adp_report validates its inputs") {
  CHECK_THROWS(adp_report({}, kNistMs, kCosts));
  CHECK_THROWS(transistor_count(ArchId::Proposed, 1, kCosts));
}
