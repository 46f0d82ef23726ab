#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gf2m/costmodel.hpp"
#include "gf2m/field.hpp"
#include "gf2m/netlist.hpp"
#include "gf2m/serial.hpp"
#include "gf2m/trace_io.hpp"

namespace {

using namespace gf2m;

struct FieldOpts {
  std::string nist;
  std::size_t m = 0;
  std::string poly_hex;
};

void add_field_options(CLI::App* cmd, FieldOpts& opts, bool allow_all = false) {
  auto* nist = cmd->add_option(
      "--nist", opts.nist,
      allow_all ? "NIST field id (b163..b571) or 'all'" : "NIST field id (b163..b571)");
  auto* m = cmd->add_option("--m", opts.m, "field degree m");
  cmd->add_option("--poly", opts.poly_hex,
                  "reduction vector f - x^m as hex (defaulted for cataloged m)");
  nist->excludes(m);
  m->excludes(nist);
}

IrreduciblePoly resolve_field(const FieldOpts& opts) {
  if (!opts.nist.empty()) {
    auto id = parse_nist_id(opts.nist);
    if (!id) throw ParseError("--nist: unknown field id '" + opts.nist + "'");
    return nist_poly(*id);
  }
  if (opts.m == 0)
    throw ParseError("--nist or --m: a field must be selected");
  if (!opts.poly_hex.empty()) {
    try {
      return IrreduciblePoly::from_hex(opts.m, opts.poly_hex);
    } catch (const Error& e) {
      throw ParseError(std::string("--poly: ") + e.what());
    }
  }
  if (auto poly = default_poly(opts.m)) return *poly;
  throw ParseError("--poly: required for m = " + std::to_string(opts.m) +
                   " (no catalog default)");
}

FieldElement parse_element(const std::string& hex, std::size_t m,
                           const char* flag) {
  try {
    return BitVec::from_hex(hex, m);
  } catch (const Error& e) {
    throw ParseError(std::string(flag) + ": " + e.what());
  }
}

enum class Engine { Reference, Serial, SerialNand, Gate };

Engine parse_engine(const std::string& name) {
  if (name == "reference") return Engine::Reference;
  if (name == "serial") return Engine::Serial;
  if (name == "serial-nand") return Engine::SerialNand;
  if (name == "gate") return Engine::Gate;
  throw ParseError("--engine: unknown engine '" + name + "'");
}

FieldElement run_engine(Engine engine, const FieldElement& a,
                        const FieldElement& b, const IrreduciblePoly& f,
                        const Netlist* nl) {
  switch (engine) {
    case Engine::Reference: return mul_reference(a, b, f);
    case Engine::Serial: return mul_serial(a, b, f, XorMode::Plain).product;
    case Engine::SerialNand: return mul_serial(a, b, f, XorMode::NandOnly).product;
    case Engine::Gate: return simulate_product(*nl, a, b);
  }
  throw Error("unreachable");
}

ReportFormat parse_format(const std::string& name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "json" || name == "json-like") return ReportFormat::Json;
  throw ParseError("--format: unknown format '" + name + "'");
}

GateCostTable load_costs(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("--costs: cannot open '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("--costs: ") + e.what());
  }
  GateCostTable t;
  if (doc.contains("transistors")) {
    const auto& tr = doc["transistors"];
    t.nand2 = tr.value("NAND2", t.nand2);
    t.nand3 = tr.value("NAND3", t.nand3);
    t.and2 = tr.value("AND2", t.and2);
    t.xor2 = tr.value("XOR2", t.xor2);
    t.xnor2 = tr.value("XNOR2", t.xnor2);
    t.mux21 = tr.value("MUX21", t.mux21);
    t.dff = tr.value("DFF", t.dff);
  }
  if (doc.contains("delays_ns")) {
    const auto& d = doc["delays_ns"];
    t.t_nand2 = d.value("NAND2", t.t_nand2);
    t.t_and2 = d.value("AND2", t.t_and2);
    t.t_xor2 = d.value("XOR2", t.t_xor2);
    t.t_xnor2 = d.value("XNOR2", t.t_xnor2);
    t.t_mux21 = d.value("MUX21", t.t_mux21);
    t.t_dff = d.value("DFF", t.t_dff);
  }
  if (!t.valid())
    throw ParseError("--costs: all cost table entries must be strictly positive");
  return t;
}

// ---- verify helpers ----------------------------------------------------

struct VerifyStats {
  std::size_t passed = 0;
  std::size_t failed = 0;
};

bool engines_agree(const FieldElement& a, const FieldElement& b,
                   const IrreduciblePoly& f, const Netlist& nl,
                   std::string& mismatch) {
  FieldElement ref = mul_reference(a, b, f);
  const std::pair<Engine, const char*> others[] = {
      {Engine::Serial, "serial"},
      {Engine::SerialNand, "serial-nand"},
      {Engine::Gate, "gate"}};
  for (auto [engine, name] : others) {
    FieldElement got = run_engine(engine, a, b, f, &nl);
    if (got != ref) {
      mismatch = std::string("a=") + a.to_hex() + " b=" + b.to_hex() +
                 " reference=" + ref.to_hex() + " " + name + "=" + got.to_hex();
      return false;
    }
  }
  return true;
}

bool verify_exhaustive_m4(VerifyStats& stats) {
  IrreduciblePoly f = *default_poly(4);
  Netlist nl = Netlist::build(f);
  std::size_t ok = 0;
  for (std::uint64_t ai = 0; ai < 16; ++ai) {
    for (std::uint64_t bi = 0; bi < 16; ++bi) {
      FieldElement a = BitVec::from_u64(ai, 4);
      FieldElement b = BitVec::from_u64(bi, 4);
      std::string mismatch;
      if (engines_agree(a, b, f, nl, mismatch)) {
        ++ok;
      } else {
        std::cout << "exhaustive-m4: FAIL " << mismatch << "\n";
        ++stats.failed;
        return false;
      }
    }
  }
  std::cout << "exhaustive-m4: " << ok << "/256 pass\n";
  ++stats.passed;
  return true;
}

bool verify_random(const IrreduciblePoly& f, std::size_t n, std::uint64_t seed,
                   const std::string& label, VerifyStats& stats) {
  Netlist nl = Netlist::build(f);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    FieldElement a = random_element(f.m, rng);
    FieldElement b = random_element(f.m, rng);
    std::string mismatch;
    if (!engines_agree(a, b, f, nl, mismatch)) {
      std::cout << "random " << label << ": FAIL at pair " << i << " (seed=" << seed
                << ") " << mismatch << "\n";
      ++stats.failed;
      return false;
    }
  }
  std::cout << "random " << label << ": " << n << "/" << n
            << " pass (seed=" << seed << ")\n";
  ++stats.passed;
  return true;
}

bool verify_structural(const IrreduciblePoly& f, const std::string& label,
                       const GateCostTable& costs, VerifyStats& stats) {
  Netlist nl = Netlist::build(f);
  NetlistConsistency rec = verify_against_netlist(nl, costs);
  if (rec.ok) {
    std::cout << "structural " << label << ": pass (m=" << rec.m
              << ", transistors=" << rec.census_transistors_default << ")\n";
    ++stats.passed;
  } else {
    std::cout << "structural " << label << ": FAIL\n" << rec.diff;
    ++stats.failed;
  }
  return rec.ok;
}

bool verify_file(const std::string& path, const GateCostTable& costs,
                 VerifyStats& stats) {
  try {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    nlohmann::json doc;
    in >> doc;
    Netlist nl = Netlist::from_json(doc);
    NetlistConsistency rec = verify_against_netlist(nl, costs);
    if (rec.ok) {
      std::cout << "check-file " << path << ": pass\n";
      ++stats.passed;
      return true;
    }
    std::cout << "check-file " << path << ": FAIL\n" << rec.diff;
  } catch (const std::exception& e) {
    std::cout << "check-file " << path << ": FAIL (" << e.what() << ")\n";
  }
  ++stats.failed;
  return false;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial-in parallel-out GF(2^m) multiplier toolkit"};
  app.require_subcommand(1);

  // mul ------------------------------------------------------------------
  FieldOpts mul_field;
  std::string mul_a, mul_b, mul_engine = "serial";
  auto* mul_cmd = app.add_subcommand("mul", "Multiply two field elements");
  add_field_options(mul_cmd, mul_field);
  mul_cmd->add_option("--a", mul_a, "operand A (hex)")->required();
  mul_cmd->add_option("--b", mul_b, "operand B (hex)")->required();
  mul_cmd->add_option("--engine", mul_engine,
                      "reference | serial | serial-nand | gate");

  // trace ----------------------------------------------------------------
  FieldOpts trace_field;
  std::string trace_a, trace_b, trace_engine = "serial", trace_format = "text";
  auto* trace_cmd =
      app.add_subcommand("trace", "Per-cycle trace of the serial multiplier");
  add_field_options(trace_cmd, trace_field);
  trace_cmd->add_option("--a", trace_a, "operand A (hex)")->required();
  trace_cmd->add_option("--b", trace_b, "operand B (hex)")->required();
  trace_cmd->add_option("--engine", trace_engine, "serial | serial-nand | gate");
  trace_cmd->add_option("--format", trace_format, "text | csv | json");

  // netlist ----------------------------------------------------------------
  FieldOpts nl_field;
  bool nl_census = false;
  std::string nl_out;
  auto* nl_cmd = app.add_subcommand("netlist", "Emit the gate-level netlist");
  add_field_options(nl_cmd, nl_field);
  nl_cmd->add_flag("--census", nl_census, "print only the gate census");
  nl_cmd->add_option("-o,--output", nl_out, "write the document to a file");

  // verify -----------------------------------------------------------------
  FieldOpts verify_field;
  bool v_exhaustive = false, v_structural = false;
  std::size_t v_random = 0;
  std::string v_check_file;
  std::optional<std::uint64_t> v_seed;
  auto* verify_cmd =
      app.add_subcommand("verify", "Cross-engine and structural verification");
  add_field_options(verify_cmd, verify_field, /*allow_all=*/true);
  verify_cmd->add_flag("--exhaustive-m4", v_exhaustive,
                       "all 256 GF(2^4) pairs across every engine");
  verify_cmd->add_option("--random", v_random,
                         "N random pairs across every engine (needs a field)");
  verify_cmd->add_flag("--structural", v_structural,
                       "check built netlists against the count/timing formulas");
  verify_cmd->add_option("--check-file", v_check_file,
                         "verify an exported netlist document");
  verify_cmd->add_option("--seed", v_seed, "RNG seed (printed either way)");

  // report -----------------------------------------------------------------
  std::size_t rep_m = 163;
  bool rep_strict = false, rep_paper_rows = false;
  std::string rep_format = "text", rep_costs_path;
  auto* rep_cmd =
      app.add_subcommand("report", "Transistor-count and timing/ADP comparison");
  rep_cmd->add_option("--m", rep_m, "degree for the timing/ADP table");
  rep_cmd->add_flag("--strict-nand3", rep_strict,
                    "price 3-input NANDs at their own transistor cost");
  rep_cmd->add_flag("--paper-rows", rep_paper_rows,
                    "restrict to the published row/column sets");
  rep_cmd->add_option("--format", rep_format, "text | csv | json");
  rep_cmd->add_option("--costs", rep_costs_path,
                      "JSON file overriding the gate cost table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (mul_cmd->parsed()) {
      IrreduciblePoly f = resolve_field(mul_field);
      FieldElement a = parse_element(mul_a, f.m, "--a");
      FieldElement b = parse_element(mul_b, f.m, "--b");
      Engine engine = parse_engine(mul_engine);
      std::optional<Netlist> nl;
      if (engine == Engine::Gate) nl = Netlist::build(f);
      std::cout << run_engine(engine, a, b, f, nl ? &*nl : nullptr).to_hex()
                << "\n";
      return 0;
    }

    if (trace_cmd->parsed()) {
      IrreduciblePoly f = resolve_field(trace_field);
      FieldElement a = parse_element(trace_a, f.m, "--a");
      FieldElement b = parse_element(trace_b, f.m, "--b");
      std::vector<TraceRecord> trace;
      if (trace_engine == "gate") {
        trace = gate_trace(Netlist::build(f), a, b);
      } else if (trace_engine == "serial" || trace_engine == "serial-nand") {
        XorMode mode = trace_engine == "serial-nand" ? XorMode::NandOnly
                                                     : XorMode::Plain;
        trace = mul_serial(a, b, f, mode).trace;
      } else {
        throw ParseError("--engine: unknown trace engine '" + trace_engine + "'");
      }
      ReportFormat format = parse_format(trace_format);
      if (format == ReportFormat::Text)
        std::cout << trace_to_text(trace);
      else if (format == ReportFormat::Csv)
        std::cout << trace_to_csv(trace);
      else
        std::cout << trace_to_json(trace).dump(2) << "\n";
      return 0;
    }

    if (nl_cmd->parsed()) {
      IrreduciblePoly f = resolve_field(nl_field);
      Netlist nl = Netlist::build(f);
      if (nl_census) {
        NetlistCensus c = census(nl);
        std::cout << "m=" << nl.m() << "\n"
                  << "AND2=" << c.and2 << "\n"
                  << "NAND=" << c.nand_total() << " (NAND3=" << c.nand3
                  << ", NAND2=" << c.nand2 << ")\n"
                  << "DFF=" << c.dff << "\n"
                  << "XOR=" << c.xor2 << "\n"
                  << "XNOR=" << c.xnor2 << "\n"
                  << "MUX=" << c.mux << "\n";
        return 0;
      }
      std::string doc = nl.to_json_text();
      if (nl_out.empty()) {
        std::cout << doc;
      } else {
        std::ofstream out(nl_out, std::ios::binary);
        if (!out) throw ParseError("--output: cannot open '" + nl_out + "'");
        out << doc;
        std::cerr << "wrote " << nl_out << "\n";
      }
      return 0;
    }

    if (verify_cmd->parsed()) {
      GateCostTable costs;
      VerifyStats stats;
      bool any_mode = v_exhaustive || v_random > 0 || v_structural ||
                      !v_check_file.empty();
      if (!any_mode) { // default suite
        v_exhaustive = true;
        v_structural = true;
        if (verify_field.nist.empty() && verify_field.m == 0)
          verify_field.nist = "all";
      }
      std::uint64_t seed = v_seed ? *v_seed : std::random_device{}();

      if (v_exhaustive) verify_exhaustive_m4(stats);

      if (v_random > 0) {
        if (verify_field.nist == "all")
          throw ParseError("--random: pick a single field, not 'all'");
        IrreduciblePoly f = resolve_field(verify_field);
        std::string label = verify_field.nist.empty()
                                ? "m=" + std::to_string(f.m)
                                : verify_field.nist;
        verify_random(f, v_random, seed, label, stats);
      }

      if (v_structural) {
        if (verify_field.nist == "all") {
          for (NistFieldId id : all_nist_fields())
            verify_structural(nist_poly(id), std::string(nist_name(id)), costs,
                              stats);
        } else {
          IrreduciblePoly f = resolve_field(verify_field);
          verify_structural(f, "m=" + std::to_string(f.m), costs, stats);
        }
      }

      if (!v_check_file.empty()) verify_file(v_check_file, costs, stats);

      std::cout << "verify: " << stats.passed << "/"
                << (stats.passed + stats.failed) << " checks pass\n";
      return stats.failed == 0 ? 0 : 1;
    }

    if (rep_cmd->parsed()) {
      GateCostTable costs =
          rep_costs_path.empty() ? GateCostTable{} : load_costs(rep_costs_path);
      static const std::array<std::size_t, 5> nist_ms = {163, 233, 283, 409, 571};
      CostReport report = adp_report(all_archs(), nist_ms, costs, rep_strict,
                                     rep_m);
      std::cout << render_report(report, parse_format(rep_format), rep_paper_rows);
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
