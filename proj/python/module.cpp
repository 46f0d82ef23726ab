#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gf2m/costmodel.hpp"
#include "gf2m/field.hpp"
#include "gf2m/netlist.hpp"
#include "gf2m/serial.hpp"
#include "gf2m/trace_io.hpp"

namespace py = pybind11;
using namespace gf2m;

namespace {

IrreduciblePoly resolve(std::size_t m, const std::string& poly_hex) {
  if (!poly_hex.empty()) return IrreduciblePoly::from_hex(m, poly_hex);
  if (auto poly = default_poly(m)) return *poly;
  throw ParseError("no catalog polynomial for m = " + std::to_string(m) +
                   "; pass poly_hex");
}

std::string py_mul(std::size_t m, const std::string& poly_hex,
                   const std::string& a_hex, const std::string& b_hex,
                   const std::string& engine) {
  IrreduciblePoly f = resolve(m, poly_hex);
  FieldElement a = BitVec::from_hex(a_hex, m);
  FieldElement b = BitVec::from_hex(b_hex, m);
  if (engine == "reference") return mul_reference(a, b, f).to_hex();
  if (engine == "serial") return mul_serial(a, b, f).product.to_hex();
  if (engine == "serial-nand")
    return mul_serial(a, b, f, XorMode::NandOnly).product.to_hex();
  if (engine == "gate") return simulate_product(Netlist::build(f), a, b).to_hex();
  throw ParseError("unknown engine '" + engine + "'");
}

py::list py_trace(std::size_t m, const std::string& poly_hex,
                  const std::string& a_hex, const std::string& b_hex,
                  bool nand_form, const std::string& engine) {
  IrreduciblePoly f = resolve(m, poly_hex);
  FieldElement a = BitVec::from_hex(a_hex, m);
  FieldElement b = BitVec::from_hex(b_hex, m);
  std::vector<TraceRecord> trace;
  if (engine == "gate")
    trace = gate_trace(Netlist::build(f), a, b);
  else
    trace = mul_serial(a, b, f, nand_form ? XorMode::NandOnly : XorMode::Plain)
                .trace;
  py::list out;
  for (const TraceRecord& r : trace) {
    py::dict d;
    d["cycle"] = r.cycle;
    d["b_bit"] = r.b_bit ? 1 : 0;
    d["after_G"] = r.after_g.to_hex();
    d["after_H"] = r.after_h.to_hex();
    out.append(d);
  }
  return out;
}

py::dict py_census(std::size_t m, const std::string& poly_hex) {
  NetlistCensus c = census(Netlist::build(resolve(m, poly_hex)));
  py::dict d;
  d["AND2"] = c.and2;
  d["NAND2"] = c.nand2;
  d["NAND3"] = c.nand3;
  d["NAND"] = c.nand_total();
  d["DFF"] = c.dff;
  d["XOR"] = c.xor2;
  d["XNOR"] = c.xnor2;
  d["MUX"] = c.mux;
  return d;
}

ArchId arch_or_throw(const std::string& token) {
  if (auto id = parse_arch(token)) return *id;
  throw ParseError("unknown architecture '" + token + "'");
}

} // namespace

PYBIND11_MODULE(pygf2m, mod) {
  mod.doc() = "Serial-in parallel-out GF(2^m) multiplier: field arithmetic, "
              "gate-level simulation and the transistor/delay cost model.";

  py::register_exception<Error>(mod, "Gf2mError");

  mod.def("nist_fields", [] {
    py::dict d;
    for (NistFieldId id : all_nist_fields()) {
      IrreduciblePoly f = nist_poly(id);
      d[std::string(nist_name(id)).c_str()] =
          py::make_tuple(f.m, f.reduction.to_hex());
    }
    return d;
  });

  mod.def("add",
          [](std::size_t m, const std::string& a, const std::string& b) {
            return gf2m::add(BitVec::from_hex(a, m), BitVec::from_hex(b, m))
                .to_hex();
          },
          py::arg("m"), py::arg("a"), py::arg("b"));

  mod.def("reduce",
          [](std::size_t m, const std::string& poly_hex, const std::string& p) {
            IrreduciblePoly f = resolve(m, poly_hex);
            return gf2m::reduce(BitVec::from_hex(p, 2 * m - 1), f).to_hex();
          },
          py::arg("m"), py::arg("poly_hex"), py::arg("p"),
          "Reduce a (2m-1)-bit product modulo f.");

  mod.def("mul", &py_mul, py::arg("m"), py::arg("poly_hex"), py::arg("a"),
          py::arg("b"), py::arg("engine") = "serial",
          "Multiply two hex elements; engine: reference | serial | "
          "serial-nand | gate.");

  mod.def("nand_xor",
          [](int a, int b) { return gf2m::nand_xor(a != 0, b != 0) ? 1 : 0; },
          py::arg("a"), py::arg("b"));

  mod.def("trace", &py_trace, py::arg("m"), py::arg("poly_hex"), py::arg("a"),
          py::arg("b"), py::arg("nand_form") = false,
          py::arg("engine") = "serial");

  mod.def("census", &py_census, py::arg("m"), py::arg("poly_hex") = "");

  mod.def("netlist_json",
          [](std::size_t m, const std::string& poly_hex) {
            return Netlist::build(resolve(m, poly_hex)).to_json_text();
          },
          py::arg("m"), py::arg("poly_hex") = "");

  mod.def("critical_path_ns",
          [](std::size_t m, const std::string& poly_hex) {
            return critical_path(Netlist::build(resolve(m, poly_hex)),
                                 GateCostTable{});
          },
          py::arg("m"), py::arg("poly_hex") = "");

  mod.def("transistor_count",
          [](const std::string& arch, std::size_t m, bool strict_nand3) {
            return transistor_count(arch_or_throw(arch), m, GateCostTable{},
                                    strict_nand3);
          },
          py::arg("arch"), py::arg("m"), py::arg("strict_nand3") = false);

  mod.def("timing",
          [](const std::string& arch, std::size_t m) {
            Timing t = timing(arch_or_throw(arch), m, GateCostTable{});
            return py::make_tuple(t.critical_path_ns, t.latency_cycles,
                                  t.total_delay_ns);
          },
          py::arg("arch"), py::arg("m"),
          "Returns (critical_path_ns, latency_cycles, total_delay_ns).");

  mod.def("report_json",
          [](std::size_t adp_m, bool strict_nand3) {
            static const std::array<std::size_t, 5> ms = {163, 233, 283, 409,
                                                          571};
            CostReport rep =
                adp_report(all_archs(), ms, GateCostTable{}, strict_nand3, adp_m);
            return report_to_json(rep).dump();
          },
          py::arg("adp_m") = 163, py::arg("strict_nand3") = false);
}
