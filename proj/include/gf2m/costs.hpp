#pragma once

namespace gf2m {

/// Transistor counts and gate delays of a 65 nm standard-cell library.
/// The NAND3 has no published delay of its own; the timing model prices
/// every NAND level at the 2-input NAND delay.
struct GateCostTable {
  // transistors
  int nand2 = 4;
  int nand3 = 8;
  int and2 = 6;
  int xor2 = 12;
  int xnor2 = 12;
  int mux21 = 12;
  int dff = 30;
  // delays (ns)
  double t_nand2 = 0.02;
  double t_and2 = 0.03;
  double t_xor2 = 0.04;
  double t_xnor2 = 0.04;
  double t_mux21 = 0.03;
  double t_dff = 0.08;

  /// All entries strictly positive.
  bool valid() const {
    return nand2 > 0 && nand3 > 0 && and2 > 0 && xor2 > 0 && xnor2 > 0 &&
           mux21 > 0 && dff > 0 && t_nand2 > 0 && t_and2 > 0 && t_xor2 > 0 &&
           t_xnor2 > 0 && t_mux21 > 0 && t_dff > 0;
  }
};

} // namespace gf2m
